#include "diracbrush/gauss_oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "diracbrush/simd/kernels.hpp"

namespace diracbrush {

namespace {

EighthRoot snap(ComplexF v)
{
    const double k = std::nearbyint(std::arg(v) / (std::numbers::pi / 4.0));
    return EighthRoot(static_cast<long>(k));
}

GaussMu gauss_positive_b(const SL2Z& m, const ShiftClass& s)
{
    const Integer& b = m.b();
    const Integer& d = m.d();
    const Integer& q = s.q;
    const Integer& p = s.p;
    const Integer four_b = 4 * b;
    const Integer eight_b = 8 * b;
    const double inv_four_b = 1.0 / four_b.get_d();

    // -2E(n) - 1/4 = (d (2n-q)^2 + 4 b p n - b q p - b) / (4b), reduced mod 2
    constexpr std::size_t kBatch = 1024;
    std::array<double, kBatch> xs{};
    std::array<double, kBatch> ys{};
    double re = 0.0, im = 0.0, comp_re = 0.0, comp_im = 0.0;
    auto flush = [&](std::size_t count) {
        const ComplexF part = simd::sum_cexp(xs.data(), ys.data(), count);
        // batches are few; plain Kahan across them
        double y = part.real() - comp_re;
        double t = re + y;
        comp_re = (t - re) - y;
        re = t;
        y = part.imag() - comp_im;
        t = im + y;
        comp_im = (t - im) - y;
        im = t;
    };

    std::size_t fill = 0;
    Integer num, two_n_q, red;
    for (Integer n = 0; n < b; ++n) {
        two_n_q = 2 * n - q;
        num = d * two_n_q * two_n_q + four_b * p * n - b * q * p - b;
        mpz_fdiv_r(red.get_mpz_t(), num.get_mpz_t(), eight_b.get_mpz_t());
        ys[fill] = std::numbers::pi * (red.get_d() * inv_four_b);
        ++fill;
        if (fill == kBatch) {
            flush(fill);
            fill = 0;
        }
    }
    if (fill) flush(fill);

    const ComplexF v = ComplexF(re, im) / std::sqrt(b.get_d());
    GaussMu out;
    out.value = v;
    out.root = snap(v);
    out.distance = std::abs(v - out.root.value());
    return out;
}

}  // namespace

Rational E_phase(const Integer& n, const SL2Z& m, const ShiftClass& shift)
{
    if (m.b() == 0) throw DomainError("E(n) needs b != 0");
    const Rational k = Rational(n) - Rational(shift.q, Integer(2));
    return -Rational(m.d(), 2 * m.b()) * k * k - Rational(shift.p * n, Integer(2))
           + Rational(shift.q * shift.p, Integer(8));
}

GaussMu gauss_sum_mu(const SL2Z& m, const ShiftClass& shift)
{
    require_parity(m, shift);
    GaussMu out;
    if (m.b() == 0) {
        // mu(W_c;(q,p)) = e^{-i pi q(p+2c)/4} = e^{i pi pq/4} under the parity rule
        Integer k = shift.p * shift.q;
        if (m.a() == -1) k -= 2;
        out.root = EighthRoot::from_integer(k);
        out.value = out.root.value();
        out.distance = 0.0;
        return out;
    }
    if (m.b() < 0) {
        const GaussMu conj = gauss_positive_b(SL2Z(m.a(), -m.b(), -m.c(), m.d()), ShiftClass{shift.q, -shift.p});
        out.value = std::conj(conj.value);
        out.root = conj.root.inverse();
        out.distance = conj.distance;
    } else {
        out = gauss_positive_b(m, shift);
    }
    if (!(out.distance <= kSnapTolerance))
        throw NumericalError("Gauss sum for " + m.str() + " is " + std::to_string(out.distance)
                             + " away from every eighth root");
    return out;
}

MotifPhases motif_phases(const SL2Z& m, const ShiftClass& shift)
{
    if (m.b() <= 0) throw DomainError("motif phases need b > 0");
    MotifPhases out{m.b(), {}};
    for (Integer n = 0; n < m.b(); ++n) out.phases.push_back(E_phase(n, m, shift));
    return out;
}

}  // namespace diracbrush
