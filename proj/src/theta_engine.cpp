#include "diracbrush/theta_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/cexp_accumulator.hpp"
#include "diracbrush/mu_reduction.hpp"

namespace diracbrush {

namespace {

constexpr double kPi = std::numbers::pi;
const ComplexF kI(0.0, 1.0);

void require_upper(ComplexF tau)
{
    if (!(tau.imag() > 0)) throw DomainError("Im tau must be positive");
}

// principal root; a signed zero imaginary part would flip sqrt(-1) to -i
ComplexF root(ComplexF w)
{
    if (w.imag() == 0.0) w = ComplexF(w.real(), 0.0);
    return std::sqrt(w);
}

long count_steps(double lo, double hi, double step)
{
    return static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

ComplexF theta_qp_split(ComplexF z, const Rational& tau_rational, ComplexF tau_rest, const Integer& q,
                        const Integer& p, double tol)
{
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    require_upper(tau_rest);
    const double it = tau_rest.imag();
    // Re of the exponent: -pi it m^2 - 2 pi m Im z, largest at m*
    const double m_star = -z.imag() / it;
    const double radius = std::sqrt(-std::log(tol) / (kPi * it)) + 2.0;
    const double qh = q.get_d() / 2.0;
    const long j_lo = static_cast<long>(std::floor(m_star - radius + qh));
    const long j_hi = static_cast<long>(std::ceil(m_star + radius + qh));

    // R m^2 + p m with m = (2j - q)/2 and R = N/D:  (N u^2 + 2 D p u)/(4D), u = 2j - q
    const Integer N = tau_rational.num();
    const Integer D = tau_rational.den();
    const Integer modulus = 8 * D;
    const double inv = 1.0 / Integer(4 * D).get_d();
    const Integer twice_dp = 2 * D * p;

    const double x_peak = kPi * it * m_star * m_star;  // value of -pi it m^2 - 2 pi m Im z at m*
    detail::CexpAccumulator acc;
    Integer u, num, red;
    for (long j = j_lo; j <= j_hi; ++j) {
        u = 2 * Integer(j) - q;
        num = N * u * u + twice_dp * u;
        mpz_fdiv_r(red.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
        const double m = static_cast<double>(j) - qh;
        const double x = -kPi * it * m * m - 2.0 * kPi * m * z.imag() - x_peak;
        const double y = kPi * (red.get_d() * inv + tau_rest.real() * m * m + 2.0 * m * z.real());
        acc.add(x, y);
    }
    return std::exp(x_peak) * cispi(Rational(p * q, Integer(4))) * acc.result();
}

ComplexF theta_qp(const ThetaArgs& args, double tol)
{
    require_upper(args.tau);
    return theta_qp_split(args.z, Rational(0), args.tau, args.q, args.p, tol);
}

FunctionalEquation functional_equation(const SL2Z& m, const ShiftClass& shift, ComplexF z, ComplexF tau, double tol)
{
    require_upper(tau);
    require_parity(m, shift);
    const double a = m.a().get_d(), b = m.b().get_d();
    const ComplexF w = a + b * tau;
    const ComplexF z2 = z / w;
    const EighthRoot mu_bar = mu_reduce(m, shift).mu.inverse();

    FunctionalEquation out;
    out.lhs = theta_qp_split(z, Rational(0), tau, 0, 0, tol);
    ComplexF th;
    if (m.b() == 0) {
        // tau' = c/a + tau (a = +-1 so 1/a = a)
        th = theta_qp_split(z2, Rational(Integer(m.c() * m.a())), tau, shift.q, shift.p, tol);
    } else {
        // tau' = d/b - 1/(b (a + b tau))
        th = theta_qp_split(z2, Rational(m.d(), m.b()), -1.0 / (b * w), shift.q, shift.p, tol);
    }
    out.rhs = mu_bar.value() * std::exp(-kPi * kI * b * z * z / w) / root(w) * th;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

double functional_equation_residual(const SL2Z& m, const ShiftClass& shift, ComplexF z, ComplexF tau, double tol)
{
    return functional_equation(m, shift, z, tau, tol).residual;
}

GaussianTransform gaussian_transform(const RealMatrix& m, ComplexF tau)
{
    require_upper(tau);
    const ComplexF w = m.a + m.b * tau;
    return {1.0 / root(w), (m.c + m.d * tau) / w};
}

GaussianTransform gaussian_transform(const SL2Z& m, ComplexF tau)
{
    return gaussian_transform(RealMatrix{m.a().get_d(), m.b().get_d(), m.c().get_d(), m.d().get_d()}, tau);
}

ShiftProjection gaussian_shift_project(ComplexF x0, ComplexF xi0, ComplexF tau)
{
    const ComplexF eta0 = xi0 - tau * x0;
    return {eta0, std::exp(-kPi * kI * x0 * eta0)};
}

ComplexF gaussian_eval(ComplexF x0, ComplexF xi0, ComplexF tau, double x)
{
    const ComplexF dx = x - x0;
    return std::exp(kPi * kI * (-x0 * xi0 + 2.0 * xi0 * x + tau * dx * dx));
}

int metaplectic_compose_sign(const RealMatrix& m1, const RealMatrix& m2, ComplexF probe)
{
    require_upper(probe);
    const RealMatrix m3{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d, m1.c * m2.a + m1.d * m2.c,
                        m1.c * m2.b + m1.d * m2.d};
    const ComplexF w2 = m2.a + m2.b * probe;
    const ComplexF w3 = m3.a + m3.b * probe;
    const ComplexF sigma = root(w3) / (root(w2) * root(w3 / w2));
    if (std::abs(sigma - 1.0) <= 1e-6) return 1;
    if (std::abs(sigma + 1.0) <= 1e-6) return -1;
    throw NumericalError("composition sign is not +-1");
}

int metaplectic_compose_sign(const SL2Z& m1, const SL2Z& m2)
{
    const auto conv = [](const SL2Z& m) {
        return RealMatrix{m.a().get_d(), m.b().get_d(), m.c().get_d(), m.d().get_d()};
    };
    const int s1 = metaplectic_compose_sign(conv(m1), conv(m2), ComplexF(0, 1));
    const int s2 = metaplectic_compose_sign(conv(m1), conv(m2), ComplexF(1, 2));
    if (s1 != s2) throw NumericalError("composition sign depends on the probe");
    return s1;
}

ComplexF bargmann_comb(ComplexF z, const Rational& r_sq)
{
    if (r_sq.sign() <= 0) throw DomainError("r^2 must be positive");
    const double r = std::sqrt(r_sq.to_double());
    // exponent -pi (rk - x)^2 + pi x^2 - pi Re(z^2)/2 + i(2 pi r k y - pi x y)
    const double x = z.real(), y = z.imag();
    const double reach = std::sqrt(45.0 / kPi) + 1.0;
    const long k_lo = static_cast<long>(std::floor((x - reach) / r));
    const long k_hi = static_cast<long>(std::ceil((x + reach) / r));
    detail::CexpAccumulator acc;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double d = r * static_cast<double>(k) - x;
        acc.add(-kPi * d * d, 2.0 * kPi * r * static_cast<double>(k) * y);
    }
    const ComplexF outer = std::exp(ComplexF(kPi * x * x - kPi * (x * x - y * y) / 2.0, -kPi * x * y));
    return std::sqrt(r) * outer * acc.result();
}

double bargmann_mass(ComplexF z, const Rational& r_sq)
{
    if (r_sq.sign() <= 0) throw DomainError("r^2 must be positive");
    const double r = std::sqrt(r_sq.to_double());
    // normalized: e^{-pi|z|^2/2} B(z) = sqrt(r) e^{-i pi x y} sum_k e^{-pi (rk - x)^2 + 2 pi i r k y}
    const double x = z.real(), y = z.imag();
    const double reach = std::sqrt(45.0 / kPi) + 1.0;
    const long k_lo = static_cast<long>(std::floor((x - reach) / r));
    const long k_hi = static_cast<long>(std::ceil((x + reach) / r));
    detail::CexpAccumulator acc;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double d = r * static_cast<double>(k) - x;
        acc.add(-kPi * d * d, 2.0 * kPi * std::fmod(r * static_cast<double>(k) * y, 1.0));
    }
    return r * std::norm(acc.result());
}

std::vector<GridRow> bargmann_grid(double re_lo, double re_hi, double im_lo, double im_hi, double step,
                                   const Rational& r_sq)
{
    if (!(step > 0)) throw DomainError("step must be positive");
    if (re_hi < re_lo || im_hi < im_lo) throw DomainError("empty grid range");
    const long n_re = count_steps(re_lo, re_hi, step);
    const long n_im = count_steps(im_lo, im_hi, step);
    std::vector<GridRow> out;
    out.reserve(static_cast<std::size_t>(n_re * n_im));
    for (long i = 0; i < n_im; ++i) {
        const double im = im_lo + static_cast<double>(i) * step;
        for (long j = 0; j < n_re; ++j) {
            const double re = re_lo + static_cast<double>(j) * step;
            const ComplexF z(re, im);
            out.push_back({re, im, bargmann_mass(z, r_sq), std::arg(bargmann_comb(z, r_sq))});
        }
    }
    return out;
}

}  // namespace diracbrush
