#include "diracbrush/brush.hpp"

#include <cmath>
#include <numbers>

#include "detail/cexp_accumulator.hpp"
#include "diracbrush/gauss_oracle.hpp"
#include "diracbrush/mu_reduction.hpp"

namespace diracbrush {

namespace {

constexpr double kPi = std::numbers::pi;
// |e^{pi i tau x^2}| < 1e-18  <=>  pi Im(tau) x^2 > 18 ln 10
const double kTailExponent = 18.0 * std::log(10.0);

void require_upper(ComplexF tau)
{
    if (!(tau.imag() > 0)) throw DomainError("Im tau must be positive");
}

Integer to_integer(double v)
{
    Integer out;
    mpz_set_d(out.get_mpz_t(), v);
    return out;
}

// lcm of two positive rationals
Rational rational_lcm(const Rational& x, const Rational& y)
{
    Integer l, g;
    mpz_lcm(l.get_mpz_t(), x.num().get_mpz_t(), y.num().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
    return Rational(l, g);
}

// cos th and sin th of e^{i th} = (a/r + i b r)/s
std::pair<double, double> direction(const AlphaSpec& alpha)
{
    const double r = std::sqrt(alpha.r_sq.to_double());
    const double x = alpha.a.get_d() / r;
    const double y = alpha.b.get_d() * r;
    const double s = std::hypot(x, y);
    return {x / s, y / s};
}

// sqrt(r) sum_k e^{pi i tau (r k)^2}
ComplexF comb_gaussian(double r, ComplexF tau)
{
    require_upper(tau);
    const long kmax = static_cast<long>(std::ceil(std::sqrt(kTailExponent / (kPi * tau.imag())) / r)) + 1;
    detail::CexpAccumulator acc;
    for (long k = -kmax; k <= kmax; ++k) {
        const double y2 = (r * k) * (r * k);
        acc.add(-kPi * tau.imag() * y2, kPi * tau.real() * y2);
    }
    return std::sqrt(r) * acc.result();
}

}  // namespace

double BrushSpec::s() const { return std::sqrt(s_sq.to_double()); }

void validate_alpha(const AlphaSpec& alpha)
{
    if (alpha.a == 0 && alpha.b == 0) throw DomainError("(a, b) = (0, 0)");
    if (gcd_ext(alpha.a, alpha.b).g != 1) throw DomainError("a and b must be coprime");
    if (alpha.r_sq.sign() <= 0) throw DomainError("r^2 must be positive");
}

SupportClass classify_support(const CotValue& cot, const Rational& r_sq)
{
    if (r_sq.sign() <= 0) throw DomainError("r^2 must be positive");
    switch (cot.kind) {
    case CotValue::Kind::irrational:
        return {false, 0, 0};
    case CotValue::Kind::infinite:
        return {true, 1, 0};
    case CotValue::Kind::finite:
        break;
    }
    // a / (b r^2) = cot
    const Rational v = cot.value * r_sq;
    return {true, v.num(), v.den()};
}

AlphaSpec alpha_from_cot(const CotValue& cot, const Rational& r_sq, long branch)
{
    const SupportClass sc = classify_support(cot, r_sq);
    if (!sc.discrete) throw DomainError("dense support: no brush");
    return AlphaSpec{sc.a, sc.b, r_sq, branch};
}

BrushSpec brush_spec(const AlphaSpec& alpha, const std::optional<ShiftClass>& shift,
                     const std::optional<std::pair<Integer, Integer>>& cd)
{
    validate_alpha(alpha);
    BrushSpec out;
    out.alpha = alpha;
    const auto [c, d] = cd ? *cd : complete_to_sl2z(alpha.a, alpha.b);
    out.c = c;
    out.d = d;
    const SL2Z m = out.matrix();
    out.shift = shift ? *shift : default_shift(m);
    require_parity(m, out.shift);

    const Rational& r2 = alpha.r_sq;
    const Rational a(alpha.a), b(alpha.b);
    out.s_sq = a * a / r2 + b * b * r2;
    out.t = a * Rational(c) / r2 + b * Rational(d) * r2;
    if (Rational(d) * out.s_sq != a / r2 + b * out.t) throw NumericalError("brush invariant d s^2 = a/r^2 + b t failed");

    const BranchedMu bm = mu_with_branch(m, out.shift, alpha.branch);
    if (alpha.b != 0 && abs(alpha.b) <= 100000) {
        const GaussMu g = gauss_sum_mu(m, out.shift);
        if (!(g.root == bm.mu)) throw NumericalError("mu reduction disagrees with the Gauss sum for " + m.str());
    }
    out.mu = bm.mu;
    out.epsilon = bm.epsilon;
    return out;
}

BrushCoefficient brush_coefficient(const BrushSpec& spec, const Integer& n)
{
    const Integer& q = spec.shift.q;
    const Integer& p = spec.shift.p;
    BrushCoefficient out;
    out.n = n;
    out.k = Rational(n) + Rational(q, Integer(2));
    Rational phi = Rational(spec.mu.k(), 4) - Rational(q * p, Integer(4)) - Rational(p) * out.k
                   - spec.t / spec.s_sq * out.k * out.k;
    if (spec.epsilon < 0) phi += Rational(1);
    out.amplitude_phase = PhaseQ(phi);
    out.position = out.k.to_double() / spec.s();
    out.magnitude = std::pow(spec.s_sq.to_double(), -0.25);
    return out;
}

std::vector<double> coefficient_phases(const BrushSpec& spec, const Integer& n_lo, const Integer& n_hi)
{
    // phi(n) = N(n) / (4U) with t/s^2 = T/U and 2k = 2n + q:
    // N = k8 U + 4U e - q p U - 2 U p (2n+q) - T (2n+q)^2
    const Rational ts = spec.t / spec.s_sq;
    const Integer T = ts.num();
    const Integer U = ts.den();
    const Integer& q = spec.shift.q;
    const Integer& p = spec.shift.p;
    const Integer base = Integer(spec.mu.k()) * U + (spec.epsilon < 0 ? 4 * U : Integer(0)) - q * p * U;
    const Integer modulus = 8 * U;
    const double denom = Integer(4 * U).get_d();

    std::vector<double> out;
    if (n_hi < n_lo) return out;
    out.reserve(Integer(n_hi - n_lo + 1).get_ui());
    Integer two_k, num, red;
    for (Integer n = n_lo; n <= n_hi; ++n) {
        two_k = 2 * n + q;
        num = base - 2 * U * p * two_k - T * two_k * two_k;
        mpz_fdiv_r(red.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
        out.push_back(red.get_d() / denom);
    }
    return out;
}

std::pair<Integer, Integer> index_range(const BrushSpec& spec, double x_lo, double x_hi)
{
    const double s = spec.s();
    const double half_q = spec.shift.q.get_d() / 2.0;
    return {to_integer(std::ceil(x_lo * s - half_q)), to_integer(std::floor(x_hi * s - half_q))};
}

ComplexF pair_gaussian_brush(const BrushSpec& spec, ComplexF tau, double x0, double xi0)
{
    require_upper(tau);
    const double reach = std::sqrt(kTailExponent / (kPi * tau.imag())) + 1e-9;
    const auto [lo, hi] = index_range(spec, x0 - reach, x0 + reach);
    const std::vector<double> phases = coefficient_phases(spec, lo, hi);

    const double s = spec.s();
    const double half_q = spec.shift.q.get_d() / 2.0;
    const double log_mag = -0.25 * std::log(spec.s_sq.to_double());
    const double n0 = lo.get_d();
    detail::CexpAccumulator acc;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const double x = (n0 + static_cast<double>(i) + half_q) / s;
        const double dx = x - x0;
        const double x_part = log_mag - kPi * tau.imag() * dx * dx;
        const double y_part = kPi * (phases[i] + tau.real() * dx * dx + 2.0 * xi0 * x - x0 * xi0);
        acc.add(x_part, y_part);
    }
    return acc.result();
}

ComplexF pair_gaussian_closedform(const AlphaSpec& alpha, ComplexF tau)
{
    validate_alpha(alpha);
    require_upper(tau);
    const auto [cs, sn] = direction(alpha);
    const ComplexF w = cs + tau * sn;
    const ComplexF factor = 1.0 / std::sqrt(w);
    const ComplexF tau2 = (tau * cs - sn) / w;
    const double r = std::sqrt(alpha.r_sq.to_double());
    const double eps = (alpha.branch % 2 == 0) ? 1.0 : -1.0;
    return eps * factor * comb_gaussian(r, tau2);
}

ComplexF pair_gaussian_mehler(const AlphaSpec& alpha, ComplexF tau, double epsilon_reg)
{
    validate_alpha(alpha);
    require_upper(tau);
    if (alpha.b == 0) throw DomainError("Mehler kernel needs sin(pi alpha/2) != 0");
    if (epsilon_reg < 0) throw DomainError("epsilon_reg must be non-negative");

    const auto [cs, sn] = direction(alpha);
    const ComplexF theta = ComplexF(std::atan2(sn, cs), -epsilon_reg * kPi / 2.0);
    const ComplexF S = std::sin(theta);
    const ComplexF C = std::cos(theta);
    const ComplexF cot = C / S;
    const ComplexF I(0.0, 1.0);
    const ComplexF pref = 1.0 / std::sqrt(I * S);
    const ComplexF A = kPi * I * (tau + cot);
    if (!(A.real() < 0)) throw NumericalError("Mehler x-integral does not converge");
    const ComplexF gauss = std::sqrt(kPi / (-A));

    const double r = std::sqrt(alpha.r_sq.to_double());
    // exponent is kappa * y^2 for y = r k
    const ComplexF kappa = kPi * I * cot + kPi * kPi / (S * S * A);
    if (!(kappa.real() < 0)) throw NumericalError("Mehler comb sum does not converge");
    const long kmax = static_cast<long>(std::ceil(std::sqrt((kTailExponent + 5.0) / -kappa.real()) / r)) + 1;

    detail::CexpAccumulator acc;
    for (long k = -kmax; k <= kmax; ++k) {
        const double y = r * static_cast<double>(k);
        const ComplexF B = -2.0 * kPi * I * y / S;
        const ComplexF Cc = kPi * I * cot * (y * y);
        const ComplexF e = Cc - B * B / (4.0 * A);
        acc.add(e.real(), e.imag());
    }
    const double eps = (alpha.branch % 2 == 0) ? 1.0 : -1.0;
    return eps * std::sqrt(r) * pref * gauss * acc.result();
}

BrushSpec representative_change(const BrushSpec& spec, const Integer& j)
{
    const Integer& q = spec.shift.q;
    const ShiftClass shift{q, spec.shift.p + j * (q - 1)};
    BrushSpec out = brush_spec(spec.alpha, shift, std::make_pair(spec.c + j * spec.alpha.a, spec.d + j * spec.alpha.b));
    if (out.t != spec.t + Rational(j) * spec.s_sq) throw NumericalError("representative change broke t' = t + j s^2");
    return out;
}

Integer delta_count(const BrushSpec& spec, double length)
{
    const auto [lo, hi] = index_range(spec, 0.0, length);
    return hi < lo ? Integer(0) : Integer(hi - lo + 1);
}

namespace {

Rational parity_unit(const AlphaSpec& alpha)
{
    // 2 x0 / s = u with u a / r^2 in Z and u b r^2 in Z
    const Rational& r2 = alpha.r_sq;
    std::optional<Rational> g;
    if (alpha.a != 0) g = r2 / Rational(Integer(abs(alpha.a)));
    if (alpha.b != 0) {
        const Rational h = Rational(1) / (Rational(Integer(abs(alpha.b))) * r2);
        g = g ? rational_lcm(*g, h) : h;
    }
    return *g;
}

bool product_even(const Rational& u, const AlphaSpec& alpha)
{
    // m n = u^2 a b, an integer on the lattice
    const Rational mn = u * u * Rational(Integer(alpha.a * alpha.b));
    return is_even(mn.num());
}

}  // namespace

ParityLattice parity_points(const BrushSpec& spec)
{
    ParityLattice out;
    out.unit = parity_unit(spec.alpha);
    out.step = out.unit.to_double() * spec.s() / 2.0;
    out.alternating = !product_even(out.unit, spec.alpha);
    return out;
}

Rational period_units(const BrushSpec& spec)
{
    const Rational g = parity_unit(spec.alpha);
    return product_even(g, spec.alpha) ? g : g * Rational(2);
}

std::optional<double> period(const BrushSpec& spec) { return period_units(spec).to_double() * spec.s(); }

bool periodic_iff(bool alpha_is_integer, bool r4_is_rational) { return alpha_is_integer || r4_is_rational; }

}  // namespace diracbrush
