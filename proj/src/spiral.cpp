#include "diracbrush/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "diracbrush/gauss_oracle.hpp"
#include "diracbrush/mu_reduction.hpp"
#include "diracbrush/simd/kernels.hpp"

namespace diracbrush {

namespace {

constexpr double kPi = std::numbers::pi;

const char* const kPiDigits =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

struct Neumaier {
    double s = 0, c = 0;
    void add(double v)
    {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct ComplexSum {
    Neumaier re, im;
    void add(ComplexF v)
    {
        re.add(v.real());
        im.add(v.imag());
    }
    ComplexF value() const { return {re.value(), im.value()}; }
};

// Walks the brush from position 0 upwards, keeping the running sum of
// coefficients strictly below the current X.
class PartialSums {
public:
    explicit PartialSums(const BrushSpec& spec)
        : spec_(spec), s_(spec.s()), half_q_(spec.shift.q.get_d() / 2.0),
          magnitude_(std::pow(spec.s_sq.to_double(), -0.25))
    {
        next_ = index_range(spec, -kEndpointSnap, 1.0).first;
        const BrushCoefficient c0 = brush_coefficient(spec, next_);
        if (std::abs(c0.position) <= kEndpointSnap) {
            // delta at the origin: half weight, and it never counts as interior
            origin_half_ = 0.5 * c0.value();
            ++next_;
        }
    }

    // Pi(x) for x >= 0; calls must come with non-decreasing x.
    ComplexF at(double x)
    {
        if (x <= kEndpointSnap) return 0.0;
        while (true) {
            const double pos = position(next_);
            if (pos < x - kEndpointSnap) {
                interior_.add(value(next_));
                ++next_;
            } else {
                break;
            }
        }
        ComplexF out = interior_.value() + origin_half_;
        if (std::abs(position(next_) - x) <= kEndpointSnap) out += 0.5 * value(next_);
        return out;
    }

private:
    double position(const Integer& n) const { return (n.get_d() + half_q_) / s_; }

    ComplexF value(const Integer& n)
    {
        const std::vector<double> phase = coefficient_phases(spec_, n, n);
        return magnitude_ * cispi(phase.front());
    }

    const BrushSpec& spec_;
    double s_;
    double half_q_;
    double magnitude_;
    Integer next_;
    ComplexF origin_half_ = 0.0;
    ComplexSum interior_;
};

ComplexF fresnel_series(double x)
{
    // sum_n (i pi)^n x^{2n+1} / (n! (2n+1))
    const ComplexF ipx2(0.0, kPi * x * x);
    ComplexF power = x;  // (i pi x^2)^n x / n!
    ComplexSum sum;
    for (int n = 0; n < 200; ++n) {
        const ComplexF term = power / static_cast<double>(2 * n + 1);
        sum.add(term);
        if (std::abs(term) < 1e-18 && n > 4) break;
        power *= ipx2 / static_cast<double>(n + 1);
    }
    return sum.value();
}

ComplexF fresnel_panels(double a, double b, double tol)
{
    using boost::math::quadrature::gauss_kronrod;
    const auto re = [](double t) { return std::cos(kPi * t * t); };
    const auto im = [](double t) { return std::sin(kPi * t * t); };
    ComplexSum sum;
    double lo = a;
    while (lo < b) {
        // about a quarter oscillation of e^{i pi t^2} per panel
        const double width = std::min(0.25 / std::max(lo, 1.0), b - lo);
        const double hi = (b - lo - width < 1e-15) ? b : lo + width;
        sum.add({gauss_kronrod<double, 61>::integrate(re, lo, hi, 5, tol),
                 gauss_kronrod<double, 61>::integrate(im, lo, hi, 5, tol)});
        lo = hi;
    }
    return sum.value();
}

// (1+j 1; j 1): r = 1/s_j, Delta^2 = (1+j)/s_j^2
struct FresnelFamily {
    double r;
    double delta;
};

FresnelFamily fresnel_family(long j)
{
    const double a = 1.0 + static_cast<double>(j);
    const double s_sq = a * a + 1.0;
    return {1.0 / std::sqrt(s_sq), std::sqrt(a / s_sq)};
}

BrushSpec cot_family_brush(long j)
{
    if (j < 1) throw DomainError("j must be at least 1");
    return brush_spec(AlphaSpec{Integer(1 + j), Integer(1), Rational(1), 0});
}

std::vector<double> uniform_grid(double lo, double hi, int count)
{
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return xs;
}

std::vector<Convergent> convergents_from_terms(const std::vector<Integer>& terms)
{
    std::vector<Convergent> out;
    Integer p_prev = 1, q_prev = 0, p = terms.empty() ? Integer(0) : terms[0], q = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            const Integer p_next = terms[i] * p + p_prev;
            const Integer q_next = terms[i] * q + q_prev;
            p_prev = p;
            q_prev = q;
            p = p_next;
            q = q_next;
        }
        out.push_back({static_cast<int>(i), p, q});
    }
    return out;
}

// Partial quotients of (m + sqrt(D))/d; needs d | D - m^2 and d > 0.
std::vector<Integer> quadratic_terms(Integer m, Integer d, const Integer& D, int depth)
{
    const Integer root = sqrt(D);
    std::vector<Integer> terms;
    for (int i = 0; i < depth; ++i) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), Integer(m + root).get_mpz_t(), d.get_mpz_t());
        terms.push_back(a);
        m = a * d - m;
        d = (D - m * m) / d;
    }
    return terms;
}

std::vector<Integer> rational_terms(Rational x, int depth)
{
    std::vector<Integer> terms;
    for (int i = 0; i < depth; ++i) {
        const Integer a = x.floor();
        terms.push_back(a);
        const Rational frac = x - Rational(a);
        if (frac.sign() == 0) break;
        x = Rational(1) / frac;
    }
    return terms;
}

std::vector<Integer> pi_terms(int depth)
{
    // terms shared by the truncated expansion and truncation + 10^-100 are terms of pi
    const Rational lower = Rational::parse(kPiDigits);
    Integer ulp;
    mpz_ui_pow_ui(ulp.get_mpz_t(), 10, 100);
    const Rational upper = lower + Rational(Integer(1), ulp);
    const std::vector<Integer> lo = rational_terms(lower, depth + 1);
    const std::vector<Integer> hi = rational_terms(upper, depth + 1);
    std::vector<Integer> out;
    // the last agreeing term may still differ in the true expansion
    for (std::size_t i = 0; i + 1 < std::min(lo.size(), hi.size()) && lo[i] == hi[i]; ++i) out.push_back(lo[i]);
    if (static_cast<int>(out.size()) > depth) out.resize(static_cast<std::size_t>(depth));
    return out;
}

}  // namespace

ComplexF antiderivative_at(const BrushSpec& spec, double x)
{
    if (x < 0) return -antiderivative_at(spec, -x);
    PartialSums sums(spec);
    return sums.at(x);
}

std::vector<TraceRow> antiderivative_trace(const BrushSpec& spec, double x_max, int samples)
{
    if (samples < 2) throw DomainError("need at least two samples");
    if (!(x_max > 0)) throw DomainError("x_max must be positive");
    const int last = samples - 1;
    std::vector<TraceRow> rows(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) rows[static_cast<std::size_t>(i)].x = x_max * (2 * i - last) / last;

    PartialSums sums(spec);
    const int first_nonneg = samples / 2;  // rows below are mirrors of rows at or above
    for (int i = first_nonneg; i < samples; ++i) {
        TraceRow& row = rows[static_cast<std::size_t>(i)];
        const ComplexF v = sums.at(row.x);
        row.re = v.real();
        row.im = v.imag();
        TraceRow& mirror = rows[static_cast<std::size_t>(last - i)];
        if (last - i != i) {
            mirror.re = -row.re;
            mirror.im = -row.im;
        }
    }
    return rows;
}

ComplexF fresnel_S(double x, double tol)
{
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    if (x < 0) return -fresnel_S(-x, tol);
    constexpr double kSeriesLimit = 1.5;
    if (x <= kSeriesLimit) return fresnel_series(x);
    return fresnel_series(kSeriesLimit) + fresnel_panels(kSeriesLimit, x, tol);
}

ComplexF riemann_fresnel_F(double x, double delta, double r, double m0)
{
    if (!(delta > 0) || !(r > 0)) throw DomainError("delta and r must be positive");
    const long m_lo = static_cast<long>(std::ceil(-m0));
    const long m_hi = static_cast<long>(std::floor(x / r - m0));
    ComplexSum sum;
    for (long m = m_lo; m <= m_hi; ++m) {
        const double u = delta * (static_cast<double>(m) + m0);
        sum.add(cispi(u * u));
    }
    return std::sqrt(r) * sum.value();
}

double fresnel_sup_error(long j, int n_root)
{
    if (j < 1 || n_root < 1) throw DomainError("fresnel_sup_error needs j >= 1 and N >= 1");
    const auto [r, delta] = fresnel_family(j);
    const std::vector<double> xs = uniform_grid(0.0, std::pow(delta, 1.0 / n_root), 200);
    std::vector<ComplexF> target;
    target.reserve(xs.size());
    for (double x : xs) target.push_back(fresnel_S(delta * x / r));

    double worst = 0.0;
    for (int i = 0; i < 16; ++i) {
        const double m0 = i / 16.0;
        // running F along the ascending X grid
        ComplexSum sum;
        long m = 0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const long m_hi = static_cast<long>(std::floor(xs[k] / r - m0));
            for (; m <= m_hi; ++m) {
                const double u = delta * (static_cast<double>(m) + m0);
                sum.add(cispi(u * u));
            }
            // delta F / sqrt(r) = delta * sum
            worst = std::max(worst, std::abs(delta * sum.value() - target[k]));
        }
    }
    return worst;
}

Rational motif_decomposition_check(const SL2Z& m, const ShiftClass& shift, long j)
{
    if (m.b() <= 0) throw DomainError("motif decomposition needs b > 0");
    if (j < 0) throw DomainError("motif decomposition needs j >= 0");
    require_parity(m, shift);
    const Integer& b = m.b();
    const SL2Z mj(m.a() + j * b, b, m.c() + j * m.d(), m.d());
    const ShiftClass sj{shift.q - j * b, shift.p - j * m.d()};
    const BrushSpec spec = brush_spec(AlphaSpec{mj.a(), mj.b(), Rational(1), 0}, sj, std::make_pair(mj.c(), mj.d()));
    const EighthRoot mu = mu_reduce(m, shift).mu;
    const Rational d0_sq = -spec.t / spec.s_sq + Rational(m.d(), b);

    std::vector<Rational> e_two;  // 2 E(n), n = 0..b-1
    for (Integer n = 0; n < b; ++n) e_two.push_back(Rational(2) * E_phase(n, m, shift));
    // E is b-periodic
    for (Integer n = 0; n < b; ++n) {
        if ((Rational(2) * E_phase(n + b, m, shift) - e_two[n.get_ui()]).mod(Rational(2)).sign() != 0)
            throw NumericalError("E(n) is not b-periodic");
    }

    Rational worst(0);
    const Integer span = 3 * b + 10;
    for (Integer n = -span; n <= span; ++n) {
        const BrushCoefficient c = brush_coefficient(spec, n);
        // motif index counts from k = -q_j/2
        Integer motif = n + sj.q;
        Integer residue;
        mpz_fdiv_r(residue.get_mpz_t(), motif.get_mpz_t(), b.get_mpz_t());
        const Rational predicted = Rational(mu.k(), 4) + e_two[residue.get_ui()] + d0_sq * c.k * c.k;
        Rational defect = (c.amplitude_phase.phi() - predicted).mod(Rational(2));
        if (defect > Rational(1)) defect -= Rational(2);
        worst = std::max(worst, defect.abs());
    }
    return worst;
}

double scaling_law_sup_error(long j)
{
    const BrushSpec spec = cot_family_brush(j);
    const double sj = std::sqrt(static_cast<double>(j));
    const ComplexF rot = std::polar(1.0, -kPi / 4.0);
    PartialSums sums(spec);
    double worst = 0.0;
    for (double x : uniform_grid(0.0, 2.0 / sj, 200)) worst = std::max(worst, std::abs(sums.at(x) - rot * fresnel_S(sj * x)));
    return worst;
}

double nonuniformity_sup(long j)
{
    const BrushSpec spec = cot_family_brush(j);
    const double sj = std::sqrt(static_cast<double>(j));
    PartialSums sums(spec);
    double worst = 0.0;
    for (double x : uniform_grid(1.0 / sj, 2.0 / sj, 200)) worst = std::max(worst, std::abs(sums.at(x) - 0.5));
    return worst;
}

std::vector<Convergent> continued_fraction_convergents(const std::string& target, int depth)
{
    if (depth < 1) throw DomainError("depth must be at least 1");
    std::vector<Integer> terms;
    if (target == "sqrt2")
        terms = quadratic_terms(0, 1, 2, depth);
    else if (target == "sqrt3")
        terms = quadratic_terms(0, 1, 3, depth);
    else if (target == "golden")
        terms = quadratic_terms(1, 2, 5, depth);
    else if (target == "pi")
        terms = pi_terms(depth);
    else
        terms = rational_terms(Rational::parse(target), depth);
    return convergents_from_terms(terms);
}

}  // namespace diracbrush
