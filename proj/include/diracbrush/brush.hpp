#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diracbrush/exact_core.hpp"

namespace diracbrush {

// e^{i pi alpha/2} = (a/r + i b r)/s, alpha taken in (-2, 2] + 4*branch.
struct AlphaSpec {
    Integer a;
    Integer b;
    Rational r_sq{1};
    long branch = 0;
};

void validate_alpha(const AlphaSpec& alpha);

struct BrushSpec {
    AlphaSpec alpha;
    Integer c;
    Integer d;
    Rational s_sq;  // a^2/r^2 + b^2 r^2
    Rational t;     // ac/r^2 + b d r^2
    ShiftClass shift;
    EighthRoot mu;
    int epsilon = 1;

    SL2Z matrix() const { return SL2Z(alpha.a, alpha.b, c, d); }
    double s() const;
};

// Delta at position (n + q/2)/s with weight magnitude * e^{i pi phase}.
struct BrushCoefficient {
    Integer n;
    Rational k;  // n + q/2
    double position = 0;
    PhaseQ amplitude_phase;
    double magnitude = 0;

    ComplexF value() const { return magnitude * amplitude_phase.value(); }
};

struct CotValue {
    enum class Kind { finite, infinite, irrational };
    Kind kind = Kind::finite;
    Rational value;

    static CotValue finite(const Rational& v) { return {Kind::finite, v}; }
    static CotValue infinite() { return {Kind::infinite, Rational(0)}; }
    static CotValue irrational() { return {Kind::irrational, Rational(0)}; }
};

struct SupportClass {
    bool discrete = false;
    Integer a;
    Integer b;
};

SupportClass classify_support(const CotValue& cot, const Rational& r_sq);

// Throws DomainError on dense support.
AlphaSpec alpha_from_cot(const CotValue& cot, const Rational& r_sq, long branch = 0);

BrushSpec brush_spec(const AlphaSpec& alpha, const std::optional<ShiftClass>& shift = std::nullopt,
                     const std::optional<std::pair<Integer, Integer>>& cd = std::nullopt);

BrushCoefficient brush_coefficient(const BrushSpec& spec, const Integer& n);

// Phases (in units of pi, reduced to [0,2)) for n = n_lo .. n_hi, exact up to
// the final conversion to double.
std::vector<double> coefficient_phases(const BrushSpec& spec, const Integer& n_lo, const Integer& n_hi);

// Smallest and largest n whose delta lies in [x_lo, x_hi].
std::pair<Integer, Integer> index_range(const BrushSpec& spec, double x_lo, double x_hi);

// Bilinear pairing of the brush with g_{(x0,xi0),tau}.
ComplexF pair_gaussian_brush(const BrushSpec& spec, ComplexF tau, double x0 = 0.0, double xi0 = 0.0);

// Same pairing through the transformed Gaussian acting on the comb.
ComplexF pair_gaussian_closedform(const AlphaSpec& alpha, ComplexF tau);

// Same pairing from the integral kernel, one Gaussian integral per comb point.
ComplexF pair_gaussian_mehler(const AlphaSpec& alpha, ComplexF tau, double epsilon_reg = 0.0);

// (c, d) -> (c + j a, d + j b), t -> t + j s^2, p -> p + j(q - 1), mu recomputed.
BrushSpec representative_change(const BrushSpec& spec, const Integer& j);

// Number of deltas with position in [0, L].
Integer delta_count(const BrushSpec& spec, double length);

// Centres of symmetry: x0 = k * step, with 2 x0 / s = k * unit.
struct ParityLattice {
    Rational unit;
    double step = 0;
    bool alternating = false;  // odd at odd k when true, otherwise even everywhere

    bool even_at(const Integer& k) const { return !alternating || is_even(k); }
};

ParityLattice parity_points(const BrushSpec& spec);

// Smallest period as a multiple of s, and its length.
Rational period_units(const BrushSpec& spec);
std::optional<double> period(const BrushSpec& spec);

// Periodicity criterion for general r: integer alpha, or r^4 rational.
bool periodic_iff(bool alpha_is_integer, bool r4_is_rational);

}  // namespace diracbrush
