#pragma once

#include <string>
#include <vector>

#include "diracbrush/brush.hpp"

namespace diracbrush {

struct TraceRow {
    double x = 0;
    double re = 0;
    double im = 0;
};

// Deltas closer than this to 0 or X count with half weight.
inline constexpr double kEndpointSnap = 1e-12;

// Pi(X) = sum of coefficients in (0, X) plus half of those at 0 and X; odd in X.
ComplexF antiderivative_at(const BrushSpec& spec, double x);

// X_i = x_max (2i - (N-1))/(N-1), i = 0..N-1.
std::vector<TraceRow> antiderivative_trace(const BrushSpec& spec, double x_max, int samples);

// S(X) = int_0^X e^{pi i x^2} dx
ComplexF fresnel_S(double x, double tol = 1e-13);

// sqrt(r) sum_{-m0 <= m <= X/r - m0} e^{pi i (delta (m + m0))^2}
ComplexF riemann_fresnel_F(double x, double delta, double r, double m0);

// sup over X in [0, delta^{1/N}] (200 points) and m0 = i/16 of
// |delta F / sqrt(r) - S(delta X / r)|, for the family M_j = (1+j 1; j 1).
double fresnel_sup_error(long j, int n_root);

// Largest |phase defect| (mod 2, in (-1, 1]) between the brush of
// M_j = (a+jb, b; c+jd, d) and mu e^{2 pi i E(n)} e^{i pi D0^2 k^2}.
Rational motif_decomposition_check(const SL2Z& m, const ShiftClass& shift, long j);

// sup over X in [0, 2 j^{-1/2}] of |Pi(X) - e^{-i pi/4} S(j^{1/2} X)| for cot = 1 + j.
double scaling_law_sup_error(long j);

// sup over X in [j^{-1/2}, 2 j^{-1/2}] of |Pi(X) - 1/2| for cot = 1 + j.
double nonuniformity_sup(long j);

struct Convergent {
    int index = 0;
    Integer p;
    Integer q;
};

// Named targets: sqrt2, sqrt3, golden, pi (pi stops after about 95 terms).
// Anything else is parsed as a decimal or p/q and expanded exactly.
std::vector<Convergent> continued_fraction_convergents(const std::string& target, int depth);

}  // namespace diracbrush
