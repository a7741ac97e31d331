#pragma once

#include <vector>

#include "diracbrush/exact_core.hpp"

namespace diracbrush {

struct MotifPhases {
    Integer b;
    std::vector<Rational> phases;  // E(0), ..., E(b-1)
};

struct GaussMu {
    ComplexF value;      // the normalized Gauss sum before snapping
    EighthRoot root;     // nearest eighth root
    double distance = 0; // |value - root|
};

// E(n) = -d/(2b) (n - q/2)^2 - p n/2 + q p/8
Rational E_phase(const Integer& n, const SL2Z& m, const ShiftClass& shift);

// mu = e^{-i pi/4} b^{-1/2} sum_{n<b} e^{-2 pi i E(n)}.  b < 0 goes through the
// conjugation symmetry; b = 0 uses the closed form.
GaussMu gauss_sum_mu(const SL2Z& m, const ShiftClass& shift);

MotifPhases motif_phases(const SL2Z& m, const ShiftClass& shift);

inline constexpr double kSnapTolerance = 1e-6;

}  // namespace diracbrush
