#pragma once

#include "diracbrush/exact_core.hpp"

namespace diracbrush {

struct MuResult {
    EighthRoot mu;
    int steps = 0;
};

struct BranchedMu {
    EighthRoot mu;
    int epsilon = 1;
};

// (M, shift, K) stands for the number e^{i pi K/4} mu(M; shift).  Every sym_*
// step rewrites the triple without changing that number.
struct MuState {
    SL2Z m;
    ShiftClass shift;
    Integer k;
};

MuResult mu_reduce(const SL2Z& m, const ShiftClass& shift);

// M -> M F1 with K += 1, or K -= 3 when a < 0 and b >= 0.
MuState sym_poisson(const MuState& st);
MuState sym_poisson_inverse(const MuState& st);

// M -> W_j M, p -> p + j(q - 1), K -= j q.
MuState sym_shear_left(const MuState& st, const Integer& j);

// M -> M W_j, (q, p) -> (q - jb, p - jd), K += j(dq - pb).
MuState sym_shear_right(const MuState& st, const Integer& j);

// branch counts shifts of alpha by 4; odd branches flip the sign.
BranchedMu mu_with_branch(const SL2Z& m, const ShiftClass& shift, long branch);

}  // namespace diracbrush
