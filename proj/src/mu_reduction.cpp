#include "diracbrush/mu_reduction.hpp"

namespace diracbrush {

namespace {

bool poisson_sign_negative(const SL2Z& m) { return m.a() < 0 && m.b() >= 0; }

Integer floor_div(const Integer& x, const Integer& y)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return out;
}

}  // namespace

MuState sym_poisson(const MuState& st)
{
    const SL2Z& m = st.m;
    const Integer dk = poisson_sign_negative(m) ? Integer(-3) : Integer(1);
    return {SL2Z(-m.b(), m.a(), -m.d(), m.c()), st.shift, st.k + dk};
}

MuState sym_poisson_inverse(const MuState& st)
{
    const SL2Z& m = st.m;
    SL2Z prev(m.b(), -m.a(), m.d(), -m.c());
    const Integer dk = poisson_sign_negative(prev) ? Integer(-3) : Integer(1);
    return {prev, st.shift, st.k - dk};
}

MuState sym_shear_left(const MuState& st, const Integer& j)
{
    const Integer& q = st.shift.q;
    return {SL2Z::W(j) * st.m, ShiftClass{q, st.shift.p + j * (q - 1)}, st.k - j * q};
}

MuState sym_shear_right(const MuState& st, const Integer& j)
{
    const SL2Z& m = st.m;
    const Integer& q = st.shift.q;
    const Integer& p = st.shift.p;
    return {st.m * SL2Z::W(j), ShiftClass{q - j * m.b(), p - j * m.d()}, st.k + j * (m.d() * q - p * m.b())};
}

MuResult mu_reduce(const SL2Z& m, const ShiftClass& shift)
{
    require_parity(m, shift);
    MuState st{m, shift, Integer(0)};
    int steps = 0;
    while (st.m.b() != 0) {
        const Integer j = -floor_div(st.m.a(), st.m.b());
        st = sym_poisson(sym_shear_right(st, j));
        ++steps;
    }
    // b = 0: M = (a 0; c a) with a = +-1.  mu = e^{i pi pq/4}, times -i when a = -1.
    Integer k = st.k + st.shift.p * st.shift.q;
    if (st.m.a() == -1) k -= 2;
    return {EighthRoot::from_integer(k), steps};
}

BranchedMu mu_with_branch(const SL2Z& m, const ShiftClass& shift, long branch)
{
    return {mu_reduce(m, shift).mu, (branch % 2 == 0) ? 1 : -1};
}

}  // namespace diracbrush
