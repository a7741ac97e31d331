#include <doctest.h>

#include "diracbrush/mu_reduction.hpp"
#include "oracles.hpp"

using namespace diracbrush;

namespace {

int k8(const MuState& st) { return EighthRoot::from_integer(st.k).k(); }

// e^{i pi K/4} mu(M; shift) as an octant, through the theta oracle
int state_value(const MuState& st)
{
    const int mu = oracle::mu_from_theta(st.m.a().get_si(), st.m.b().get_si(), st.m.c().get_si(), st.m.d().get_si(),
                                         st.shift.q.get_si(), st.shift.p.get_si());
    return (mu + k8(st)) % 8;
}

template <class F>
void for_small_cases(int bound, int shift_bound, F&& f)
{
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d) {
                    if (a * d - b * c != 1) continue;
                    const SL2Z m(a, b, c, d);
                    for (long q = -shift_bound; q <= shift_bound; ++q)
                        for (long p = -shift_bound; p <= shift_bound; ++p)
                            if (shift_parity_check(m, {q, p})) f(m, ShiftClass{q, p});
                }
}

}  // namespace

TEST_CASE("known values")
{
    CHECK(mu_reduce(SL2Z::F1(), {0, 0}).mu == EighthRoot(7));
    CHECK(mu_reduce(SL2Z(1, 1, 0, 1), {1, 0}).mu == EighthRoot(0));
    CHECK(mu_reduce(SL2Z::identity(), {0, 0}).mu == EighthRoot(0));
    CHECK(mu_reduce(SL2Z(-1, 0, 0, -1), {0, 0}).mu == EighthRoot(6));
    CHECK_THROWS_AS(mu_reduce(SL2Z(1, 1, 0, 1), {0, 0}), ParityError);
}

TEST_CASE("mu_reduce matches the theta functional equation")
{
    int checked = 0;
    for_small_cases(4, 2, [&](const SL2Z& m, const ShiftClass& s) {
        const int expected = oracle::mu_from_theta(m.a().get_si(), m.b().get_si(), m.c().get_si(), m.d().get_si(),
                                                   s.q.get_si(), s.p.get_si());
        CHECK(mu_reduce(m, s).mu.k() == expected);
        ++checked;
    });
    CHECK(checked > 1000);
}

TEST_CASE("each symmetry step preserves the represented number")
{
    for_small_cases(3, 2, [&](const SL2Z& m, const ShiftClass& s) {
        const MuState st{m, s, 0};
        const int v = state_value(st);
        CHECK(state_value(sym_poisson(st)) == v);
        const MuState back = sym_poisson_inverse(sym_poisson(st));
        CHECK(back.m == m);
        CHECK(back.shift == s);
        CHECK(back.k == 0);
        for (long j = -2; j <= 2; ++j) {
            CHECK(state_value(sym_shear_left(st, j)) == v);
            CHECK(state_value(sym_shear_right(st, j)) == v);
        }
    });
}

TEST_CASE("shift change phase agrees with the oracle")
{
    for_small_cases(3, 1, [&](const SL2Z& m, const ShiftClass& s) {
        for (long u = -1; u <= 1; ++u)
            for (long v = -1; v <= 1; ++v) {
                const ShiftClass s2{s.q + 2 * u, s.p + 2 * v};
                const EighthRoot f = shift_change_phase(s.q, s.p, s2.q, s2.p).to_eighth_root();
                CHECK(mu_reduce(m, s).mu == f * mu_reduce(m, s2).mu);
            }
    });
}

TEST_CASE("reduction terminates quickly on large entries")
{
    // consecutive Fibonacci numbers are the slowest case for Euclid
    Integer f0 = 1, f1 = 1;
    for (int i = 0; i < 200; ++i) {
        const Integer t = f0 + f1;
        f0 = f1;
        f1 = t;
    }
    const auto [c, d] = complete_to_sl2z(f1, f0);
    const SL2Z m(f1, f0, c, d);
    const MuResult r = mu_reduce(m, default_shift(m));
    CHECK(r.steps <= 210);
}

TEST_CASE("branch sign")
{
    const BranchedMu even = mu_with_branch(SL2Z::F1(), {0, 0}, 2);
    const BranchedMu odd = mu_with_branch(SL2Z::F1(), {0, 0}, -1);
    CHECK(even.epsilon == 1);
    CHECK(odd.epsilon == -1);
    CHECK(even.mu == odd.mu);
}
