#include <doctest.h>

#include "diracbrush/exact_core.hpp"
#include "oracles.hpp"

using namespace diracbrush;

TEST_CASE("rational parse and normal form")
{
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK(Rational::parse("-1.732") == Rational(-1732, 1000));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("  7 ") == Rational(7));
    CHECK(Rational(10, -4).den() == 2);
    CHECK(Rational(10, -4).num() == -5);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational arithmetic against cross-multiplied integers")
{
    for (long a = -6; a <= 6; ++a)
        for (long b = 1; b <= 5; ++b)
            for (long c = -6; c <= 6; ++c)
                for (long d = 1; d <= 5; ++d) {
                    const Rational x(a, b), y(c, d);
                    CHECK((x + y) * Rational(b * d) == Rational(a * d + c * b));
                    CHECK((x - y) * Rational(b * d) == Rational(a * d - c * b));
                    CHECK((x * y) * Rational(b * d) == Rational(a * c));
                    if (c != 0) CHECK((x / y) * Rational(b * c) == Rational(a * d));
                    CHECK(((x < y) == (a * d < c * b)));
                }
}

TEST_CASE("floor and mod")
{
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-1, 3).mod(Rational(2)) == Rational(5, 3));
    CHECK(Rational(9, 4).mod(Rational(2)) == Rational(1, 4));
    CHECK(Rational(4).mod(Rational(2)) == Rational(0));
    CHECK(Rational(3, 4).is_integer() == false);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("phases and eighth roots")
{
    CHECK(PhaseQ(Rational(-1, 8)).phi() == Rational(15, 8));
    CHECK(PhaseQ(Rational(5)).phi() == Rational(1));
    CHECK((PhaseQ(Rational(3, 2)) * PhaseQ(Rational(3, 4))).phi() == Rational(1, 4));
    CHECK(PhaseQ(Rational(1, 4)).is_eighth_root());
    CHECK_FALSE(PhaseQ(Rational(1, 8)).is_eighth_root());
    CHECK(PhaseQ(Rational(3, 4)).to_eighth_root() == EighthRoot(3));
    CHECK_THROWS_AS(PhaseQ(Rational(1, 3)).to_eighth_root(), DomainError);
    CHECK(EighthRoot(-1) == EighthRoot(7));
    CHECK(EighthRoot(3) * EighthRoot(6) == EighthRoot(1));
    CHECK(EighthRoot(3).inverse() == EighthRoot(5));
    CHECK(EighthRoot::from_integer(Integer("-1000000000000000000001")) == EighthRoot(7));
    for (int k = 0; k < 8; ++k) {
        CHECK(std::abs(EighthRoot(k).value() - oracle::eighth(k)) < 1e-15);
        CHECK(EighthRoot(k).to_phase().phi() == Rational(k, 4));
    }
    // exact octant values
    CHECK(EighthRoot(2).value() == ComplexF(0, 1));
    CHECK(EighthRoot(4).value() == ComplexF(-1, 0));
}

TEST_CASE("cispi against polar")
{
    for (long n = -40; n <= 40; ++n) {
        const Rational phi(n, 7);
        const ComplexF ref = std::polar(1.0, oracle::pi * static_cast<double>(n) / 7.0);
        CHECK(std::abs(cispi(phi) - ref) < 1e-14);
        CHECK(std::abs(cispi(static_cast<double>(n) / 7.0) - ref) < 1e-14);
    }
    // large arguments: exact reduction keeps the octant table exact
    CHECK(cispi(Rational(Integer("1000000000000000000001"), Integer(1))) == ComplexF(-1, 0));
}

TEST_CASE("SL2Z")
{
    CHECK_THROWS_AS(SL2Z(1, 0, 0, 2), DeterminantError);
    const SL2Z m(2, 3, 1, 2);
    CHECK(m * m.inverse() == SL2Z::identity());
    CHECK(SL2Z::F1() * SL2Z::F1() == SL2Z(-1, 0, 0, -1));
    CHECK(SL2Z::W(3) == SL2Z(1, 0, 3, 1));
    CHECK(SL2Z::W(2) * SL2Z::W(-5) == SL2Z::W(-3));
    CHECK(m.str() == "(2 3; 1 2)");
}

TEST_CASE("gcd_ext and completion")
{
    CHECK_THROWS_AS(gcd_ext(0, 0), DomainError);
    for (long a = -15; a <= 15; ++a)
        for (long b = -15; b <= 15; ++b) {
            if (a == 0 && b == 0) continue;
            const ExtGcd e = gcd_ext(a, b);
            CHECK(e.g == oracle::gcd(a, b));
            CHECK(Integer(a * e.x + b * e.y) == e.g);
            if (e.g != 1) {
                CHECK_THROWS_AS(complete_to_sl2z(a, b), DomainError);
                continue;
            }
            const auto [c, d] = complete_to_sl2z(a, b);
            CHECK(Integer(a * d - b * c) == 1);
            if (b != 0) {
                CHECK(d > 0);
                CHECK(d <= std::abs(b));
            } else {
                CHECK(c == 0);
                CHECK(d == a);
            }
        }
    CHECK(complete_to_sl2z(1, 1) == std::make_pair(Integer(0), Integer(1)));
    CHECK(complete_to_sl2z(200, 201) == std::make_pair(Integer(199), Integer(200)));
}

TEST_CASE("shift parity")
{
    const SL2Z m(1, 1, 0, 1);
    CHECK(default_shift(m) == ShiftClass{1, 0});
    CHECK(shift_parity_check(m, {3, -2}));
    CHECK_FALSE(shift_parity_check(m, {0, 0}));
    CHECK_THROWS_AS(require_parity(m, {0, 0}), ParityError);
    CHECK(default_shift(SL2Z::F1()) == ShiftClass{0, 0});
    CHECK(is_even(-4));
    CHECK_FALSE(is_even(-3));
}

TEST_CASE("shift change phase")
{
    CHECK(shift_change_phase(1, 0, 1, 0).phi() == Rational(0));
    CHECK_THROWS_AS(shift_change_phase(1, 0, 0, 0), ParityError);
    // composing two changes is one change
    for (long q = -3; q <= 3; ++q)
        for (long p = -3; p <= 3; ++p)
            for (long u = -2; u <= 2; ++u)
                for (long v = -2; v <= 2; ++v) {
                    const long q2 = q + 2 * u, p2 = p + 2 * v, q3 = q - 2 * v, p3 = p + 2 * u;
                    const PhaseQ direct = shift_change_phase(q, p, q3, p3);
                    const PhaseQ via = shift_change_phase(q, p, q2, p2) * shift_change_phase(q2, p2, q3, p3);
                    CHECK(direct == via);
                }
}
