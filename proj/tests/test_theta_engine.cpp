#include <doctest.h>

#include <random>

#include "diracbrush/theta_engine.hpp"
#include "oracles.hpp"

using namespace diracbrush;

TEST_CASE("theta values")
{
    CHECK(std::abs(theta_qp({0, {0, 1}}) - oracle::comb_sum(1.0)) < 1e-14);
    CHECK(std::abs(theta_qp({0, {0, 2}}) - 1.0037348) < 1e-7);
    CHECK(std::abs(theta_qp({0, {0, 0.5}}) - 1.4194955) < 1e-7);
    CHECK_THROWS_AS(theta_qp({0, {0, 0}}), DomainError);
    CHECK_THROWS_AS(theta_qp({0, {0, 1}}, 0.0), DomainError);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1), im(0.5, 3);
    for (int i = 0; i < 50; ++i) {
        const ComplexF z(u(rng), u(rng)), tau(2 * u(rng), im(rng));
        const long q = static_cast<long>(4 * u(rng)), p = static_cast<long>(4 * u(rng));
        CHECK(std::abs(theta_qp({z, tau, q, p}) - oracle::theta(z, tau, q, p)) < 1e-12);
    }
}

TEST_CASE("truncation radius")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1), im(0.5, 3);
    for (int i = 0; i < 30; ++i) {
        const ThetaArgs a{{u(rng), u(rng)}, {u(rng), im(rng)}, 1, 1};
        CHECK(std::abs(theta_qp(a, 1e-16) - theta_qp(a, 1e-40)) < 1e-13);
    }
}

TEST_CASE("functional equation examples")
{
    const FunctionalEquation f = functional_equation(SL2Z::F1(), {0, 0}, 0, {0, 2});
    CHECK(f.lhs.real() == doctest::Approx(1.0037348).epsilon(1e-7));
    CHECK(f.rhs.real() == doctest::Approx(1.0037348).epsilon(1e-7));
    CHECK(f.residual < 1e-10);
    CHECK(functional_equation_residual(SL2Z::identity(), {0, 0}, {0.3, -0.2}, {0.1, 1.2}) < 1e-14);
    const FunctionalEquation g = functional_equation(SL2Z::F1(), {0, 0}, 0, {0, 1});
    CHECK(std::abs(g.lhs - g.rhs) < 1e-14);
    CHECK_THROWS_AS(functional_equation(SL2Z(1, 1, 0, 1), {0, 0}, 0, {0, 1}), ParityError);
}

TEST_CASE("functional equation on random matrices")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> ent(-10, 10), shift(-2, 2);
    std::uniform_real_distribution<double> u(-1, 1), re(-2, 2), im(0.5, 3);
    int done = 0;
    while (done < 60) {
        const long a = ent(rng), b = ent(rng);
        if (b == 0 || oracle::gcd(a, b) != 1) continue;
        const auto [c0, d0] = complete_to_sl2z(a, b);
        const long j = shift(rng);
        const SL2Z m(a, b, c0 + j * a, d0 + j * b);
        const ShiftClass base = default_shift(m);
        const ShiftClass s{base.q + 2 * shift(rng), base.p + 2 * shift(rng)};
        ComplexF z(u(rng), u(rng));
        if (std::abs(z) > 1) z /= std::abs(z);
        CHECK(functional_equation_residual(m, s, z, {re(rng), im(rng)}) < 1e-10);
        ++done;
    }
}

TEST_CASE("gaussian transform")
{
    const GaussianTransform id = gaussian_transform(SL2Z::identity(), {0.2, 0.7});
    CHECK(std::abs(id.factor - 1.0) < 1e-15);
    CHECK(std::abs(id.tau_prime - ComplexF(0.2, 0.7)) < 1e-15);
    const GaussianTransform f = gaussian_transform(SL2Z::F1(), {0, 1});
    CHECK(std::abs(f.tau_prime - ComplexF(0, 1)) < 1e-15);
    CHECK(std::abs(f.factor - std::polar(1.0, -oracle::pi / 4)) < 1e-15);
    const GaussianTransform w = gaussian_transform(RealMatrix{1, 0, 2.5, 1}, {0.1, 1});
    CHECK(std::abs(w.factor - 1.0) < 1e-15);
    CHECK(std::abs(w.tau_prime - ComplexF(2.6, 1)) < 1e-15);

    // composing the Mobius maps equals the map of the product
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2, 2), im(0.5, 3);
    for (int i = 0; i < 30; ++i) {
        const double a1 = u(rng), b1 = u(rng), c1 = u(rng), a2 = u(rng), b2 = u(rng), c2 = u(rng);
        if (std::abs(a1) < 0.1 || std::abs(a2) < 0.1) continue;
        const RealMatrix m1{a1, b1, c1, (1 + b1 * c1) / a1};
        const RealMatrix m2{a2, b2, c2, (1 + b2 * c2) / a2};
        const RealMatrix m3{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d, m1.c * m2.a + m1.d * m2.c,
                            m1.c * m2.b + m1.d * m2.d};
        const ComplexF tau(u(rng), im(rng));
        const ComplexF t1 = gaussian_transform(m2, tau).tau_prime;
        const ComplexF t2 = gaussian_transform(m1, t1).tau_prime;
        const ComplexF t3 = gaussian_transform(m3, tau).tau_prime;
        CHECK(std::abs(t2 - t3) < 1e-12 * (1 + std::abs(t3)));
        CHECK(t1.imag() > 0);
    }
}

TEST_CASE("shift projection")
{
    const ShiftProjection p0 = gaussian_shift_project(0, {0.3, 0.1}, {0, 1});
    CHECK(std::abs(p0.eta0 - ComplexF(0.3, 0.1)) < 1e-15);
    CHECK(std::abs(p0.scalar - 1.0) < 1e-15);
    const ComplexF tau(0.4, 1.1);
    const ShiftProjection lag = gaussian_shift_project(0.7, tau * 0.7, tau);
    CHECK(std::abs(lag.eta0) < 1e-15);
    CHECK(std::abs(lag.scalar - 1.0) < 1e-15);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const ComplexF x0(0.6, 0), xi0(-0.4, 0.2);
    const ShiftProjection sp = gaussian_shift_project(x0, xi0, tau);
    for (int i = 0; i < 10; ++i) {
        const double x = u(rng);
        const oracle::C direct = std::exp(oracle::I * oracle::pi * (-x0 * xi0 + 2.0 * xi0 * x + tau * (x - x0) * (x - x0)));
        const oracle::C projected = sp.scalar * std::exp(oracle::I * oracle::pi * (2.0 * sp.eta0 * x + tau * x * x));
        CHECK(std::abs(gaussian_eval(x0, xi0, tau, x) - direct) < 1e-12);
        CHECK(std::abs(direct - projected) < 1e-12);
    }
}

TEST_CASE("composition signs")
{
    CHECK(metaplectic_compose_sign(SL2Z::F1(), SL2Z::F1()) == 1);
    // F^2 F^2 = F^4 = -1 in the metaplectic group
    const SL2Z minus(-1, 0, 0, -1);
    CHECK(metaplectic_compose_sign(minus, minus) == -1);
    for (long t = -3; t <= 3; ++t) {
        CHECK(metaplectic_compose_sign(SL2Z::W(t), SL2Z::F1()) == 1);
        CHECK(metaplectic_compose_sign(SL2Z::W(t), SL2Z(2, 3, 1, 2)) == 1);
    }
    CHECK(metaplectic_compose_sign(RealMatrix{0.5, 0, 0, 2}, RealMatrix{0, 1, -1, 0}, {0, 1}) == 1);
    // probe independence over a small box
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            if (oracle::gcd(a, b) != 1) continue;
            const auto [c, d] = complete_to_sl2z(a, b);
            const SL2Z m(a, b, c, d);
            const int s = metaplectic_compose_sign(m, SL2Z::F1());
            CHECK((s == 1 || s == -1));
        }
}

TEST_CASE("Bargmann transform of combs")
{
    CHECK(std::abs(bargmann_comb(0, 1) - oracle::comb_sum(1.0)) < 1e-14);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 20; ++i) {
        const ComplexF z(u(rng), u(rng));
        const ComplexF via_theta = std::exp(-oracle::pi * z * z / 2.0) * oracle::theta(-oracle::I * z, {0, 1}, 0, 0);
        CHECK(std::abs(bargmann_comb(z, 1) - via_theta) < 1e-12 * (1 + std::abs(via_theta)));
        // rotation by pi/2
        const double norm = std::exp(-oracle::pi * std::norm(z) / 2);
        CHECK(std::abs(std::abs(bargmann_comb(oracle::I * z, 1)) * norm - std::abs(bargmann_comb(z, 1)) * norm) < 1e-10);
        CHECK(bargmann_mass(z, 1) == doctest::Approx(std::norm(bargmann_comb(z, 1)) * norm * norm).epsilon(1e-10));
    }
}

TEST_CASE("Bargmann mass periodicity")
{
    for (const Rational& r_sq : {Rational(1), Rational(2), Rational(1, 2)}) {
        const double r = std::sqrt(r_sq.to_double());
        for (const ComplexF z : {ComplexF(0.1, 0.2), ComplexF(-0.35, 0.6)}) {
            const double m0 = bargmann_mass(z, r_sq);
            for (long j = -2; j <= 2; ++j)
                for (long k = -2; k <= 2; ++k)
                    CHECK(std::abs(bargmann_mass(z + ComplexF(r * j, k / r), r_sq) - m0) < 1e-10);
        }
    }
}

TEST_CASE("Bargmann grid")
{
    const auto one = bargmann_grid(0, 0, 0, 0, 0.1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].mass == doctest::Approx(1.18034060).epsilon(1e-8));
    const auto g = bargmann_grid(0, 1, 0, 1, 0.5, 1);
    REQUIRE(g.size() == 9);
    CHECK(g[1].re_z == 0.5);
    CHECK(g[1].im_z == 0.0);
    CHECK(g[3].re_z == 0.0);
    CHECK(g[3].im_z == 0.5);
    for (const GridRow& row : g) CHECK(row.mass >= 0);
    CHECK_THROWS_AS(bargmann_grid(0, 1, 0, 1, 0, 1), DomainError);
}
