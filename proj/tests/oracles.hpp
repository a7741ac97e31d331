#pragma once

// Independent reference computations used by the tests.  Plain double
// arithmetic and naive loops only; nothing from the library's numerics.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace oracle {

using C = std::complex<double>;
constexpr double pi = std::numbers::pi;
const C I(0.0, 1.0);

// e^{i pi pq/4} sum_{m in Z - q/2} e^{i pi tau m^2 + 2 pi i m z + i pi p m}
inline C theta(C z, C tau, long q, long p, long radius = 400)
{
    C sum = 0;
    for (long j = -radius; j <= radius; ++j) {
        const double m = static_cast<double>(j) - q / 2.0;
        sum += std::exp(I * pi * (tau * m * m + 2.0 * m * z + static_cast<double>(p) * m));
    }
    return std::exp(I * pi * (p * q / 4.0)) * sum;
}

inline C sqrt_pos(C w)
{
    if (w.imag() == 0.0) w = C(w.real(), 0.0);
    return std::sqrt(w);
}

// mu(M; q, p) read off the theta functional equation, as an octant 0..7.
// tau is placed so that Im tau' = Im tau = 1/|b| keeps both series short.
inline int mu_from_theta(long a, long b, long c, long d, long q, long p)
{
    const C z(0.13, 0.07);
    C tau = b == 0 ? C(0.2, 1.0) : C(-static_cast<double>(a) / b, 1.0 / std::abs(b));
    const C w = static_cast<double>(a) + static_cast<double>(b) * tau;
    const C tau2 = (static_cast<double>(c) + static_cast<double>(d) * tau) / w;
    const C rhs_no_mu = std::exp(-I * pi * static_cast<double>(b) * z * z / w) / sqrt_pos(w) * theta(z / w, tau2, q, p);
    const C mu_bar = theta(z, tau, 0, 0) / rhs_no_mu;
    const double k = std::nearbyint(-std::arg(mu_bar) / (pi / 4));
    return static_cast<int>(((static_cast<long>(k) % 8) + 8) % 8);
}

inline C eighth(int k) { return std::polar(1.0, pi * k / 4.0); }

inline double comb_sum(double imtau)
{
    // sum_k e^{-pi imtau k^2}
    double s = 0;
    for (long k = -60; k <= 60; ++k) s += std::exp(-pi * imtau * static_cast<double>(k * k));
    return s;
}

inline long gcd(long a, long b)
{
    a = std::abs(a), b = std::abs(b);
    while (b) {
        const long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace oracle
