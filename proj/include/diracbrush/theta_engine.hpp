#pragma once

#include <vector>

#include "diracbrush/exact_core.hpp"

namespace diracbrush {

struct ThetaArgs {
    ComplexF z;
    ComplexF tau;
    Integer q = 0;
    Integer p = 0;
};

// e^{i pi p q/4} sum_{m in Z - q/2} e^{i pi tau m^2 + 2 pi i m z + i pi p m}
ComplexF theta_qp(const ThetaArgs& args, double tol = 1e-16);

// Same series with tau = rational + tau_rest; the rational part of the phase is
// reduced exactly, which matters when Im tau is small and Re tau is large.
ComplexF theta_qp_split(ComplexF z, const Rational& tau_rational, ComplexF tau_rest, const Integer& q,
                        const Integer& p, double tol = 1e-16);

struct FunctionalEquation {
    ComplexF lhs;
    ComplexF rhs;
    double residual = 0;
};

// theta_00(z, tau) against mu^{-1} e^{-pi i b z^2/(a+b tau)} (a+b tau)^{-1/2} theta_qp(z', tau')
FunctionalEquation functional_equation(const SL2Z& m, const ShiftClass& shift, ComplexF z, ComplexF tau,
                                       double tol = 1e-16);
double functional_equation_residual(const SL2Z& m, const ShiftClass& shift, ComplexF z, ComplexF tau,
                                    double tol = 1e-16);

struct RealMatrix {
    double a = 1, b = 0, c = 0, d = 1;
};

struct GaussianTransform {
    ComplexF factor;     // (a + b tau)^{-1/2}, positive real part
    ComplexF tau_prime;  // (c + d tau)/(a + b tau)
};

GaussianTransform gaussian_transform(const RealMatrix& m, ComplexF tau);
GaussianTransform gaussian_transform(const SL2Z& m, ComplexF tau);

struct ShiftProjection {
    ComplexF eta0;
    ComplexF scalar;
};

// g_{(x0,xi0),tau} = scalar * g_{(0,eta0),tau}
ShiftProjection gaussian_shift_project(ComplexF x0, ComplexF xi0, ComplexF tau);

// e^{-pi i x0 xi0 + 2 pi i xi0 x + pi i tau (x - x0)^2}
ComplexF gaussian_eval(ComplexF x0, ComplexF xi0, ComplexF tau, double x);

// sigma in M(M1) M(M2) = sigma M(M1 M2)
int metaplectic_compose_sign(const SL2Z& m1, const SL2Z& m2);
int metaplectic_compose_sign(const RealMatrix& m1, const RealMatrix& m2, ComplexF probe);

ComplexF bargmann_comb(ComplexF z, const Rational& r_sq);
// e^{-pi |z|^2} |B comb_r(z)|^2
double bargmann_mass(ComplexF z, const Rational& r_sq);

struct GridRow {
    double re_z = 0;
    double im_z = 0;
    double mass = 0;
    double phase = 0;
};

// Outer loop over Im z, inner over Re z, both ascending.
std::vector<GridRow> bargmann_grid(double re_lo, double re_hi, double im_lo, double im_hi, double step,
                                   const Rational& r_sq);

}  // namespace diracbrush
