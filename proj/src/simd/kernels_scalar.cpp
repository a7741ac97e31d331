#include "diracbrush/simd/kernels.hpp"

#include <cmath>

namespace diracbrush::simd::detail {

namespace {

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v)
    {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

ComplexF sum_cexp_scalar(const double* x, const double* y, std::size_t n)
{
    Neumaier re, im;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] < -708.0) continue;
        const double m = std::exp(x[i]);
        re.add(m * std::cos(y[i]));
        im.add(m * std::sin(y[i]));
    }
    return {re.value(), im.value()};
}

void cispi_batch_scalar(const double* phi, double* re, double* im, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexF v = cispi(phi[i]);
        re[i] = v.real();
        im[i] = v.imag();
    }
}

}  // namespace diracbrush::simd::detail
