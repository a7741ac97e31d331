#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "diracbrush/simd/kernels.hpp"

namespace diracbrush::detail {

// Buffers (x, y) pairs and feeds them to simd::sum_cexp in fixed-size blocks,
// so the block boundaries (and hence the rounding) do not depend on the backend.
class CexpAccumulator {
public:
    static constexpr std::size_t kBlock = 4096;

    CexpAccumulator()
    {
        xs_.reserve(kBlock);
        ys_.reserve(kBlock);
    }

    void add(double x, double y)
    {
        xs_.push_back(x);
        ys_.push_back(y);
        if (xs_.size() == kBlock) flush();
    }

    ComplexF result()
    {
        flush();
        return {re_ + cre_, im_ + cim_};
    }

private:
    static void neumaier(double& s, double& c, double v)
    {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }

    void flush()
    {
        if (xs_.empty()) return;
        const ComplexF part = simd::sum_cexp(xs_.data(), ys_.data(), xs_.size());
        neumaier(re_, cre_, part.real());
        neumaier(im_, cim_, part.imag());
        xs_.clear();
        ys_.clear();
    }

    std::vector<double> xs_, ys_;
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

}  // namespace diracbrush::detail
