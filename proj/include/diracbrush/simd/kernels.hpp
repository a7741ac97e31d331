#pragma once

#include <cstddef>

#include "diracbrush/exact_core.hpp"

namespace diracbrush::simd {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Throws DomainError when the backend is not usable on this CPU/build.
void set_backend(Backend b);

class ScopedBackend {
public:
    explicit ScopedBackend(Backend b) : saved_(active_backend()) { set_backend(b); }
    ~ScopedBackend() { set_backend(saved_); }
    ScopedBackend(const ScopedBackend&) = delete;
    ScopedBackend& operator=(const ScopedBackend&) = delete;

private:
    Backend saved_;
};

// sum_i exp(x[i] + i*y[i]) with compensated accumulation.  Terms with
// x < -708 contribute zero.
ComplexF sum_cexp(const double* x, const double* y, std::size_t n);

// re[i] + i*im[i] = e^{i pi phi[i]}
void cispi_batch(const double* phi, double* re, double* im, std::size_t n);

namespace detail {
ComplexF sum_cexp_scalar(const double* x, const double* y, std::size_t n);
void cispi_batch_scalar(const double* phi, double* re, double* im, std::size_t n);
#if defined(DIRACBRUSH_HAVE_AVX2)
ComplexF sum_cexp_avx2(const double* x, const double* y, std::size_t n);
void cispi_batch_avx2(const double* phi, double* re, double* im, std::size_t n);
#endif
}  // namespace detail

}  // namespace diracbrush::simd
