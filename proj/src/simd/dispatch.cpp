#include "diracbrush/simd/kernels.hpp"

#include <atomic>

namespace diracbrush::simd {

namespace {

bool cpu_has_avx2()
{
#if defined(DIRACBRUSH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current()
{
    static std::atomic<Backend> b{detect()};
    return b;
}

}  // namespace

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::scalar || cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b)
{
    if (!backend_available(b)) throw DomainError(std::string("backend not available: ") + backend_name(b));
    current().store(b, std::memory_order_relaxed);
}

ComplexF sum_cexp(const double* x, const double* y, std::size_t n)
{
#if defined(DIRACBRUSH_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return detail::sum_cexp_avx2(x, y, n);
#endif
    return detail::sum_cexp_scalar(x, y, n);
}

void cispi_batch(const double* phi, double* re, double* im, std::size_t n)
{
#if defined(DIRACBRUSH_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        detail::cispi_batch_avx2(phi, re, im, n);
        return;
    }
#endif
    detail::cispi_batch_scalar(phi, re, im, n);
}

}  // namespace diracbrush::simd
