// AVX2 + FMA variants of the exponential-sum kernels.  Built with -mavx2 -mfma
// and only called after a cpuid check.

#include "diracbrush/simd/kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace diracbrush::simd::detail {

namespace {

constexpr std::size_t kLanes = 4;

// sin(r), cos(r) for |r| <= pi/4, Taylor through r^17 / r^18.
inline void sincos_reduced(__m256d r, __m256d& s, __m256d& c)
{
    const __m256d r2 = _mm256_mul_pd(r, r);
    __m256d ps = _mm256_set1_pd(1.0 / 355687428096000.0);     // 1/17!
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-1.0 / 1307674368000.0));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(1.0 / 6227020800.0));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-1.0 / 39916800.0));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(1.0 / 362880.0));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-1.0 / 5040.0));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(1.0 / 120.0));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(-1.0 / 6.0));
    s = _mm256_fmadd_pd(_mm256_mul_pd(ps, r2), r, r);

    __m256d pc = _mm256_set1_pd(1.0 / 6402373705728000.0);    // 1/18!
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-1.0 / 20922789888000.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(1.0 / 87178291200.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-1.0 / 479001600.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(1.0 / 3628800.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-1.0 / 40320.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(1.0 / 720.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(-1.0 / 24.0));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(0.5));
    c = _mm256_fnmadd_pd(pc, r2, _mm256_set1_pd(1.0));
}

// cos(y), sin(y) for |y| < 2^20.
inline void sincos(__m256d y, __m256d& sn, __m256d& cs)
{
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.63661977236758138)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(1.5707963267948966), y);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(6.123233995736766e-17), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(-1.4973849048591698e-33), r);

    __m256d s, c;
    sincos_reduced(r, s, c);

    const __m128i q = _mm256_cvtpd_epi32(k);
    const __m256i q64 = _mm256_cvtepi32_epi64(q);
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    // odd quadrant: swap sin/cos
    const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q64, one), one));
    __m256d sv = _mm256_blendv_pd(s, c, swap);
    __m256d cv = _mm256_blendv_pd(c, s, swap);
    // sin negated for quadrants 2,3; cos negated for quadrants 1,2
    const __m256i sign_bit = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
    const __m256i neg_s = _mm256_cmpeq_epi64(_mm256_and_si256(q64, two), two);
    const __m256i qp1 = _mm256_add_epi64(q64, one);
    const __m256i neg_c = _mm256_cmpeq_epi64(_mm256_and_si256(qp1, two), two);
    sv = _mm256_xor_pd(sv, _mm256_castsi256_pd(_mm256_and_si256(neg_s, sign_bit)));
    cv = _mm256_xor_pd(cv, _mm256_castsi256_pd(_mm256_and_si256(neg_c, sign_bit)));
    sn = sv;
    cs = cv;
}

// exp(x) for -708 <= x <= 709.
inline __m256d exp_pd(__m256d x)
{
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(0.6931471805599453), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(2.3190468138462996e-17), r);

    __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);           // 1/13!
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    const __m256i ni = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ni, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

struct NeumaierVec {
    __m256d sum = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();

    void add(__m256d v)
    {
        const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
        const __m256d t = _mm256_add_pd(sum, v);
        const __m256d big_sum = _mm256_cmp_pd(_mm256_and_pd(sum, abs_mask), _mm256_and_pd(v, abs_mask), _CMP_GE_OQ);
        const __m256d a = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
        const __m256d b = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
        comp = _mm256_add_pd(comp, _mm256_blendv_pd(b, a, big_sum));
        sum = t;
    }
};

void neumaier_add(double& sum, double& comp, double v)
{
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
        comp += (sum - t) + v;
    else
        comp += (v - t) + sum;
    sum = t;
}

double reduce_lanes(const NeumaierVec& acc, double tail_sum, double tail_comp)
{
    alignas(32) double s[kLanes];
    alignas(32) double c[kLanes];
    _mm256_store_pd(s, acc.sum);
    _mm256_store_pd(c, acc.comp);
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < kLanes; ++i) neumaier_add(sum, comp, s[i]);
    neumaier_add(sum, comp, tail_sum);
    for (std::size_t i = 0; i < kLanes; ++i) comp += c[i];
    return sum + comp + tail_comp;
}

bool block_in_range(__m256d x, __m256d y)
{
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d ok_y = _mm256_cmp_pd(_mm256_and_pd(y, abs_mask), _mm256_set1_pd(1.0e6), _CMP_LT_OQ);
    const __m256d ok_x = _mm256_cmp_pd(x, _mm256_set1_pd(709.0), _CMP_LE_OQ);
    return _mm256_movemask_pd(_mm256_and_pd(ok_x, ok_y)) == 0xF;
}

}  // namespace

ComplexF sum_cexp_avx2(const double* x, const double* y, std::size_t n)
{
    NeumaierVec re, im;
    double tre = 0.0, tre_c = 0.0, tim = 0.0, tim_c = 0.0;
    const __m256d floor_x = _mm256_set1_pd(-708.0);

    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        if (!block_in_range(xv, yv)) {
            const ComplexF part = sum_cexp_scalar(x + i, y + i, kLanes);
            neumaier_add(tre, tre_c, part.real());
            neumaier_add(tim, tim_c, part.imag());
            continue;
        }
        const __m256d live = _mm256_cmp_pd(xv, floor_x, _CMP_GE_OQ);
        const __m256d m = _mm256_and_pd(exp_pd(_mm256_max_pd(xv, floor_x)), live);
        __m256d s, c;
        sincos(yv, s, c);
        re.add(_mm256_mul_pd(m, c));
        im.add(_mm256_mul_pd(m, s));
    }
    if (i < n) {
        const ComplexF part = sum_cexp_scalar(x + i, y + i, n - i);
        neumaier_add(tre, tre_c, part.real());
        neumaier_add(tim, tim_c, part.imag());
    }
    return {reduce_lanes(re, tre, tre_c), reduce_lanes(im, tim, tim_c)};
}

void cispi_batch_avx2(const double* phi, double* re, double* im, std::size_t n)
{
    constexpr double h = 0.70710678118654752440;
    alignas(32) static const double oct_re[8] = {1.0, h, 0.0, -h, -1.0, -h, 0.0, h};
    alignas(32) static const double oct_im[8] = {0.0, h, 1.0, h, 0.0, -h, -1.0, -h};
    const __m256d pi = _mm256_set1_pd(3.14159265358979323846);

    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d p = _mm256_loadu_pd(phi + i);
        const __m256d half_floor = _mm256_floor_pd(_mm256_mul_pd(p, _mm256_set1_pd(0.5)));
        const __m256d r = _mm256_fnmadd_pd(half_floor, _mm256_set1_pd(2.0), p);
        const __m256d k = _mm256_round_pd(_mm256_mul_pd(r, _mm256_set1_pd(4.0)),
                                          _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        const __m256d f = _mm256_fnmadd_pd(k, _mm256_set1_pd(0.25), r);
        __m256d s, c;
        sincos_reduced(_mm256_mul_pd(pi, f), s, c);
        const __m128i ki = _mm_and_si128(_mm256_cvtpd_epi32(k), _mm_set1_epi32(7));
        const __m256d ore = _mm256_i32gather_pd(oct_re, ki, 8);
        const __m256d oim = _mm256_i32gather_pd(oct_im, ki, 8);
        // (ore + i oim)(c + i s)
        _mm256_storeu_pd(re + i, _mm256_fmsub_pd(ore, c, _mm256_mul_pd(oim, s)));
        _mm256_storeu_pd(im + i, _mm256_fmadd_pd(ore, s, _mm256_mul_pd(oim, c)));
    }
    if (i < n) cispi_batch_scalar(phi + i, re + i, im + i, n - i);
}

}  // namespace diracbrush::simd::detail
