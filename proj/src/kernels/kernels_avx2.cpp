// AVX2 kernels. Bit-exact with the scalar reference: same four-lane
// accumulation, same (l0+l2)+(l1+l3) reduction, mul+add instead of FMA.
// This file is compiled with -mavx2 and only ever called after a runtime
// cpuid check in kernels.cpp.

#include "qlass/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

namespace qlass::kernels::avx2 {

namespace {

// (l0+l2)+(l1+l3) over the four lanes of acc.
inline double reduce_lanes(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);       // [l0, l1]
    const __m128d hi = _mm256_extractf128_pd(acc, 1);     // [l2, l3]
    const __m128d s = _mm_add_pd(lo, hi);                 // [l0+l2, l1+l3]
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    double r = reduce_lanes(acc);
    for (; i < n; ++i) r += x[i];
    return r;
}

void vec_add(double* acc, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(acc + i);
        const __m256d b = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(acc + i, _mm256_add_pd(a, b));
    }
    for (; i < n; ++i) acc[i] += x[i];
}

void accum_sq_diff(double* acc, const double* x, const double* mean,
                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d =
            _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mean + i));
        const __m256d a = _mm256_loadu_pd(acc + i);
        _mm256_storeu_pd(acc + i, _mm256_add_pd(a, _mm256_mul_pd(d, d)));
    }
    for (; i < n; ++i) {
        const double d = x[i] - mean[i];
        acc[i] += d * d;
    }
}

void normalize(double* out, const double* x, const double* shift,
               const double* scale, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d =
            _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(shift + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, _mm256_loadu_pd(scale + i)));
    }
    for (; i < n; ++i) out[i] = (x[i] - shift[i]) * scale[i];
}

double weighted_ssd(const double* x, const double* mean, const double* w,
                    std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d =
            _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mean + i));
        const __m256d sq = _mm256_mul_pd(d, d);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(sq, _mm256_loadu_pd(w + i)));
    }
    double r = reduce_lanes(acc);
    for (; i < n; ++i) {
        const double d = x[i] - mean[i];
        r += (d * d) * w[i];
    }
    return r;
}

std::size_t argmax(const double* x, std::size_t n) {
    // Max-reduce, then find the first element equal to the max. Equality on
    // the same finite values gives the lowest-index winner, matching scalar.
    std::size_t i = 0;
    double m;
    if (n >= 4) {
        __m256d vm = _mm256_loadu_pd(x);
        for (i = 4; i + 4 <= n; i += 4) {
            vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
        }
        const __m128d lo = _mm256_castpd256_pd128(vm);
        const __m128d hi = _mm256_extractf128_pd(vm, 1);
        const __m128d s = _mm_max_pd(lo, hi);
        m = _mm_cvtsd_f64(_mm_max_sd(s, _mm_unpackhi_pd(s, s)));
    } else {
        m = x[0];
        i = 1;
    }
    for (; i < n; ++i) {
        if (x[i] > m) m = x[i];
    }

    const __m256d vmax = _mm256_set1_pd(m);
    for (i = 0; i + 4 <= n; i += 4) {
        const __m256d eq = _mm256_cmp_pd(_mm256_loadu_pd(x + i), vmax, _CMP_EQ_OQ);
        const int mask = _mm256_movemask_pd(eq);
        if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(
                                  static_cast<unsigned>(mask)));
    }
    for (; i < n; ++i) {
        if (x[i] == m) return i;
    }
    return 0;  // unreachable for finite input
}

std::size_t count_equal_i32(const std::int32_t* x, std::size_t n,
                            std::int32_t v) {
    const __m256i vv = _mm256_set1_epi32(v);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i eq = _mm256_cmpeq_epi32(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)), vv);
        c += static_cast<std::size_t>(
            std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
    }
    for (; i < n; ++i) c += (x[i] == v) ? 1 : 0;
    return c;
}

}  // namespace qlass::kernels::avx2

namespace qlass::kernels {

const Ops* avx2_table() {
    static const Ops table{
        avx2::sum,        avx2::vec_add, avx2::accum_sq_diff,
        avx2::normalize,  avx2::weighted_ssd,
        avx2::argmax,     avx2::count_equal_i32,
    };
    return &table;
}

}  // namespace qlass::kernels

#endif  // x86
