// NEON kernels for aarch64, where AdvSIMD is baseline. Two float64x2
// accumulators emulate the scalar reference's four lanes; the reduction is
// the same (l0+l2)+(l1+l3) tree, so results stay bit-exact with scalar.

#include "qlass/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

namespace qlass::kernels::neon {

double sum(const double* x, std::size_t n) {
    float64x2_t a01 = vdupq_n_f64(0.0);  // lanes l0, l1
    float64x2_t a23 = vdupq_n_f64(0.0);  // lanes l2, l3
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a01 = vaddq_f64(a01, vld1q_f64(x + i));
        a23 = vaddq_f64(a23, vld1q_f64(x + i + 2));
    }
    // [l0+l2, l1+l3] -> (l0+l2) + (l1+l3)
    const float64x2_t s = vaddq_f64(a01, a23);
    double r = vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1);
    for (; i < n; ++i) r += x[i];
    return r;
}

void vec_add(double* acc, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
    }
    for (; i < n; ++i) acc[i] += x[i];
}

void accum_sq_diff(double* acc, const double* x, const double* mean,
                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(x + i), vld1q_f64(mean + i));
        vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vmulq_f64(d, d)));
    }
    for (; i < n; ++i) {
        const double d = x[i] - mean[i];
        acc[i] += d * d;
    }
}

void normalize(double* out, const double* x, const double* shift,
               const double* scale, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(x + i), vld1q_f64(shift + i));
        vst1q_f64(out + i, vmulq_f64(d, vld1q_f64(scale + i)));
    }
    for (; i < n; ++i) out[i] = (x[i] - shift[i]) * scale[i];
}

double weighted_ssd(const double* x, const double* mean, const double* w,
                    std::size_t n) {
    float64x2_t a01 = vdupq_n_f64(0.0);
    float64x2_t a23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t d0 = vsubq_f64(vld1q_f64(x + i), vld1q_f64(mean + i));
        const float64x2_t d1 =
            vsubq_f64(vld1q_f64(x + i + 2), vld1q_f64(mean + i + 2));
        a01 = vaddq_f64(a01, vmulq_f64(vmulq_f64(d0, d0), vld1q_f64(w + i)));
        a23 = vaddq_f64(a23, vmulq_f64(vmulq_f64(d1, d1), vld1q_f64(w + i + 2)));
    }
    const float64x2_t s = vaddq_f64(a01, a23);
    double r = vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1);
    for (; i < n; ++i) {
        const double d = x[i] - mean[i];
        r += (d * d) * w[i];
    }
    return r;
}

std::size_t argmax(const double* x, std::size_t n) {
    std::size_t i = 0;
    double m;
    if (n >= 2) {
        float64x2_t vm = vld1q_f64(x);
        for (i = 2; i + 2 <= n; i += 2) {
            vm = vmaxq_f64(vm, vld1q_f64(x + i));
        }
        m = vmaxvq_f64(vm);
    } else {
        m = x[0];
        i = 1;
    }
    for (; i < n; ++i) {
        if (x[i] > m) m = x[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == m) return j;
    }
    return 0;  // unreachable for finite input
}

std::size_t count_equal_i32(const std::int32_t* x, std::size_t n,
                            std::int32_t v) {
    const int32x4_t vv = vdupq_n_s32(v);
    uint32x4_t acc = vdupq_n_u32(0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // lanes of the compare are all-ones (0xFFFFFFFF) on match
        acc = vsubq_u32(acc, vceqq_s32(vld1q_s32(x + i), vv));
    }
    std::size_t c = vaddvq_u32(acc);
    for (; i < n; ++i) c += (x[i] == v) ? 1 : 0;
    return c;
}

}  // namespace qlass::kernels::neon

namespace qlass::kernels {

const Ops* neon_table() {
    static const Ops table{
        neon::sum,        neon::vec_add, neon::accum_sq_diff,
        neon::normalize,  neon::weighted_ssd,
        neon::argmax,     neon::count_equal_i32,
    };
    return &table;
}

}  // namespace qlass::kernels

#endif  // aarch64
