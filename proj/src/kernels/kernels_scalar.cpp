// Scalar reference kernels. These define the numeric contract: reductions
// run four accumulator lanes over the 4-aligned body, combine lanes as
// (l0+l2)+(l1+l3), then fold the tail sequentially. SIMD backends replicate
// that exact operation tree, so results match bit for bit.

#include "qlass/kernels.hpp"

namespace qlass::kernels::scalar {

double sum(const double* x, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        l0 += x[i];
        l1 += x[i + 1];
        l2 += x[i + 2];
        l3 += x[i + 3];
    }
    double r = (l0 + l2) + (l1 + l3);
    for (; i < n; ++i) r += x[i];
    return r;
}

void vec_add(double* acc, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void accum_sq_diff(double* acc, const double* x, const double* mean,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - mean[i];
        acc[i] += d * d;
    }
}

void normalize(double* out, const double* x, const double* shift,
               const double* scale, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] - shift[i]) * scale[i];
}

double weighted_ssd(const double* x, const double* mean, const double* w,
                    std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double d0 = x[i] - mean[i];
        const double d1 = x[i + 1] - mean[i + 1];
        const double d2 = x[i + 2] - mean[i + 2];
        const double d3 = x[i + 3] - mean[i + 3];
        l0 += (d0 * d0) * w[i];
        l1 += (d1 * d1) * w[i + 1];
        l2 += (d2 * d2) * w[i + 2];
        l3 += (d3 * d3) * w[i + 3];
    }
    double r = (l0 + l2) + (l1 + l3);
    for (; i < n; ++i) {
        const double d = x[i] - mean[i];
        r += (d * d) * w[i];
    }
    return r;
}

std::size_t argmax(const double* x, std::size_t n) {
    std::size_t best = 0;
    double best_v = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] > best_v) {
            best_v = x[i];
            best = i;
        }
    }
    return best;
}

std::size_t count_equal_i32(const std::int32_t* x, std::size_t n,
                            std::int32_t v) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += (x[i] == v) ? 1 : 0;
    return c;
}

}  // namespace qlass::kernels::scalar

namespace qlass::kernels {

const Ops& scalar_ops() {
    static const Ops table{
        scalar::sum,        scalar::vec_add, scalar::accum_sq_diff,
        scalar::normalize,  scalar::weighted_ssd,
        scalar::argmax,     scalar::count_equal_i32,
    };
    return table;
}

}  // namespace qlass::kernels
