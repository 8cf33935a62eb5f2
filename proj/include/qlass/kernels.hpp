#pragma once

#include <cstddef>
#include <cstdint>

namespace qlass::kernels {

// Numeric inner loops behind a runtime-dispatched table. Every backend is
// bit-exact against the scalar reference: reductions accumulate in four
// independent lanes and combine as (l0+l2)+(l1+l3) in both paths, and no
// backend may use FMA. Backend choice therefore never changes an artifact.
struct Ops {
    // sum of x[0..n)
    double (*sum)(const double* x, std::size_t n);
    // acc[i] += x[i]
    void (*vec_add)(double* acc, const double* x, std::size_t n);
    // acc[i] += (x[i] - mean[i])^2
    void (*accum_sq_diff)(double* acc, const double* x, const double* mean,
                          std::size_t n);
    // out[i] = (x[i] - shift[i]) * scale[i]
    void (*normalize)(double* out, const double* x, const double* shift,
                      const double* scale, std::size_t n);
    // sum of (x[i] - mean[i])^2 * w[i]
    double (*weighted_ssd)(const double* x, const double* mean, const double* w,
                           std::size_t n);
    // index of the maximum; ties resolve to the lowest index. n must be > 0.
    std::size_t (*argmax)(const double* x, std::size_t n);
    // number of elements equal to v
    std::size_t (*count_equal_i32)(const std::int32_t* x, std::size_t n,
                                   std::int32_t v);
};

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

// Active table. Selected once at startup: QLASS_KERNELS=scalar|avx2|neon
// overrides, otherwise the widest supported backend wins.
const Ops& ops();
Backend active_backend();

// Force a backend (tests). Returns false if unsupported on this machine.
bool set_backend(Backend b);

// Backend tables for direct A/B comparison in tests.
const Ops& scalar_ops();
const Ops* simd_ops();  // null when no SIMD backend is compiled in / supported

}  // namespace qlass::kernels
