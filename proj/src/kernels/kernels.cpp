#include "qlass/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qlass::kernels {

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
const Ops* avx2_table();  // kernels_avx2.cpp
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
const Ops* neon_table();  // kernels_neon.cpp
#endif

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
            return true;
#else
            return false;
#endif
    }
    return false;
}

namespace {

struct Active {
    const Ops* table;
    Backend backend;
};

Active pick_default() {
    if (const char* env = std::getenv("QLASS_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return {&scalar_ops(), Backend::scalar};
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
        if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2))
            return {avx2_table(), Backend::avx2};
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
        if (std::strcmp(env, "neon") == 0) return {neon_table(), Backend::neon};
#endif
        // unknown or unsupported value: fall through to auto-detect
    }
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
    if (backend_supported(Backend::avx2)) return {avx2_table(), Backend::avx2};
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
    return {neon_table(), Backend::neon};
#endif
    return {&scalar_ops(), Backend::scalar};
}

Active& active() {
    static Active a = pick_default();
    return a;
}

}  // namespace

const Ops& ops() { return *active().table; }

Backend active_backend() { return active().backend; }

bool set_backend(Backend b) {
    if (!backend_supported(b)) return false;
    switch (b) {
        case Backend::scalar:
            active() = {&scalar_ops(), Backend::scalar};
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
            active() = {avx2_table(), Backend::avx2};
            return true;
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
            active() = {neon_table(), Backend::neon};
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Ops* simd_ops() {
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
    if (backend_supported(Backend::avx2)) return avx2_table();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
    return neon_table();
#endif
    return nullptr;
}

}  // namespace qlass::kernels
