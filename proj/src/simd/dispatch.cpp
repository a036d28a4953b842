#include "casimir/simd.hpp"

#include <cstdlib>
#include <string_view>

namespace casimir::simd {

namespace detail {
void k2_batch_scalar(const double*, double*, std::size_t);
void prefactor_row_scalar(double, double, double, const double*, std::size_t,
                          double*, double*, unsigned char*);
#ifdef CASIMIR_HAVE_AVX2
void k2_batch_avx2(const double*, double*, std::size_t);
void prefactor_row_avx2(double, double, double, const double*, std::size_t,
                        double*, double*, unsigned char*);
#endif
}  // namespace detail

namespace {

constexpr Kernels scalar_kernels{detail::k2_batch_scalar, detail::prefactor_row_scalar};
#ifdef CASIMIR_HAVE_AVX2
constexpr Kernels avx2_kernels{detail::k2_batch_avx2, detail::prefactor_row_avx2};
#endif

bool host_has_avx2() {
#ifdef CASIMIR_HAVE_AVX2
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa select() {
    if (const char* env = std::getenv("CASIMIR_SIMD")) {
        const std::string_view request(env);
        if (request == "scalar") return Isa::Scalar;
        if (request == "avx2" && host_has_avx2()) return Isa::Avx2;
        // Unknown or unavailable request: fall through to auto-detection so
        // a stale environment cannot break the process.
    }
    return host_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = select();
    return isa;
}

const Kernels* kernels_for(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return &scalar_kernels;
        case Isa::Avx2:
#ifdef CASIMIR_HAVE_AVX2
            if (host_has_avx2()) return &avx2_kernels;
#endif
            return nullptr;
    }
    return nullptr;
}

const Kernels& active() {
    const Kernels* k = kernels_for(active_isa());
    return k ? *k : scalar_kernels;
}

const char* to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "?";
}

}  // namespace casimir::simd
