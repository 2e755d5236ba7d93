#include "radsq/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace radsq::simd {

#ifndef RADSQ_BUILD_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& active_kernels() {
    static const KernelTable& table = [] () -> const KernelTable& {
        const char* env = std::getenv("RADSQ_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar")
            return scalar_kernels();
        if (const KernelTable* v = avx2_kernels(); v != nullptr && cpu_has_avx2())
            return *v;
        return scalar_kernels();
    }();
    return table;
}

} // namespace radsq::simd
