#pragma once

// Modular row kernels used by Gaussian elimination and matrix products.
// Every kernel has a portable scalar reference; vector variants are selected
// at runtime and must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace radsq::simd {

using Word = std::uint32_t;

/// dst[k] = (dst[k] + scale * src[k]) mod p, for residues < p.
using AxpyFn = void (*)(Word* dst, const Word* src, std::size_t len, Word scale, Word p);
/// dst[k] = (scale * dst[k]) mod p.
using ScaleFn = void (*)(Word* dst, std::size_t len, Word scale, Word p);

struct KernelTable {
    std::string_view name;
    AxpyFn axpy;
    ScaleFn scale;
    /// Largest modulus (exclusive) the vector path handles exactly.
    std::uint64_t max_prime;
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

/// Kernel table picked at first use: AVX2 when compiled in and supported by the
/// CPU, scalar otherwise. RADSQ_SIMD=scalar forces the reference path.
const KernelTable& active_kernels();

inline void axpy_mod(std::span<Word> dst, std::span<const Word> src, Word scale, Word p) {
    const KernelTable& k = active_kernels();
    if (p < k.max_prime)
        k.axpy(dst.data(), src.data(), dst.size(), scale, p);
    else
        scalar_kernels().axpy(dst.data(), src.data(), dst.size(), scale, p);
}

inline void scale_mod(std::span<Word> dst, Word scale, Word p) {
    const KernelTable& k = active_kernels();
    if (p < k.max_prime)
        k.scale(dst.data(), dst.size(), scale, p);
    else
        scalar_kernels().scale(dst.data(), dst.size(), scale, p);
}

} // namespace radsq::simd
