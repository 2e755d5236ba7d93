// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include "radsq/simd/kernels.hpp"

#include <immintrin.h>

namespace radsq::simd {

namespace {

// Residues travel as doubles: for p < 2^26 every intermediate a + s*b stays
// below 2^53, so products and the reduction x - floor(x/p)*p are exact. The
// quotient estimate from x * (1/p) is off by at most one in either direction.
inline __m256d reduce(__m256d x, __m256d vp, __m256d vinv) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, x);
    __m256d zero = _mm256_setzero_pd();
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    return r;
}

void axpy_avx2(Word* dst, const Word* src, std::size_t len, Word scale, Word p) {
    if (scale == 0)
        return;
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vs = _mm256_set1_pd(static_cast<double>(scale));
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d a = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + k)));
        __m256d b = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + k)));
        __m256d r = reduce(_mm256_fmadd_pd(b, vs, a), vp, vinv);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + k), _mm256_cvttpd_epi32(r));
    }
    for (; k < len; ++k) {
        std::uint64_t v = dst[k] + static_cast<std::uint64_t>(scale) * src[k];
        dst[k] = static_cast<Word>(v % p);
    }
}

void scale_avx2(Word* dst, std::size_t len, Word scale, Word p) {
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vs = _mm256_set1_pd(static_cast<double>(scale));
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d a = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + k)));
        __m256d r = reduce(_mm256_mul_pd(a, vs), vp, vinv);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + k), _mm256_cvttpd_epi32(r));
    }
    for (; k < len; ++k)
        dst[k] = static_cast<Word>((static_cast<std::uint64_t>(scale) * dst[k]) % p);
}

} // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", &axpy_avx2, &scale_avx2, std::uint64_t{1} << 26};
    return &table;
}

} // namespace radsq::simd
