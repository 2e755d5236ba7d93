#include "radsq/simd/kernels.hpp"

namespace radsq::simd {

namespace {

void axpy_scalar(Word* dst, const Word* src, std::size_t len, Word scale, Word p) {
    if (scale == 0)
        return;
    for (std::size_t k = 0; k < len; ++k) {
        std::uint64_t v = dst[k] + static_cast<std::uint64_t>(scale) * src[k];
        dst[k] = static_cast<Word>(v % p);
    }
}

void scale_scalar(Word* dst, std::size_t len, Word scale, Word p) {
    for (std::size_t k = 0; k < len; ++k)
        dst[k] = static_cast<Word>((static_cast<std::uint64_t>(scale) * dst[k]) % p);
}

} // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", &axpy_scalar, &scale_scalar, std::uint64_t{1} << 32};
    return table;
}

} // namespace radsq::simd
