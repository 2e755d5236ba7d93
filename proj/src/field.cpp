#include "radsq/field.hpp"

#include "radsq/errors.hpp"

namespace radsq {

bool is_prime(std::uint64_t v) {
    if (v < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

Field::Field(Scalar p) : p_(p) {
    if (p < 2 || p >= (Scalar{1} << 31) || !is_prime(p))
        throw UsageError("field modulus must be a prime in [2, 2^31): " + std::to_string(p));
}

Scalar Field::inv(Scalar a) const {
    if (a == 0)
        throw EngineError("inverse of zero in F_" + std::to_string(p_));
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Scalar>(result);
}

} // namespace radsq
