#pragma once

#include <cstdint>

namespace radsq {

using Scalar = std::uint32_t;

/// Prime field F_p with 2 <= p < 2^31. Elements are canonical residues.
class Field {
public:
    explicit Field(Scalar p = 5);

    Scalar prime() const noexcept { return p_; }

    Scalar add(Scalar a, Scalar b) const noexcept {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Scalar inv(Scalar a) const;
    Scalar from_int(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const Field&, const Field&) = default;

private:
    Scalar p_;
};

bool is_prime(std::uint64_t v);

} // namespace radsq
