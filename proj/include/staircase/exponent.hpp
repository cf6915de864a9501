#pragma once

#include <cstdint>
#include <limits>

namespace staircase {

using Exponent = std::uint64_t;

inline constexpr Exponent kMaxExponent = std::numeric_limits<Exponent>::max();

/// Largest exponent any checked operation may produce. Defaults to the full
/// 64-bit range.
Exponent exponent_ceiling() noexcept;

/// Lowers (never raises above kMaxExponent) the ceiling for the lifetime of
/// the guard. Not meant to be nested across threads.
class ScopedExponentCeiling {
public:
    explicit ScopedExponentCeiling(Exponent ceiling) noexcept;
    ~ScopedExponentCeiling();

    ScopedExponentCeiling(const ScopedExponentCeiling&) = delete;
    ScopedExponentCeiling& operator=(const ScopedExponentCeiling&) = delete;

private:
    Exponent previous_;
};

// Both throw ExponentOverflow when the exact result exceeds exponent_ceiling().
Exponent checked_add(Exponent lhs, Exponent rhs);
Exponent checked_mul(Exponent lhs, Exponent rhs);

}  // namespace staircase
