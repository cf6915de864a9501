#include "staircase/exponent.hpp"

#include <atomic>
#include <string>

#include "staircase/errors.hpp"

namespace staircase {

namespace {

std::atomic<Exponent> g_ceiling{kMaxExponent};

[[noreturn]] void overflow(Exponent lhs, Exponent rhs, char op) {
    throw ExponentOverflow("exponent overflow: " + std::to_string(lhs) + ' ' + op + ' ' +
                           std::to_string(rhs) + " exceeds ceiling " +
                           std::to_string(exponent_ceiling()));
}

}  // namespace

Exponent exponent_ceiling() noexcept { return g_ceiling.load(std::memory_order_relaxed); }

ScopedExponentCeiling::ScopedExponentCeiling(Exponent ceiling) noexcept
    : previous_(g_ceiling.exchange(ceiling)) {}

ScopedExponentCeiling::~ScopedExponentCeiling() { g_ceiling.store(previous_); }

Exponent checked_add(Exponent lhs, Exponent rhs) {
    Exponent result = 0;
    if (__builtin_add_overflow(lhs, rhs, &result) || result > exponent_ceiling()) {
        overflow(lhs, rhs, '+');
    }
    return result;
}

Exponent checked_mul(Exponent lhs, Exponent rhs) {
    Exponent result = 0;
    if (__builtin_mul_overflow(lhs, rhs, &result) || result > exponent_ceiling()) {
        overflow(lhs, rhs, '*');
    }
    return result;
}

}  // namespace staircase
