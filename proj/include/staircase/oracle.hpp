#pragma once

// Brute-force reference implementations. Nothing here calls into the fast
// ideal arithmetic; only the Monomial type and error classes are shared.

#include <cstdint>
#include <span>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase::oracle {

/// All-pairs divisibility filter, O(n^2). Output sorted by (a, b).
std::vector<Monomial> naive_minimalize(std::span<const Monomial> candidates);

/// Every exponent sum, then naive_minimalize. Throws ExponentOverflow when a
/// sum does not fit in 64 bits.
std::vector<Monomial> naive_product(std::span<const Monomial> lhs, std::span<const Monomial> rhs);

std::vector<Monomial> naive_power(std::span<const Monomial> gens, unsigned k);

/// Linear scan for a dividing generator.
bool naive_contains(std::span<const Monomial> gens, const Monomial& m);

/// x-exponents a in [0, d] with x^a y^{d-a} in the ideal, by direct testing.
std::vector<Exponent> naive_slice(std::span<const Monomial> gens, Exponent d);

/// Every u = x^a y^b with a, b <= bound, u not in the ideal, xu and yu in it.
std::vector<Monomial> naive_socle(std::span<const Monomial> gens, Exponent bound);

/// Seeded random staircase: between 1 and max_gens generators, strictly
/// increasing x-exponents and strictly decreasing y-exponents sampled from
/// [0, max_exp]. With m_primary the first generator is a pure y-power and the
/// last a pure x-power.
StaircaseIdeal random_ideal(std::uint64_t seed, std::size_t max_gens = 30,
                            Exponent max_exp = 1'000'000, bool m_primary = false);

/// Seeded list of `count` monomials with exponents in [0, max_exp], possibly
/// redundant or repeated.
std::vector<Monomial> random_monomials(std::uint64_t seed, std::size_t count, Exponent max_exp);

}  // namespace staircase::oracle
