#pragma once

// Monomial ideals of K[x, y] in staircase form.
//
// A monomial ideal in two variables has a unique minimal monomial generating
// set. Sorted by x-exponent it is an antichain whose y-exponents strictly
// decrease, so every ideal has exactly one representation here and ideal
// equality is list equality. The coefficient field never appears: all
// operations are exponent-lattice combinatorics.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "staircase/exponent.hpp"

namespace staircase {

/// x^a * y^b.
struct Monomial {
    Exponent a = 0;
    Exponent b = 0;

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

    /// a + b, checked.
    Exponent degree() const;

    /// True iff this monomial divides `other`.
    constexpr bool divides(const Monomial& other) const noexcept {
        return a <= other.a && b <= other.b;
    }
};

Monomial multiply(const Monomial& lhs, const Monomial& rhs);

/// True iff `gens` is sorted by strictly increasing a with strictly
/// decreasing b.
bool is_canonical(std::span<const Monomial> gens) noexcept;

class StaircaseIdeal {
public:
    /// The zero ideal.
    StaircaseIdeal() = default;

    /// Adopts an already canonical generator list; throws std::invalid_argument
    /// otherwise. Use normalize() for arbitrary input.
    static StaircaseIdeal from_canonical(std::vector<Monomial> gens);

    /// (1), stored as [(0,0)].
    static StaircaseIdeal unit();

    /// (x, y)^d.
    static StaircaseIdeal maximal_power(Exponent d);

    std::span<const Monomial> gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }

    const Monomial& front() const { return gens_.front(); }
    const Monomial& back() const { return gens_.back(); }

    friend bool operator==(const StaircaseIdeal&, const StaircaseIdeal&) = default;

private:
    friend StaircaseIdeal normalize(std::vector<Monomial> candidates);

    explicit StaircaseIdeal(std::vector<Monomial> gens) : gens_(std::move(gens)) {}

    std::vector<Monomial> gens_;
};

/// Minimal generators of the ideal generated by `candidates`. Duplicates and
/// redundant monomials are allowed; an empty list yields the zero ideal.
StaircaseIdeal normalize(std::vector<Monomial> candidates);

StaircaseIdeal sum(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs);
StaircaseIdeal sum(std::span<const StaircaseIdeal> ideals);

/// Throws ExponentOverflow if any generator product leaves the exponent range.
StaircaseIdeal product(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs);

/// I^k for k >= 1 by repeated multiplication, minimalizing after each step.
/// Throws std::invalid_argument for k == 0.
StaircaseIdeal power(const StaircaseIdeal& ideal, unsigned k);

/// m * I.
StaircaseIdeal shift(const StaircaseIdeal& ideal, const Monomial& m);

/// Minimal number of generators.
inline std::size_t mu(const StaircaseIdeal& ideal) noexcept { return ideal.size(); }

/// O(log mu) membership test.
bool contains_monomial(const StaircaseIdeal& ideal, const Monomial& m) noexcept;

/// True iff `inner` is a subset of `outer`.
bool contains(const StaircaseIdeal& outer, const StaircaseIdeal& inner) noexcept;

inline bool equals(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs) noexcept {
    return lhs == rhs;
}

/// Smallest degree of a nonzero element. Throws ZeroIdealError on (0).
Exponent deg_ideal(const StaircaseIdeal& ideal);

/// The equigenerated ideal (a_1, ..., a_l)_d generated by x^{a_i} y^{d - a_i}.
class EquigeneratedSpec {
public:
    /// Requires 0 <= a_1 < ... < a_l <= d; throws std::invalid_argument otherwise.
    EquigeneratedSpec(std::vector<Exponent> xexps, Exponent degree);

    /// Shorthand with d = a_l.
    static EquigeneratedSpec with_top_degree(std::vector<Exponent> xexps);

    /// Recovers the spec when every generator of `ideal` has the same degree.
    static std::optional<EquigeneratedSpec> from_ideal(const StaircaseIdeal& ideal);

    std::span<const Exponent> xexps() const noexcept { return xexps_; }
    Exponent degree() const noexcept { return degree_; }

    StaircaseIdeal to_ideal() const;

    friend bool operator==(const EquigeneratedSpec&, const EquigeneratedSpec&) = default;

private:
    std::vector<Exponent> xexps_;
    Exponent degree_ = 0;
};

}  // namespace staircase
