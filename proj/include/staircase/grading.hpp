#pragma once

// Graded pieces, colon by the maximal ideal, and socles of S/I for staircase
// ideals of S = K[x, y].

#include <cstddef>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// The degree-d piece [I]_d as the sorted x-exponents a with x^a y^{d-a} in I.
struct GradedSlice {
    Exponent degree = 0;
    std::vector<Exponent> xexps;

    friend bool operator==(const GradedSlice&, const GradedSlice&) = default;
};

/// dim_K [I]_d. Each generator (a_i, b_i) covers the x-exponent interval
/// [a_i, d - b_i]; the intervals are counted by a single sweep.
Exponent graded_dim(const StaircaseIdeal& ideal, Exponent d);

GradedSlice graded_slice(const StaircaseIdeal& ideal, Exponent d);

/// True iff (x, y)^d is contained in the ideal.
bool contains_maximal_power(const StaircaseIdeal& ideal, Exponent d);

/// S/I has finite length: I holds a pure power of y and a pure power of x.
bool is_m_primary(const StaircaseIdeal& ideal) noexcept;

/// Monomial basis of the socle (I : m)/I, read off the inner corners
/// (a_{i+1} - 1, b_i - 1) of the staircase. Sorted by a. Throws NotMPrimary.
std::vector<Monomial> socle_monomials(const StaircaseIdeal& ideal);

/// Cohen-Macaulay type r(S/I). Throws NotMPrimary.
std::size_t cm_type(const StaircaseIdeal& ideal);

/// I : (x, y) computed as (I : x) intersected with (I : y).
StaircaseIdeal colon_by_maximal(const StaircaseIdeal& ideal);

/// Monomials of `larger` that are not in `smaller`, sorted. Requires
/// `smaller` to be m-primary and contained in `larger`.
std::vector<Monomial> quotient_monomials(const StaircaseIdeal& larger,
                                         const StaircaseIdeal& smaller);

/// Socle basis obtained from colon_by_maximal instead of the corner formula.
std::vector<Monomial> socle_via_colon(const StaircaseIdeal& ideal);

/// Intersection of monomial ideals, via pairwise lcms.
StaircaseIdeal intersect(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs);

}  // namespace staircase
