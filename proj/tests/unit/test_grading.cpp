#include <algorithm>
#include <set>

#include "doctest.h"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/grading.hpp"
#include "staircase/oracle.hpp"

using namespace staircase;

namespace {

StaircaseIdeal ideal(std::vector<Monomial> gens) { return normalize(std::move(gens)); }

const StaircaseIdeal kMaximal = ideal({{1, 0}, {0, 1}});
const StaircaseIdeal kMaximalSquared = StaircaseIdeal::maximal_power(2);

}  // namespace

TEST_CASE("graded_dim") {
    CHECK(graded_dim(kMaximalSquared, 3) == 4);
    CHECK(graded_dim(kMaximalSquared, 1) == 0);
    // x^4, x^3 y, x y^3, y^4
    CHECK(graded_dim(ideal({{3, 0}, {0, 3}}), 4) == 4);
    CHECK(graded_dim(StaircaseIdeal{}, 10) == 0);
    CHECK(graded_dim(StaircaseIdeal::unit(), 10) == 11);
}

TEST_CASE("graded_slice") {
    auto slice = graded_slice(ideal({{2, 0}, {0, 2}}), 3);
    CHECK(slice.degree == 3);
    CHECK(slice.xexps == std::vector<Exponent>{0, 1, 2, 3});
    CHECK(graded_slice(ideal({{3, 0}, {0, 3}}), 4).xexps == std::vector<Exponent>{0, 1, 3, 4});
}

TEST_CASE("graded_slice agrees with brute force on random ideals") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto i = oracle::random_ideal(seed, 15, 40, seed % 2 == 0);
        for (Exponent d : {0, 1, 7, 23, 40, 55, 90}) {
            auto slice = graded_slice(i, d);
            CHECK(slice.xexps == oracle::naive_slice(i.gens(), d));
            CHECK(slice.xexps.size() == graded_dim(i, d));
        }
    }
}

TEST_CASE("graded_dim is subadditive over sums") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto i = oracle::random_ideal(seed * 2, 8, 30);
        auto j = oracle::random_ideal(seed * 2 + 1, 8, 30);
        for (Exponent d = 0; d <= 70; d += 3) {
            auto si = graded_slice(i, d).xexps;
            auto sj = graded_slice(j, d).xexps;
            std::vector<Exponent> common;
            std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                  std::back_inserter(common));
            Exponent together = graded_dim(sum(i, j), d);
            CHECK(together <= si.size() + sj.size());
            CHECK((together == si.size() + sj.size()) == common.empty());
        }
    }
}

TEST_CASE("slice of I_1^k matches the closed generator formula") {
    // I_1^k = (s(m+1)p_1 + t p_1 | s, t in [0, k])_{k d_1}
    for (auto params : {FamilyParams{5, {72, 18, 12, 8, 2}, {3, 5, 8, 35}},
                        FamilyParams{2, {6, 2}, {2}}, FamilyParams{1, {2}, {}}}) {
        const Family family = build_family(params);
        const Exponent p1 = params.p_at(1);
        const Exponent d1 = component_degree(params, 1);
        for (unsigned k = 1; k <= 4; ++k) {
            std::set<Exponent> expected;
            for (Exponent s = 0; s <= k; ++s) {
                for (Exponent t = 0; t <= k; ++t) {
                    expected.insert(s * (params.m + 1) * p1 + t * p1);
                }
            }
            auto first_power = power(family.component(1), k);
            CHECK(graded_slice(first_power, k * d1).xexps ==
                  std::vector<Exponent>(expected.begin(), expected.end()));
            CHECK(mu(first_power) == expected.size());
        }
    }
}

TEST_CASE("is_m_primary") {
    CHECK(is_m_primary(ideal({{2, 0}, {1, 1}, {0, 3}})));
    CHECK_FALSE(is_m_primary(ideal({{2, 0}, {1, 1}})));
    CHECK_FALSE(is_m_primary(StaircaseIdeal{}));
    CHECK(is_m_primary(StaircaseIdeal::unit()));
    CHECK(is_m_primary(build_family({5, {72, 18, 12, 8, 2}, {3, 5, 8, 35}}).ideal));
}

TEST_CASE("socle_monomials") {
    CHECK(socle_monomials(kMaximalSquared) == std::vector<Monomial>{{0, 1}, {1, 0}});
    // (x^3, xy, y^2): socle {y, x^2}
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    CHECK(socle_monomials(i) == std::vector<Monomial>{{0, 1}, {2, 0}});
    CHECK(socle_monomials(i) == oracle::naive_socle(i.gens(), 10));
    CHECK(cm_type(kMaximalSquared) == 2);
    CHECK(cm_type(StaircaseIdeal::unit()) == 0);
    CHECK_THROWS_AS(socle_monomials(ideal({{2, 0}, {1, 1}})), NotMPrimary);
    CHECK_THROWS_AS(cm_type(StaircaseIdeal{}), NotMPrimary);
}

TEST_CASE("socle agrees with exhaustive scan and colon route") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto i = oracle::random_ideal(seed, 20, 40, true);
        auto corners = socle_monomials(i);
        CHECK(corners == oracle::naive_socle(i.gens(), 41));
        CHECK(corners == socle_via_colon(i));
        CHECK(corners.size() + 1 == mu(i));
    }
}

TEST_CASE("colon_by_maximal") {
    CHECK(colon_by_maximal(kMaximalSquared) == kMaximal);
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    CHECK(colon_by_maximal(i) == ideal({{2, 0}, {0, 1}}));
    CHECK(colon_by_maximal(StaircaseIdeal{}).is_zero());
    CHECK(colon_by_maximal(StaircaseIdeal::unit()) == StaircaseIdeal::unit());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto r = oracle::random_ideal(seed, 30, 1000, seed % 3 == 0);
        auto colon = colon_by_maximal(r);
        CHECK(contains(colon, r));
        // every generator of the colon is pushed into r by x and by y
        for (const auto& g : colon.gens()) {
            CHECK(contains_monomial(r, {g.a + 1, g.b}));
            CHECK(contains_monomial(r, {g.a, g.b + 1}));
        }
    }
}

TEST_CASE("quotient_monomials preconditions") {
    CHECK_THROWS_AS(quotient_monomials(kMaximal, ideal({{2, 0}})), NotMPrimary);
    CHECK_THROWS_AS(quotient_monomials(kMaximalSquared, kMaximal), std::invalid_argument);
    CHECK(quotient_monomials(kMaximal, kMaximalSquared) == std::vector<Monomial>{{0, 1}, {1, 0}});
}

TEST_CASE("contains_maximal_power") {
    auto i = ideal({{3, 0}, {1, 1}, {0, 2}});
    CHECK_FALSE(contains_maximal_power(i, 2));
    CHECK(contains_maximal_power(i, 3));
    CHECK(contains(i, StaircaseIdeal::maximal_power(3)));
}
