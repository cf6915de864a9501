#include "staircase/grading.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "staircase/errors.hpp"

namespace staircase {

namespace {

void require_m_primary(const StaircaseIdeal& ideal, const char* what) {
    if (!is_m_primary(ideal)) {
        throw NotMPrimary(std::string(what) +
                          ": ideal is not (x,y)-primary, so S/I has infinite length");
    }
}

// Calls visit(lo, hi) for the disjoint, increasing x-exponent intervals making
// up [I]_d. Generator intervals have increasing starts and ends, so merging
// neighbours is enough.
template <typename Visit>
void for_each_slice_interval(const StaircaseIdeal& ideal, Exponent d, Visit visit) {
    bool open = false;
    Exponent lo = 0;
    Exponent hi = 0;
    for (const auto& g : ideal.gens()) {
        if (g.b > d || g.a > d - g.b) {
            continue;
        }
        Exponent start = g.a;
        Exponent end = d - g.b;
        if (open && start <= hi + 1) {
            hi = std::max(hi, end);
            continue;
        }
        if (open) {
            visit(lo, hi);
        }
        open = true;
        lo = start;
        hi = end;
    }
    if (open) {
        visit(lo, hi);
    }
}

}  // namespace

Exponent graded_dim(const StaircaseIdeal& ideal, Exponent d) {
    Exponent total = 0;
    for_each_slice_interval(ideal, d, [&](Exponent lo, Exponent hi) {
        total = checked_add(total, checked_add(hi - lo, 1));
    });
    return total;
}

GradedSlice graded_slice(const StaircaseIdeal& ideal, Exponent d) {
    GradedSlice slice{d, {}};
    slice.xexps.reserve(static_cast<std::size_t>(graded_dim(ideal, d)));
    for_each_slice_interval(ideal, d, [&](Exponent lo, Exponent hi) {
        for (Exponent a = lo;; ++a) {
            slice.xexps.push_back(a);
            if (a == hi) {
                break;
            }
        }
    });
    return slice;
}

bool contains_maximal_power(const StaircaseIdeal& ideal, Exponent d) {
    return graded_dim(ideal, d) == checked_add(d, 1);
}

bool is_m_primary(const StaircaseIdeal& ideal) noexcept {
    return !ideal.is_zero() && ideal.front().a == 0 && ideal.back().b == 0;
}

std::vector<Monomial> socle_monomials(const StaircaseIdeal& ideal) {
    require_m_primary(ideal, "socle_monomials");
    auto gens = ideal.gens();
    std::vector<Monomial> corners;
    corners.reserve(gens.size() - 1);
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
        corners.push_back({gens[i + 1].a - 1, gens[i].b - 1});
    }
    return corners;
}

std::size_t cm_type(const StaircaseIdeal& ideal) { return socle_monomials(ideal).size(); }

StaircaseIdeal intersect(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs) {
    std::vector<Monomial> lcms;
    lcms.reserve(lhs.size() * rhs.size());
    for (const auto& g : lhs.gens()) {
        for (const auto& h : rhs.gens()) {
            lcms.push_back({std::max(g.a, h.a), std::max(g.b, h.b)});
        }
    }
    return normalize(std::move(lcms));
}

StaircaseIdeal colon_by_maximal(const StaircaseIdeal& ideal) {
    std::vector<Monomial> by_x;
    std::vector<Monomial> by_y;
    by_x.reserve(ideal.size());
    by_y.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        by_x.push_back({g.a == 0 ? 0 : g.a - 1, g.b});
        by_y.push_back({g.a, g.b == 0 ? 0 : g.b - 1});
    }
    return intersect(normalize(std::move(by_x)), normalize(std::move(by_y)));
}

std::vector<Monomial> quotient_monomials(const StaircaseIdeal& larger,
                                         const StaircaseIdeal& smaller) {
    require_m_primary(smaller, "quotient_monomials");
    if (!contains(larger, smaller)) {
        throw std::invalid_argument("quotient_monomials: ideals are not nested");
    }
    // Column heights: x^a y^b lies in an ideal iff b >= height(a), where height
    // is the b of the last generator with a_i <= a. Both height functions are
    // constant between consecutive generator x-exponents.
    std::vector<Exponent> breaks;
    for (const auto* ideal : {&larger, &smaller}) {
        for (const auto& g : ideal->gens()) {
            breaks.push_back(g.a);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto height = [](const StaircaseIdeal& ideal, Exponent a) {
        auto gens = ideal.gens();
        auto it = std::upper_bound(gens.begin(), gens.end(), a,
                                   [](Exponent x, const Monomial& g) { return x < g.a; });
        return std::prev(it)->b;
    };

    std::vector<Monomial> out;
    // smaller is m-primary, so its last generator is x^N and every column
    // a >= N is empty in the quotient.
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Exponent lo_b = height(larger, breaks[i]);
        Exponent hi_b = height(smaller, breaks[i]);
        for (Exponent a = breaks[i]; a < breaks[i + 1]; ++a) {
            for (Exponent b = lo_b; b < hi_b; ++b) {
                out.push_back({a, b});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> socle_via_colon(const StaircaseIdeal& ideal) {
    require_m_primary(ideal, "socle_via_colon");
    return quotient_monomials(colon_by_maximal(ideal), ideal);
}

}  // namespace staircase
