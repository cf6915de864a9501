#include "staircase/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "staircase/errors.hpp"

namespace staircase {

Exponent Monomial::degree() const { return checked_add(a, b); }

Monomial multiply(const Monomial& lhs, const Monomial& rhs) {
    return {checked_add(lhs.a, rhs.a), checked_add(lhs.b, rhs.b)};
}

bool is_canonical(std::span<const Monomial> gens) noexcept {
    return std::adjacent_find(gens.begin(), gens.end(), [](const Monomial& l, const Monomial& r) {
               return !(l.a < r.a && l.b > r.b);
           }) == gens.end();
}

StaircaseIdeal StaircaseIdeal::from_canonical(std::vector<Monomial> gens) {
    if (!is_canonical(gens)) {
        throw std::invalid_argument("generator list is not a canonical staircase");
    }
    return StaircaseIdeal(std::move(gens));
}

StaircaseIdeal StaircaseIdeal::unit() { return StaircaseIdeal({Monomial{0, 0}}); }

StaircaseIdeal StaircaseIdeal::maximal_power(Exponent d) {
    if (d == kMaxExponent) {
        throw ExponentOverflow("maximal ideal power too large to enumerate");
    }
    std::vector<Monomial> gens;
    gens.reserve(d + 1);
    for (Exponent a = 0; a <= d; ++a) {
        gens.push_back({a, d - a});
    }
    return StaircaseIdeal(std::move(gens));
}

StaircaseIdeal normalize(std::vector<Monomial> candidates) {
    // After sorting by (a, b), a monomial is redundant iff some earlier one has
    // b' <= b. Keeping only strict new minima of b leaves the staircase.
    std::sort(candidates.begin(), candidates.end());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (kept == 0 || candidates[i].b < candidates[kept - 1].b) {
            candidates[kept++] = candidates[i];
        }
    }
    candidates.resize(kept);
    return StaircaseIdeal(std::move(candidates));
}

StaircaseIdeal sum(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs) {
    std::vector<Monomial> all;
    all.reserve(lhs.size() + rhs.size());
    std::merge(lhs.gens().begin(), lhs.gens().end(), rhs.gens().begin(), rhs.gens().end(),
               std::back_inserter(all));
    return normalize(std::move(all));
}

StaircaseIdeal sum(std::span<const StaircaseIdeal> ideals) {
    std::vector<Monomial> all;
    for (const auto& ideal : ideals) {
        all.insert(all.end(), ideal.gens().begin(), ideal.gens().end());
    }
    return normalize(std::move(all));
}

StaircaseIdeal product(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs) {
    std::vector<Monomial> candidates;
    candidates.reserve(lhs.size() * rhs.size());
    for (const auto& g : lhs.gens()) {
        for (const auto& h : rhs.gens()) {
            candidates.push_back(multiply(g, h));
        }
    }
    return normalize(std::move(candidates));
}

StaircaseIdeal power(const StaircaseIdeal& ideal, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("power: exponent must be at least 1");
    }
    StaircaseIdeal result = ideal;
    for (unsigned i = 1; i < k; ++i) {
        result = product(result, ideal);
    }
    return result;
}

StaircaseIdeal shift(const StaircaseIdeal& ideal, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        gens.push_back(multiply(g, m));
    }
    return StaircaseIdeal::from_canonical(std::move(gens));
}

bool contains_monomial(const StaircaseIdeal& ideal, const Monomial& m) noexcept {
    // The last generator with a_i <= m.a has the smallest b among all
    // candidates that could divide m.
    auto gens = ideal.gens();
    auto it = std::upper_bound(gens.begin(), gens.end(), m.a,
                               [](Exponent a, const Monomial& g) { return a < g.a; });
    if (it == gens.begin()) {
        return false;
    }
    return std::prev(it)->b <= m.b;
}

bool contains(const StaircaseIdeal& outer, const StaircaseIdeal& inner) noexcept {
    return std::all_of(inner.gens().begin(), inner.gens().end(),
                       [&](const Monomial& g) { return contains_monomial(outer, g); });
}

Exponent deg_ideal(const StaircaseIdeal& ideal) {
    if (ideal.is_zero()) {
        throw ZeroIdealError("deg of the zero ideal is undefined");
    }
    Exponent best = kMaxExponent;
    for (const auto& g : ideal.gens()) {
        best = std::min(best, g.degree());
    }
    return best;
}

EquigeneratedSpec::EquigeneratedSpec(std::vector<Exponent> xexps, Exponent degree)
    : xexps_(std::move(xexps)), degree_(degree) {
    if (std::adjacent_find(xexps_.begin(), xexps_.end(), std::greater_equal<>()) != xexps_.end()) {
        throw std::invalid_argument("equigenerated x-exponents must be strictly increasing");
    }
    if (!xexps_.empty() && xexps_.back() > degree_) {
        throw std::invalid_argument("equigenerated x-exponent exceeds the degree");
    }
}

EquigeneratedSpec EquigeneratedSpec::with_top_degree(std::vector<Exponent> xexps) {
    if (xexps.empty()) {
        throw std::invalid_argument("shorthand form needs at least one exponent");
    }
    Exponent d = xexps.back();
    return EquigeneratedSpec(std::move(xexps), d);
}

std::optional<EquigeneratedSpec> EquigeneratedSpec::from_ideal(const StaircaseIdeal& ideal) {
    if (ideal.is_zero()) {
        return std::nullopt;
    }
    Exponent d = ideal.front().degree();
    std::vector<Exponent> xexps;
    xexps.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        if (g.degree() != d) {
            return std::nullopt;
        }
        xexps.push_back(g.a);
    }
    return EquigeneratedSpec(std::move(xexps), d);
}

StaircaseIdeal EquigeneratedSpec::to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(xexps_.size());
    for (Exponent a : xexps_) {
        gens.push_back({a, degree_ - a});
    }
    return StaircaseIdeal::from_canonical(std::move(gens));
}

}  // namespace staircase
