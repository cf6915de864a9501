#include "staircase/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "staircase/errors.hpp"

namespace staircase::oracle {

std::vector<Monomial> naive_minimalize(std::span<const Monomial> candidates) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < candidates.size() && !redundant; ++j) {
            if (i == j) {
                continue;
            }
            const Monomial& u = candidates[i];
            const Monomial& v = candidates[j];
            // Strict divisor, or an identical copy earlier in the list.
            redundant = v.a <= u.a && v.b <= u.b && (v != u || j < i);
        }
        if (!redundant) {
            out.push_back(candidates[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> naive_product(std::span<const Monomial> lhs, std::span<const Monomial> rhs) {
    std::vector<Monomial> all;
    for (const auto& g : lhs) {
        for (const auto& h : rhs) {
            Monomial m;
            if (__builtin_add_overflow(g.a, h.a, &m.a) || __builtin_add_overflow(g.b, h.b, &m.b)) {
                throw ExponentOverflow("oracle product overflow");
            }
            all.push_back(m);
        }
    }
    return naive_minimalize(all);
}

std::vector<Monomial> naive_power(std::span<const Monomial> gens, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("naive_power: k must be >= 1");
    }
    std::vector<Monomial> result(gens.begin(), gens.end());
    for (unsigned i = 1; i < k; ++i) {
        result = naive_product(result, gens);
    }
    return result;
}

bool naive_contains(std::span<const Monomial> gens, const Monomial& m) {
    for (const auto& g : gens) {
        if (g.a <= m.a && g.b <= m.b) {
            return true;
        }
    }
    return false;
}

std::vector<Exponent> naive_slice(std::span<const Monomial> gens, Exponent d) {
    std::vector<Exponent> out;
    for (Exponent a = 0; a <= d; ++a) {
        if (naive_contains(gens, {a, d - a})) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<Monomial> naive_socle(std::span<const Monomial> gens, Exponent bound) {
    std::vector<Monomial> out;
    for (Exponent a = 0; a <= bound; ++a) {
        for (Exponent b = 0; b <= bound; ++b) {
            if (!naive_contains(gens, {a, b}) && naive_contains(gens, {a + 1, b}) &&
                naive_contains(gens, {a, b + 1})) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

namespace {

// `count` distinct values from [lo, hi], sorted ascending.
std::vector<Exponent> distinct_sample(std::mt19937_64& rng, std::size_t count, Exponent lo,
                                      Exponent hi) {
    std::uniform_int_distribution<Exponent> dist(lo, hi);
    std::set<Exponent> picked;
    while (picked.size() < count) {
        picked.insert(dist(rng));
    }
    return {picked.begin(), picked.end()};
}

}  // namespace

StaircaseIdeal random_ideal(std::uint64_t seed, std::size_t max_gens, Exponent max_exp,
                            bool m_primary) {
    if (max_gens < 1 || max_exp < 1) {
        throw std::invalid_argument("random_ideal: max_gens and max_exp must be >= 1");
    }
    std::mt19937_64 rng(seed);
    const std::size_t cap = static_cast<std::size_t>(std::min<Exponent>(max_gens, max_exp + 1));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, cap)(rng);

    std::vector<Exponent> xs;
    std::vector<Exponent> ys;
    if (m_primary) {
        xs = distinct_sample(rng, n - 1, 1, max_exp);
        xs.insert(xs.begin(), 0);
        ys = distinct_sample(rng, n - 1, 1, max_exp);
        ys.insert(ys.begin(), 0);
    } else {
        xs = distinct_sample(rng, n, 0, max_exp);
        ys = distinct_sample(rng, n, 0, max_exp);
    }
    std::reverse(ys.begin(), ys.end());

    std::vector<Monomial> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back({xs[i], ys[i]});
    }
    return StaircaseIdeal::from_canonical(std::move(gens));
}

std::vector<Monomial> random_monomials(std::uint64_t seed, std::size_t count, Exponent max_exp) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Exponent> dist(0, max_exp);
    std::vector<Monomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Exponent a = dist(rng);
        out.push_back({a, dist(rng)});
    }
    return out;
}

}  // namespace staircase::oracle
