#include "staircase/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "staircase/errors.hpp"
#include "staircase/grading.hpp"

namespace staircase {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

// (x^e, y^e)
StaircaseIdeal pure_powers(Exponent e) {
    return StaircaseIdeal::from_canonical({{0, e}, {e, 0}});
}

// (x^p, y^p)^e = (0, p, 2p, ..., ep)_{ep}
StaircaseIdeal pure_powers_to(Exponent p, Exponent e) {
    std::vector<Exponent> xexps;
    xexps.reserve(static_cast<std::size_t>(e) + 1);
    for (Exponent j = 0; j <= e; ++j) {
        xexps.push_back(checked_mul(j, p));
    }
    Exponent degree = xexps.back();
    return EquigeneratedSpec(std::move(xexps), degree).to_ideal();
}

}  // namespace

void validate(const FamilyParams& params) {
    const std::size_t m = params.m;
    if (m < 1) {
        throw InvalidParams("m must be >= 1");
    }
    if (params.p.size() != m) {
        throw InvalidParams("expected " + std::to_string(m) + " values in p, got " +
                            std::to_string(params.p.size()));
    }
    if (params.a.size() != m - 1) {
        throw InvalidParams("expected " + std::to_string(m - 1) + " values in a, got " +
                            std::to_string(params.a.size()));
    }
    for (std::size_t i = 1; i <= m; ++i) {
        if (params.p_at(i) < 2) {
            throw InvalidParams("p_" + std::to_string(i) + " must be >= 2");
        }
    }
    for (std::size_t i = 2; i <= m; ++i) {
        if (params.a_at(i) < 2) {
            throw InvalidParams("a_" + std::to_string(i) + " must be >= 2");
        }
    }
    const Exponent p1 = params.p_at(1);
    for (std::size_t i = 2; i <= m; ++i) {
        Exponent rhs = 0;
        bool wrapped = __builtin_add_overflow(params.a_at(i), Exponent{1}, &rhs) ||
                       __builtin_mul_overflow(rhs, params.p_at(i), &rhs);
        if (wrapped || rhs != p1) {
            auto idx = std::to_string(i);
            throw InvalidParams("p1 != (a_" + idx + "+1)*p_" + idx);
        }
    }
    Exponent middle = 0;
    for (std::size_t i = 2; i + 1 <= m; ++i) {
        if (__builtin_add_overflow(middle, params.p_at(i), &middle) || middle >= p1) {
            throw InvalidParams("p_2+...+p_{m-1} must be < p1");
        }
    }
}

Family build_family(const FamilyParams& params) {
    validate(params);
    const std::size_t m = params.m;
    const Exponent p1 = params.p_at(1);

    Family family{params, {}, {}};
    family.components.reserve(m);
    family.components.push_back(
        product(pure_powers(p1), pure_powers(checked_mul(m + 1, p1))));

    Exponent y_tail = 0;  // p_2 + ... + p_i
    for (std::size_t i = 2; i <= m; ++i) {
        const Exponent pi = params.p_at(i);
        y_tail = checked_add(y_tail, pi);
        Monomial lead{checked_add(checked_mul(i, p1), pi),
                      checked_add(checked_mul(m + 2 - i, p1), y_tail)};
        family.components.push_back(shift(pure_powers_to(pi, params.a_at(i) - 1), lead));
    }
    family.ideal = sum(family.components);
    return family;
}

Exponent component_degree(const FamilyParams& params, std::size_t u) {
    if (u < 1 || u > params.m) {
        throw std::out_of_range("component index " + std::to_string(u) + " outside [1, " +
                                std::to_string(params.m) + "]");
    }
    Exponent d = checked_mul(params.m + 2, params.p_at(1));
    for (std::size_t i = 1; i < u; ++i) {
        d = checked_add(d, params.p_at(i));
    }
    return d;
}

Exponent predicted_mu(const FamilyParams& params, unsigned k) {
    validate(params);
    if (k == 0) {
        throw std::invalid_argument("predicted_mu: k must be >= 1");
    }
    const Exponent kk = k;
    if (k + 1 <= params.m) {
        Exponent tail = 0;
        for (std::size_t i = 2; i <= params.m + 1 - k; ++i) {
            tail = checked_add(tail, params.a_at(i));
        }
        return checked_add(checked_mul(kk + 1, kk + 1), checked_mul(kk, tail));
    }
    return checked_add(checked_mul(params.m + 2, kk), 1);
}

StaircaseIdeal predicted_power_structure(const Family& family, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("predicted_power_structure: k must be >= 1");
    }
    const std::size_t m = family.params.m;
    const StaircaseIdeal& first = family.component(1);
    if (k >= m) {
        return power(first, k);
    }
    std::span<const StaircaseIdeal> leading(family.components.data(), m + 1 - k);
    StaircaseIdeal tail = sum(leading);
    return k == 1 ? tail : product(power(first, k - 1), tail);
}

FamilyParams params_from_a(std::vector<Exponent> a, PRule rule) {
    FamilyParams params;
    params.m = a.size() + 1;
    auto all_at_least_two = [&](Exponent p1) {
        return p1 >= 2 && std::all_of(a.begin(), a.end(),
                                      [&](Exponent ai) { return p1 / (ai + 1) >= 2; });
    };

    Exponent p1 = 0;
    if (rule == PRule::product) {
        Exponent prod = 1;
        for (Exponent ai : a) {
            prod = checked_mul(prod, checked_add(ai, 1));
        }
        p1 = all_at_least_two(prod) ? prod : checked_mul(prod, 2);
    } else {
        Exponent step = 1;
        for (Exponent ai : a) {
            Exponent q = checked_add(ai, 1);
            step = checked_mul(step / std::gcd(step, q), q);
        }
        p1 = step;
        while (!all_at_least_two(p1)) {
            p1 = checked_add(p1, step);
        }
    }

    params.p.push_back(p1);
    for (Exponent ai : a) {
        params.p.push_back(p1 / (ai + 1));
    }
    params.a = std::move(a);
    return params;
}

FamilyParams choose_parameters(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("choose_parameters: n must be >= 1");
    }
    if (n == 1) {
        return FamilyParams{1, {2}, {}};
    }
    // mu(I^{k+1}) - mu(I^k) = 2k + 3 + a_2 + ... + a_{n-k} - k a_{n+1-k}, so
    // walking k from n-1 down to 1 fixes a_2, a_3, ..., a_n in turn. If the
    // middle p's are too large, raise the floor for every a_i and redo it.
    for (Exponent floor = 2;; ++floor) {
        std::vector<Exponent> a(n - 1, 0);
        for (unsigned k = n - 1; k >= 1; --k) {
            Exponent earlier = 0;
            for (unsigned j = 2; j <= n - k; ++j) {
                earlier += a[j - 2];
            }
            Exponent need = 2 * Exponent{k} + 4 + earlier;
            a[n + 1 - k - 2] = std::max(floor, (need + k - 1) / k);
        }
        FamilyParams params = params_from_a(std::move(a), PRule::product);
        try {
            validate(params);
            return params;
        } catch (const InvalidParams&) {
        }
    }
}

std::vector<std::size_t> mu_sequence(const Family& family, unsigned kmax) {
    std::vector<std::size_t> mus;
    mus.reserve(kmax);
    StaircaseIdeal current = family.ideal;
    for (unsigned k = 1; k <= kmax; ++k) {
        if (k > 1) {
            current = product(current, family.ideal);
        }
        mus.push_back(mu(current));
    }
    return mus;
}

std::vector<Sign> difference_signs(const std::vector<std::size_t>& values) {
    std::vector<Sign> signs;
    for (std::size_t i = 1; i < values.size(); ++i) {
        signs.push_back(values[i] > values[i - 1]   ? Sign::plus
                        : values[i] < values[i - 1] ? Sign::minus
                                                    : Sign::zero);
    }
    return signs;
}

std::vector<Sign> sign_sequence(const FamilyParams& params, unsigned kmax) {
    if (kmax < 2) {
        throw std::invalid_argument("sign_sequence: kmax must be >= 2");
    }
    return difference_signs(mu_sequence(build_family(params), kmax));
}

std::string to_string(const std::vector<Sign>& signs) {
    std::string out;
    for (Sign s : signs) {
        out += static_cast<char>(s);
    }
    return out;
}

std::vector<MuReport> mu_table(const Family& family, unsigned kmax) {
    if (kmax == 0) {
        throw std::invalid_argument("mu_table: kmax must be >= 1");
    }
    std::vector<MuReport> reports;
    reports.reserve(kmax);
    StaircaseIdeal current = family.ideal;
    for (unsigned k = 1; k <= kmax; ++k) {
        if (k > 1) {
            current = product(current, family.ideal);
        }
        MuReport r;
        r.k = k;
        r.mu_computed = mu(current);
        r.mu_predicted = predicted_mu(family.params, k);
        r.structure_ok = equals(current, predicted_power_structure(family, k));
        r.cm_type = is_m_primary(current) ? cm_type(current) : 0;
        r.degree = deg_ideal(current);
        reports.push_back(r);
    }
    return reports;
}

std::vector<std::string> table_failures(const std::vector<MuReport>& reports) {
    std::vector<std::string> failures;
    for (const auto& r : reports) {
        const std::string at = "k=" + std::to_string(r.k) + ": ";
        if (r.mu_computed != r.mu_predicted) {
            failures.push_back(at + "mu computed " + std::to_string(r.mu_computed) +
                               " != predicted " + std::to_string(r.mu_predicted));
        }
        if (!r.structure_ok) {
            failures.push_back(at + "I^k differs from the predicted power structure");
        }
        if (r.cm_type + 1 != r.mu_computed) {
            failures.push_back(at + "cm_type " + std::to_string(r.cm_type) + " != mu - 1");
        }
    }
    return failures;
}

std::vector<MuReport> verify_family(const FamilyParams& params, unsigned kmax) {
    auto reports = mu_table(build_family(params), kmax);
    if (auto failures = table_failures(reports); !failures.empty()) {
        throw VerificationFailure(join(failures, "; "));
    }
    return reports;
}

std::vector<std::string> headline_failures(unsigned n, const std::vector<MuReport>& reports) {
    std::vector<std::string> failures = table_failures(reports);
    if (reports.size() < n) {
        failures.push_back("table stops before k=n=" + std::to_string(n));
        return failures;
    }
    for (unsigned k = 2; k <= n; ++k) {
        if (!(reports[k - 1].mu_computed < reports[k - 2].mu_computed)) {
            failures.push_back("mu(I^" + std::to_string(k) + ") = " +
                               std::to_string(reports[k - 1].mu_computed) +
                               " does not drop below mu(I^" + std::to_string(k - 1) + ") = " +
                               std::to_string(reports[k - 2].mu_computed));
        }
    }
    const std::size_t square = std::size_t{n + 1} * (n + 1);
    if (reports[n - 1].mu_computed != square) {
        failures.push_back("mu(I^n) = " + std::to_string(reports[n - 1].mu_computed) +
                           " != (n+1)^2 = " + std::to_string(square));
    }
    for (std::size_t k = n; k <= reports.size(); ++k) {
        const std::size_t linear = std::size_t{n + 2} * k + 1;
        if (reports[k - 1].mu_computed != linear) {
            failures.push_back("mu(I^" + std::to_string(k) + ") = " +
                               std::to_string(reports[k - 1].mu_computed) +
                               " != (n+2)k+1 = " + std::to_string(linear));
        }
    }
    return failures;
}

std::vector<MuReport> verify_headline(unsigned n, unsigned kmax) {
    if (n == 0 || kmax < n) {
        throw std::invalid_argument("verify_headline: need n >= 1 and kmax >= n");
    }
    auto reports = mu_table(build_family(choose_parameters(n)), kmax);
    if (auto failures = headline_failures(n, reports); !failures.empty()) {
        throw VerificationFailure(join(failures, "; "));
    }
    return reports;
}

}  // namespace staircase
