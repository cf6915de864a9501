#pragma once

// The parametric family I = I_1 + ... + I_m with
//
//   I_1 = (x^{p_1}, y^{p_1}) (x^{(m+1)p_1}, y^{(m+1)p_1})
//   I_i = x^{i p_1 + p_i} y^{(m+2-i)p_1 + p_2 + ... + p_i} (x^{p_i}, y^{p_i})^{a_i - 1}
//
// subject to p_1 = (a_i + 1) p_i and p_2 + ... + p_{m-1} < p_1. The closed
// forms for I^k and mu(I^k) live here alongside the brute computations they
// are checked against.

#include <cstddef>
#include <string>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

struct FamilyParams {
    std::size_t m = 1;
    std::vector<Exponent> p;  // p_1 .. p_m
    std::vector<Exponent> a;  // a_2 .. a_m

    /// 1-based, 1 <= i <= m.
    Exponent p_at(std::size_t i) const { return p.at(i - 1); }
    /// 2 <= i <= m.
    Exponent a_at(std::size_t i) const { return a.at(i - 2); }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws InvalidParams naming the first violated constraint, e.g.
/// "p1 != (a_3+1)*p_3".
void validate(const FamilyParams& params);

struct Family {
    FamilyParams params;
    std::vector<StaircaseIdeal> components;  // I_1 .. I_m
    StaircaseIdeal ideal;                    // I

    const StaircaseIdeal& component(std::size_t u) const { return components.at(u - 1); }
};

Family build_family(const FamilyParams& params);

/// d_1 = (m+2) p_1 and d_u = d_1 + p_1 + ... + p_{u-1}.
Exponent component_degree(const FamilyParams& params, std::size_t u);

/// (k+1)^2 + k (a_2 + ... + a_{m+1-k}) for k <= m-1, else (m+2) k + 1.
Exponent predicted_mu(const FamilyParams& params, unsigned k);

/// I_1^{k-1} (I_1 + ... + I_{m+1-k}) for k <= m-1, else I_1^k.
StaircaseIdeal predicted_power_structure(const Family& family, unsigned k);

/// How p is derived from a chosen list a_2..a_m.
enum class PRule {
    /// p_1 = c * prod(a_i + 1), c in {1, 2} the least making every p_i >= 2.
    product,
    /// p_1 the least multiple of lcm(a_i + 1) making every p_i >= 2.
    minimal,
};

/// Fills in p for the given a (m = a.size() + 1). Does not validate the
/// reciprocal-sum condition.
FamilyParams params_from_a(std::vector<Exponent> a, PRule rule = PRule::product);

/// Parameters with mu(I) > mu(I^2) > ... > mu(I^n) = (n+1)^2. Each a_i is the
/// least value making its consecutive difference negative; n = 1 gives the
/// single-block family with p_1 = 2.
FamilyParams choose_parameters(unsigned n);

enum class Sign : char { minus = '-', zero = '0', plus = '+' };

/// mu(I^k) for k = 1 .. kmax.
std::vector<std::size_t> mu_sequence(const Family& family, unsigned kmax);

/// Signs of consecutive differences of a sequence.
std::vector<Sign> difference_signs(const std::vector<std::size_t>& values);

/// Signs of mu(I^{k+1}) - mu(I^k) for k = 1 .. kmax-1, from computed powers.
std::vector<Sign> sign_sequence(const FamilyParams& params, unsigned kmax);

std::string to_string(const std::vector<Sign>& signs);

struct MuReport {
    unsigned k = 0;
    std::size_t mu_computed = 0;
    Exponent mu_predicted = 0;
    bool structure_ok = false;
    std::size_t cm_type = 0;
    Exponent degree = 0;

    friend bool operator==(const MuReport&, const MuReport&) = default;
};

/// One report per k in [1, kmax], computing I^k incrementally.
std::vector<MuReport> mu_table(const Family& family, unsigned kmax);

/// Human-readable problems with a table: prediction mismatches, structure
/// mismatches, or type != mu - 1. Empty means consistent.
std::vector<std::string> table_failures(const std::vector<MuReport>& reports);

/// mu_table for explicit parameters; throws VerificationFailure on any
/// mismatch.
std::vector<MuReport> verify_family(const FamilyParams& params, unsigned kmax);

/// Problems with `reports` as evidence for the headline statement at n (on
/// top of table_failures). Empty means the statement holds on the table.
std::vector<std::string> headline_failures(unsigned n, const std::vector<MuReport>& reports);

/// End-to-end check of the headline statement for n: chooser, construction,
/// powers 1..kmax, strict decrease through k = n, mu(I^n) = (n+1)^2 and
/// mu(I^k) = (n+2)k + 1 for k >= n. Throws VerificationFailure.
std::vector<MuReport> verify_headline(unsigned n, unsigned kmax);

}  // namespace staircase
