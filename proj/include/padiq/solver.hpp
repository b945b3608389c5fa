#pragma once

/**
 * Total decision procedure for x^q = a over Q_p.
 *
 * An equation with nonzero a reduces to its unit part: it is solvable iff
 * q | ord_p(a) and x^q = a_* is solvable over the units. The unit criterion
 * splits on the factorization q = m * p^s with gcd(m, p) = 1:
 *
 *   odd p, s = 0:  a_0^((p-1)/gcd(q,p-1)) == 1 (mod p), and there are then
 *                  exactly gcd(q, p-1) roots;
 *   odd p, m = 1:  a_0^(p^s) == a (mod p^(s+1));
 *   odd p, mixed:  both congruences, with m in the residue test;
 *   p = 2, q odd:  always solvable;
 *   p = 2, q even: a == 1 (mod 2^(s+2)).
 *
 * Every verdict carries the clause that fired and the congruences that were
 * actually tested, so a report can be replayed against an independent oracle.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "padiq/errors.hpp"
#include "padiq/hensel.hpp"
#include "padiq/padic.hpp"
#include "padiq/residue.hpp"

namespace padiq {

enum class Clause {
    ODD_P_COPRIME,
    ODD_P_PURE_POWER,
    ODD_P_MIXED,
    P2_ODD_Q,
    P2_EVEN_Q,
    VALUATION_OBSTRUCTION,
    ZERO_BASE,
};

inline const char* clause_name(Clause c) {
    switch (c) {
    case Clause::ODD_P_COPRIME: return "ODD_P_COPRIME";
    case Clause::ODD_P_PURE_POWER: return "ODD_P_PURE_POWER";
    case Clause::ODD_P_MIXED: return "ODD_P_MIXED";
    case Clause::P2_ODD_Q: return "P2_ODD_Q";
    case Clause::P2_EVEN_Q: return "P2_EVEN_Q";
    case Clause::VALUATION_OBSTRUCTION: return "VALUATION_OBSTRUCTION";
    case Clause::ZERO_BASE: return "ZERO_BASE";
    }
    return "?";
}

/// One tested congruence: lhs == rhs (mod modulus).
struct Check {
    std::string desc;
    std::int64_t lhs;
    std::int64_t rhs;
    std::int64_t modulus;
    bool pass;
};

struct SolvabilityReport {
    bool solvable;
    Clause clause;
    std::vector<Check> checks;
    // The d of the coprime clause: number of roots mod p (0 when unsolvable);
    // absent for every other clause.
    std::optional<std::int64_t> root_count_mod_p;
};

// q = m * p^s with gcd(m, p) = 1.
struct QFactorization {
    std::int64_t m;
    std::int64_t s;
};

inline QFactorization factor_q(std::int64_t q, std::int64_t p) {
    if (q < 1)
        throw invalid_argument_error("factor_q: q must be >= 1");
    const std::int64_t s = ord_p(q, p);
    return {q / checked_pow(p, s), s};
}

// Unit criterion for odd p. Reads digits a_0..a_s, so a must carry at least
// s+1 of them.
inline SolvabilityReport solvable_unit_odd_p(const PadicNumber& a, std::int64_t q) {
    const std::int64_t p = a.prime();
    if (p == 2)
        throw invalid_argument_error("solvable_unit_odd_p: p must be odd");
    if (a.valuation() != 0)
        throw not_a_unit_error("solvable_unit_odd_p: a must be a unit");
    const auto [m, s] = factor_q(q, p);
    if (a.precision() < s + 1)
        throw insufficient_precision_error(
            "solvable_unit_odd_p: criterion reads digits a_0..a_" +
            std::to_string(s) + " but a has " + std::to_string(a.precision()));

    const std::int64_t a0 = static_cast<std::int64_t>(
        mpz_fdiv_ui(a.unit().get_mpz_t(), static_cast<unsigned long>(p)));

    SolvabilityReport report;
    report.clause = s == 0 ? Clause::ODD_P_COPRIME
                  : m == 1 ? Clause::ODD_P_PURE_POWER
                           : Clause::ODD_P_MIXED;

    if (s == 0 || m > 1) {
        // m-part: a_0 must be an m-th power residue mod p.
        const std::int64_t d = std::gcd(m, p - 1);
        const std::int64_t witness = mod_pow(a0, (p - 1) / d, p);
        report.checks.push_back(
            {"a0^((p-1)/" + std::to_string(d) + ") mod p", witness, 1, p,
             witness == 1});
    }
    if (s >= 1) {
        // p-part: a_0^(p^s) must reproduce the first s+1 digits of a.
        const std::int64_t modulus = checked_pow(p, s + 1);
        const std::int64_t lhs = mod_pow(a0, checked_pow(p, s), modulus);
        const std::int64_t rhs = static_cast<std::int64_t>(
            mpz_fdiv_ui(a.unit().get_mpz_t(), static_cast<unsigned long>(modulus)));
        report.checks.push_back(
            {"a0^(p^" + std::to_string(s) + ") mod p^" + std::to_string(s + 1),
             lhs, rhs, modulus, lhs == rhs});
    }

    report.solvable = true;
    for (const Check& c : report.checks)
        report.solvable = report.solvable && c.pass;
    if (report.clause == Clause::ODD_P_COPRIME)
        report.root_count_mod_p = report.solvable ? std::gcd(q, p - 1) : 0;
    return report;
}

// Unit criterion for p = 2. Reads digits a_0..a_(s+1), so a must carry at
// least s+2 of them. Odd q is always solvable; q = 2^s * m needs
// a == 1 (mod 2^(s+2)).
inline SolvabilityReport solvable_unit_p2(const PadicNumber& a, std::int64_t q) {
    if (a.prime() != 2)
        throw invalid_argument_error("solvable_unit_p2: p must be 2");
    if (a.valuation() != 0)
        throw not_a_unit_error("solvable_unit_p2: a must be a unit");
    const auto [m, s] = factor_q(q, 2);
    if (a.precision() < s + 2)
        throw insufficient_precision_error(
            "solvable_unit_p2: criterion reads digits a_0..a_" +
            std::to_string(s + 1) + " but a has " + std::to_string(a.precision()));

    SolvabilityReport report;
    if (s == 0) {
        report.clause = Clause::P2_ODD_Q;
        report.solvable = true;
        return report;
    }
    report.clause = Clause::P2_EVEN_Q;
    const std::int64_t modulus = checked_pow(2, s + 2);
    const std::int64_t lhs = static_cast<std::int64_t>(
        mpz_fdiv_ui(a.unit().get_mpz_t(), static_cast<unsigned long>(modulus)));
    report.checks.push_back(
        {"a mod 2^" + std::to_string(s + 2), lhs, 1, modulus, lhs == 1});
    report.solvable = lhs == 1;
    return report;
}

inline SolvabilityReport solvable_unit(const PadicNumber& a, std::int64_t q) {
    return a.prime() == 2 ? solvable_unit_p2(a, q) : solvable_unit_odd_p(a, q);
}

// Full decision over Q_p. Zero has the single root zero; nonzero a is
// reduced to its unit part, and when solvable every root is enumerated at
// the precision of a, with valuation ord_p(a)/q.
inline std::pair<SolvabilityReport, RootSet> solve_qp(
    const PadicValue& a, std::int64_t q,
    std::int64_t scan_budget = default_scan_budget) {
    if (q < 1)
        throw invalid_argument_error("solve_qp: q must be >= 1");

    if (is_zero(a)) {
        SolvabilityReport report{true, Clause::ZERO_BASE, {}, std::nullopt};
        RootSet roots;
        roots.roots.emplace_back(Zero{});
        return {report, roots};
    }

    const PadicNumber& x = as_number(a);
    const std::int64_t v = x.valuation();
    const std::int64_t v_mod_q = ((v % q) + q) % q;
    const Check valuation_check{"ord_p(a) mod q", v_mod_q, 0, q, v_mod_q == 0};

    if (!valuation_check.pass) {
        SolvabilityReport report{false, Clause::VALUATION_OBSTRUCTION,
                                 {valuation_check}, std::nullopt};
        return {report, RootSet{}};
    }

    const PadicNumber unit_part = x.with_valuation(0);
    SolvabilityReport report = solvable_unit(unit_part, q);
    report.checks.insert(report.checks.begin(), valuation_check);

    RootSet roots;
    if (report.solvable) {
        roots = lift_all_roots(MonomialPoly(q, unit_part), x.precision(), scan_budget);
        const std::int64_t root_valuation = v / q;
        for (PadicValue& r : roots.roots)
            r = as_number(r).with_valuation(root_valuation);
    }
    return {report, roots};
}

struct MinusOneVerdict {
    bool is_power;
    Clause clause;
};

// Whether -1 is a q-th power in Q_p, decided purely from (p, q): for p = 2
// exactly the odd q; for odd p and q = m * p^s, always when m = 1, otherwise
// iff (p-1)/gcd(m, p-1) is even.
inline MinusOneVerdict minus_one_is_qth_power(std::int64_t p, std::int64_t q) {
    if (!is_prime(p))
        throw invalid_prime_error(std::to_string(p) + " is not prime");
    if (q < 2)
        throw invalid_argument_error("minus_one_is_qth_power: q must be >= 2");
    if (p == 2) {
        const bool odd = q % 2 == 1;
        return {odd, odd ? Clause::P2_ODD_Q : Clause::P2_EVEN_Q};
    }
    const auto [m, s] = factor_q(q, p);
    if (s >= 1 && m == 1)
        return {true, Clause::ODD_P_PURE_POWER};
    const bool even = ((p - 1) / std::gcd(m, p - 1)) % 2 == 0;
    return {even, s == 0 ? Clause::ODD_P_COPRIME : Clause::ODD_P_MIXED};
}

} // namespace padiq
