#pragma once

/**
 * Independent brute-force ground truth for x^q == a (mod p^k): every residue
 * in [0, p^k) is tried, nothing clever. Tests replay solver verdicts against
 * this, so it must stay free of any shared machinery beyond mod_pow.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padiq/errors.hpp"
#include "padiq/residue.hpp"

namespace padiq {

/// Exhaustive solution set of x^q == a (mod p^k).
struct OracleResult {
    std::int64_t modulus;
    std::vector<std::int64_t> solutions;
    std::chrono::duration<double> elapsed;
};

// p^k under the scan budget, as the scan modulus; errors out instead of
// overflowing or starting an unpayable scan.
inline std::int64_t scan_modulus(std::int64_t p, std::int64_t k,
                                 std::int64_t scan_budget) {
    if (k < 1)
        throw invalid_argument_error("oracle: k must be >= 1");
    if (scan_budget < 1)
        throw invalid_argument_error("oracle: scan budget must be >= 1");
    std::int64_t modulus = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (modulus > scan_budget / p)
            throw budget_exceeded_error(
                "oracle: " + std::to_string(p) + "^" + std::to_string(k) +
                " candidates exceed the scan budget of " +
                std::to_string(scan_budget));
        modulus *= p;
    }
    return modulus;
}

// Scans all residues mod p^k for solutions of x^q == a; deterministic
// ascending order.
inline OracleResult brute_force(std::int64_t p, std::int64_t k, std::int64_t q,
                                const mpz_class& a,
                                std::int64_t scan_budget = default_scan_budget) {
    if (!is_prime(p))
        throw invalid_prime_error(std::to_string(p) + " is not prime");
    if (q < 1)
        throw invalid_argument_error("oracle: q must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t modulus = scan_modulus(p, k, scan_budget);

    mpz_class a_red;
    mpz_fdiv_r_ui(a_red.get_mpz_t(), a.get_mpz_t(),
                  static_cast<unsigned long>(modulus));
    const std::int64_t target = static_cast<std::int64_t>(a_red.get_si());

    OracleResult out;
    out.modulus = modulus;
    for (std::int64_t x = 0; x < modulus; ++x)
        if (mod_pow(x, q, modulus) == target)
            out.solutions.push_back(x);
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

inline OracleResult brute_force(std::int64_t p, std::int64_t k, std::int64_t q,
                                std::int64_t a,
                                std::int64_t scan_budget = default_scan_budget) {
    return brute_force(p, k, q, mpz_class(static_cast<long>(a)), scan_budget);
}

// Residue classes mod p^(s+1), s = ord_p(q), that extend to solutions mod
// p^(2s+1): exactly the classes the lifting machinery must discover.
inline std::vector<std::int64_t> stabilized_solution_classes(
    std::int64_t p, std::int64_t q, const mpz_class& a,
    std::int64_t scan_budget = default_scan_budget) {
    const std::int64_t s = ord_p(q, p);
    const OracleResult scan = brute_force(p, 2 * s + 1, q, a, scan_budget);
    const std::int64_t class_modulus = checked_pow(p, s + 1);
    std::vector<std::int64_t> classes;
    for (std::int64_t x : scan.solutions)
        classes.push_back(x % class_modulus);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

} // namespace padiq
