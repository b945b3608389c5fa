#pragma once

/**
 * Root lifting for f(x) = x^q - a over the p-adic integers.
 *
 * Three entry points:
 *
 *  - hensel_lift: the general lemma. A seed theta with f(theta) == 0
 *    (mod p^(2i+1)) and ord_p(f'(theta)) exactly i determines a unique root
 *    in the residue class theta mod p^(i+1); we refine it by Newton steps.
 *
 *  - stepwise_power_lift: the explicit one-digit-at-a-time recursion for
 *    pure p-power exponents q = p^s. Each step computes
 *        eps = a_(n+1) - (x_n^q - a_0 - a_1 p - ... - a_n p^n) / p^(n+1)
 *    reduced mod p and sets x_(n+1) = x_n + eps * p^(n-s+1). Kept separate
 *    from the Newton path on purpose: the two are cross-checked in tests.
 *
 *  - lift_all_roots: completeness wrapper. Enumerates every solution of
 *    x^q == a (mod p^(2s+1)) with s = ord_p(q), groups by residue class mod
 *    p^(s+1), and lifts one seed per class. Since ord_p(q theta^(q-1)) = s
 *    exactly for unit theta, each nonempty class carries exactly one root,
 *    so the returned set is provably complete.
 *
 * With derivative valuation i > 0 the top i digits of a precision-N root are
 * not pinned down by a mod p^N: any solution of the congruence is correct
 * there. hensel_lift canonicalizes by returning the class representative
 * reduced mod p^(N-i) (top digit positions zero), which makes the result a
 * pure function of (class, a mod p^N, N) and keeps equal seeds bitwise equal.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padiq/errors.hpp"
#include "padiq/padic.hpp"
#include "padiq/residue.hpp"

namespace padiq {

/// Approximate root theta with derivative valuation i. Valid when
/// f(theta) == 0 (mod p^(2i+1)) and ord_p(f'(theta)) = i exactly; both are
/// re-verified at every use, never trusted.
struct HenselSeed {
    mpz_class theta;
    std::int64_t i;
};

/// f(x) = x^q - a with a unit (valuation 0).
struct MonomialPoly {
    std::int64_t q;
    PadicNumber a;

    MonomialPoly(std::int64_t q_, PadicNumber a_) : q(q_), a(std::move(a_)) {
        if (q < 1)
            throw invalid_argument_error("MonomialPoly: q must be >= 1");
        if (a.valuation() != 0)
            throw not_a_unit_error("MonomialPoly: a must be a unit (valuation 0)");
    }
};

/// Roots plus the residue-class bookkeeping that proves completeness: one
/// root per theta class mod p^(s+1), classes listed ascending.
struct RootSet {
    std::vector<PadicValue> roots;
    std::int64_t class_modulus = 0;
    std::vector<std::int64_t> theta_classes;
};

namespace detail {

// Throws invalid_seed_error naming the first violated seed congruence.
inline void verify_seed(const MonomialPoly& f, const HenselSeed& seed) {
    const std::int64_t p = f.a.prime();
    if (seed.i < 0)
        throw invalid_seed_error("hensel seed: i must be >= 0");
    if (f.a.precision() < 2 * seed.i + 1)
        throw insufficient_precision_error(
            "hensel seed: verifying f(theta) mod p^(2i+1) needs " +
            std::to_string(2 * seed.i + 1) + " digits of a, have " +
            std::to_string(f.a.precision()));

    const mpz_class big = pow_pz(p, 2 * seed.i + 1);
    mpz_class theta_red;
    mpz_fdiv_r(theta_red.get_mpz_t(), seed.theta.get_mpz_t(), big.get_mpz_t());

    mpz_class lhs;
    const mpz_class qz(static_cast<long>(f.q));
    mpz_powm(lhs.get_mpz_t(), theta_red.get_mpz_t(), qz.get_mpz_t(), big.get_mpz_t());
    const mpz_class rhs = f.a.unit() % big;
    if (lhs != rhs)
        throw invalid_seed_error(
            "hensel seed: theta^q = " + lhs.get_str() + " != " + rhs.get_str() +
            " = a (mod p^" + std::to_string(2 * seed.i + 1) + ")");

    // ord_p(f'(theta)) = ord_p(q theta^(q-1)); demand exactly i.
    const mpz_class small = pow_pz(p, seed.i + 1);
    mpz_class deriv;
    const mpz_class qm1(static_cast<long>(f.q - 1));
    mpz_powm(deriv.get_mpz_t(), theta_red.get_mpz_t(), qm1.get_mpz_t(), small.get_mpz_t());
    deriv = deriv * f.q % small;
    if (deriv == 0)
        throw invalid_seed_error(
            "hensel seed: ord_p(f'(theta)) > i = " + std::to_string(seed.i));
    if (seed.i > 0 && deriv % pow_pz(p, seed.i) != 0)
        throw invalid_seed_error(
            "hensel seed: ord_p(f'(theta)) < i = " + std::to_string(seed.i));
}

} // namespace detail

// Lifts the seed to a precision-N root r of x^q = a: unit(r)^q == unit(a)
// (mod p^N) and r == theta (mod p^(i+1)). Deterministic; seeds in the same
// class mod p^(i+1) produce bitwise-equal results.
inline PadicNumber hensel_lift(const MonomialPoly& f, const HenselSeed& seed,
                               std::int64_t target_precision) {
    const std::int64_t p = f.a.prime();
    const std::int64_t i = seed.i;
    detail::verify_seed(f, seed);
    if (target_precision < i + 1)
        throw invalid_precision_error(
            "hensel_lift: target precision must be at least i+1 = " +
            std::to_string(i + 1));
    if (f.a.precision() < target_precision)
        throw insufficient_precision_error(
            "hensel_lift: target precision " + std::to_string(target_precision) +
            " exceeds the " + std::to_string(f.a.precision()) + " digits of a");

    const mpz_class modulus = pow_pz(p, target_precision);
    const mpz_class p_i = pow_pz(p, i);
    const mpz_class a_mod = f.a.unit() % modulus;
    const mpz_class qz(static_cast<long>(f.q));
    const mpz_class qm1(static_cast<long>(f.q - 1));

    mpz_class theta;
    mpz_fdiv_r(theta.get_mpz_t(), seed.theta.get_mpz_t(), modulus.get_mpz_t());

    // Newton: theta <- theta - f(theta)/f'(theta), all mod p^N. Exact
    // divisions by p^i are safe because f and f' stay divisible by p^i at a
    // unit iterate. The f-vanishing order rises strictly every step, so this
    // terminates well inside the iteration cap.
    mpz_class e, deriv, unit_part, delta;
    bool converged = false;
    for (std::int64_t iter = 0; iter <= target_precision + 2; ++iter) {
        mpz_powm(e.get_mpz_t(), theta.get_mpz_t(), qz.get_mpz_t(), modulus.get_mpz_t());
        e = (e - a_mod) % modulus;
        if (e < 0)
            e += modulus;
        if (e == 0) {
            converged = true;
            break;
        }
        mpz_powm(deriv.get_mpz_t(), theta.get_mpz_t(), qm1.get_mpz_t(), modulus.get_mpz_t());
        deriv = deriv * f.q % modulus;
        mpz_divexact(unit_part.get_mpz_t(), deriv.get_mpz_t(), p_i.get_mpz_t());
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), p_i.get_mpz_t());
        delta = e * invert_mod(unit_part, modulus) % modulus;
        theta = (theta - delta) % modulus;
        if (theta < 0)
            theta += modulus;
    }
    if (!converged)
        throw error("hensel_lift: Newton iteration failed to converge");

    // Canonical representative: digits above N-i are not determined by
    // a mod p^N, so zero them.
    if (i > 0)
        theta %= pow_pz(p, target_precision - i);
    return PadicNumber(p, 0, theta, target_precision);
}

// The digit-update recursion for q = p^s. Takes a solution x_k of
// x^q == a (mod p^(k+1)) and extends it one digit per step until the
// congruence holds mod p^(target_k+1). Requires k >= s for odd p and
// k >= s+1 for p = 2, and a carried to at least target_k+1 digits.
inline mpz_class stepwise_power_lift(const PadicNumber& a, std::int64_t q,
                                     const mpz_class& x_k, std::int64_t k,
                                     std::int64_t target_k) {
    const std::int64_t p = a.prime();
    if (a.valuation() != 0)
        throw not_a_unit_error("stepwise_power_lift: a must be a unit");
    if (q < 1)
        throw invalid_argument_error("stepwise_power_lift: q must be >= 1");
    const std::int64_t s = ord_p(q, p);
    if (checked_pow(p, s) != q)
        throw invalid_argument_error(
            "stepwise_power_lift: q = " + std::to_string(q) +
            " is not a power of p = " + std::to_string(p));
    const std::int64_t k_min = (p == 2) ? s + 1 : s;
    if (k < k_min)
        throw invalid_argument_error(
            "stepwise_power_lift: k = " + std::to_string(k) +
            " below the minimum " + std::to_string(k_min) + " for p = " +
            std::to_string(p));
    if (target_k < k)
        throw invalid_argument_error("stepwise_power_lift: target_k < k");
    if (a.precision() < target_k + 1)
        throw insufficient_precision_error(
            "stepwise_power_lift: needs digits a_0..a_" + std::to_string(target_k) +
            " but a has " + std::to_string(a.precision()));

    mpz_class modulus = pow_pz(p, k + 1);
    mpz_class x;
    mpz_fdiv_r(x.get_mpz_t(), x_k.get_mpz_t(), modulus.get_mpz_t());
    if (mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)) == 0)
        throw invalid_argument_error("stepwise_power_lift: x_k is divisible by p");

    const mpz_class qz(static_cast<long>(q));
    mpz_class check;
    mpz_powm(check.get_mpz_t(), x.get_mpz_t(), qz.get_mpz_t(), modulus.get_mpz_t());
    if (check != a.unit() % modulus)
        throw invalid_argument_error(
            "stepwise_power_lift: x_k^q != a (mod p^" + std::to_string(k + 1) + ")");

    const std::vector<std::int64_t> digit = a.digits(target_k + 1);

    // prefix = a_0 + a_1 p + ... + a_n p^n, maintained incrementally.
    mpz_class prefix = a.unit() % modulus;
    mpz_class step_base = pow_pz(p, k - s + 1);
    mpz_class t, eps;
    for (std::int64_t n = k; n < target_k; ++n) {
        const mpz_class next_modulus = modulus * p;
        mpz_powm(t.get_mpz_t(), x.get_mpz_t(), qz.get_mpz_t(), next_modulus.get_mpz_t());
        t -= prefix;
        if (t < 0)
            t += next_modulus;
        // t = x^q - prefix mod p^(n+2); divisible by p^(n+1) by the loop
        // invariant, so t / p^(n+1) is the carry digit the update corrects.
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
        eps = digit[static_cast<std::size_t>(n + 1)] - t;
        mpz_fdiv_r_ui(eps.get_mpz_t(), eps.get_mpz_t(), static_cast<unsigned long>(p));
        x += eps * step_base;

        prefix += digit[static_cast<std::size_t>(n + 1)] * modulus;
        modulus = next_modulus;
        step_base *= p;
    }
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return x;
}

// Enumerates every residue theta in [1, p^(2s+1)) with theta^q == a, groups
// by class mod p^(s+1), and Hensel-lifts one seed per class to precision N.
// Empty RootSet when no theta exists. The scan is capped by `scan_budget`.
inline RootSet lift_all_roots(const MonomialPoly& f, std::int64_t target_precision,
                              std::int64_t scan_budget = default_scan_budget) {
    const std::int64_t p = f.a.prime();
    const std::int64_t s = ord_p(f.q, p);
    if (f.a.precision() < 2 * s + 1)
        throw insufficient_precision_error(
            "lift_all_roots: enumeration mod p^(2s+1) needs " +
            std::to_string(2 * s + 1) + " digits of a, have " +
            std::to_string(f.a.precision()));

    const std::int64_t enum_modulus = checked_pow(p, 2 * s + 1);
    if (enum_modulus > scan_budget)
        throw budget_exceeded_error(
            "lift_all_roots: scanning " + std::to_string(enum_modulus) +
            " residues exceeds the budget of " + std::to_string(scan_budget));
    const std::int64_t class_modulus = checked_pow(p, s + 1);

    const mpz_class big = pow_pz(p, 2 * s + 1);
    const mpz_class a_red_z = f.a.unit() % big;
    const std::int64_t a_red = static_cast<std::int64_t>(a_red_z.get_si());

    // class -> smallest solving theta; std::map keeps classes ascending.
    std::map<std::int64_t, std::int64_t> reps;
    for (std::int64_t theta = 1; theta < enum_modulus; ++theta) {
        if (theta % p == 0)
            continue;
        if (mod_pow(theta, f.q, enum_modulus) == a_red)
            reps.emplace(theta % class_modulus, theta);
    }

    RootSet out;
    out.class_modulus = class_modulus;
    for (const auto& [cls, theta] : reps) {
        out.theta_classes.push_back(cls);
        out.roots.emplace_back(
            hensel_lift(f, HenselSeed{mpz_class(static_cast<long>(theta)), s},
                        target_precision));
    }
    return out;
}

} // namespace padiq
