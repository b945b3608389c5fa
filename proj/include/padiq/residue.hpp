#pragma once

/**
 * Modular arithmetic kernels and q-th power residue tests modulo p.
 *
 * All kernels run on 64-bit operands with 128-bit intermediates, so every
 * modulus up to 2^63 is handled exactly. Anything wider is rejected with
 * overflow_error; results never wrap.
 */

#include <cstdint>
#include <numeric>
#include <string>

#include "padiq/errors.hpp"

namespace padiq {

// Shared cap on exhaustive residue scans; keeps desk-scale sweeps instant
// and turns impossible ones into errors instead of hangs.
inline constexpr std::int64_t default_scan_budget = 10'000'000;

// (a * b) % m without intermediate overflow, for m < 2^63.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
        static_cast<unsigned __int128>(m));
}

// base^exp, rejecting anything that does not fit in a signed 64-bit result.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (base < 0 || exp < 0)
        throw invalid_argument_error("checked_pow: negative base or exponent");
    constexpr std::int64_t limit = INT64_MAX;
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > limit / base)
            throw overflow_error("checked_pow: " + std::to_string(base) + "^" +
                                 std::to_string(exp) + " exceeds 64 bits");
        acc *= base;
    }
    return acc;
}

// base^exp mod modulus by square-and-multiply; O(log exp) multiplications.
inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t modulus) {
    if (modulus < 2)
        throw invalid_argument_error("mod_pow: modulus must be >= 2");
    if (exp < 0)
        throw invalid_argument_error("mod_pow: negative exponent");
    base %= modulus;
    if (base < 0)
        base += modulus;
    std::int64_t result = 1;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

// Deterministic primality by trial division; intended for p up to 2^31.
inline bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    if (p < 4)
        return true;
    if (p % 2 == 0)
        return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

// Exponent of p in n (n != 0).
inline std::int64_t ord_p(std::int64_t n, std::int64_t p) {
    if (n == 0)
        throw invalid_argument_error("ord_p: undefined for 0");
    if (n < 0)
        n = -n;
    std::int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Outcome of the q-th power residue test modulo an odd prime p.
/// is_residue holds iff witness_power == 1, with d = gcd(q, p-1).
struct ResidueVerdict {
    bool is_residue;
    std::int64_t d;
    std::int64_t witness_power;
};

// Tests whether a0 is a q-th power residue modulo the odd prime p, via
// a0^((p-1)/d) mod p with d = gcd(q, p-1).
inline ResidueVerdict qth_power_residue(std::int64_t a0, std::int64_t q, std::int64_t p) {
    if (q < 1)
        throw invalid_argument_error("qth_power_residue: q must be >= 1");
    if (p < 3 || p % 2 == 0)
        throw invalid_argument_error("qth_power_residue: p must be an odd prime");
    std::int64_t r = a0 % p;
    if (r < 0)
        r += p;
    if (r == 0)
        throw not_a_unit_error("qth_power_residue: " + std::to_string(a0) +
                               " is divisible by " + std::to_string(p));
    const std::int64_t d = std::gcd(q, p - 1);
    const std::int64_t witness = mod_pow(r, (p - 1) / d, p);
    return ResidueVerdict{witness == 1, d, witness};
}

// Number of x in [1, p-1] with x^q == a0 (mod p): gcd(q, p-1) if a0 is a
// residue, 0 otherwise.
inline std::int64_t count_mod_p_roots(std::int64_t a0, std::int64_t q, std::int64_t p) {
    const ResidueVerdict v = qth_power_residue(a0, q, p);
    return v.is_residue ? v.d : 0;
}

} // namespace padiq
