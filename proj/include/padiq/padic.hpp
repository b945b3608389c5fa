#pragma once

/**
 * Exact truncated p-adic numbers.
 *
 * A nonzero value x is stored as x = p^v * u with a prime p, an integer
 * valuation v of either sign, and a unit residue u carried modulo p^N for a
 * caller-chosen precision of N base-p digits. The congruence meaning is
 *
 *     x == p^v * u   (mod p^(v+N)),   gcd(u, p) = 1,   1 <= u < p^N.
 *
 * Digits are a derived view of u (little-endian base p, first digit nonzero),
 * not the representation itself: ring operations are single big-integer
 * operations modulo p^N and digit extraction is O(N).
 *
 * Zero is a separate variant rather than a sentinel valuation, which keeps
 * the unit invariants unconditional. Values are immutable after construction
 * and every operation is a pure function, so everything here is safe to share
 * across threads.
 *
 * Precision is fixed per value; binary operations truncate to the smaller
 * operand precision, and requests for digits beyond the stored precision are
 * hard errors rather than fabricated zeros.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "padiq/errors.hpp"
#include "padiq/residue.hpp"

namespace padiq {

// p^e as an exact integer, e >= 0.
inline mpz_class pow_pz(std::int64_t p, std::int64_t e) {
    if (e < 0)
        throw invalid_argument_error("pow_pz: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    return r;
}

// Exponent of p in n; n must be nonzero.
inline std::int64_t ord_p(const mpz_class& n, std::int64_t p) {
    if (n == 0)
        throw invalid_argument_error("ord_p: undefined for 0");
    mpz_class reduced;
    mpz_class pz(static_cast<long>(p));
    return static_cast<std::int64_t>(
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

// Inverse of a modulo m; a must be coprime to m.
inline mpz_class invert_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw not_a_unit_error("invert_mod: operand shares a factor with the modulus");
    return r;
}

/// The p-adic zero, kept as its own variant: |0|_p = 0, no valuation, no unit.
struct Zero {
    friend bool operator==(Zero, Zero) { return true; }
};

/// Exact fraction m/n used as the entry format for values. Normalized so that
/// gcd(m, n) = 1 and n >= 1; m = 0 is allowed here and maps to Zero on
/// expansion.
struct RationalInput {
    mpz_class numerator;
    mpz_class denominator;

    RationalInput(mpz_class num, mpz_class den)
        : numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator == 0)
            throw invalid_argument_error("RationalInput: zero denominator");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        if (numerator == 0) {
            denominator = 1;
        } else {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
            numerator /= g;
            denominator /= g;
        }
    }

    RationalInput(std::int64_t num, std::int64_t den = 1)
        : RationalInput(mpz_class(static_cast<long>(num)),
                        mpz_class(static_cast<long>(den))) {}

    friend bool operator==(const RationalInput& a, const RationalInput& b) {
        return a.numerator == b.numerator && a.denominator == b.denominator;
    }
};

/// Nonzero p-adic value truncated to `precision` significant base-p digits.
class PadicNumber {
public:
    // Canonicalizes `unit` into [1, p^precision); rejects anything that is
    // zero or shares a factor with p after reduction. `prime` is trusted to
    // be prime here; construction entry points validate it once.
    PadicNumber(std::int64_t prime, std::int64_t valuation, mpz_class unit,
                std::int64_t precision)
        : prime_(prime), valuation_(valuation), precision_(precision) {
        if (prime_ < 2)
            throw invalid_prime_error("PadicNumber: prime must be >= 2");
        if (precision_ < 1)
            throw invalid_precision_error("PadicNumber: precision must be >= 1");
        const mpz_class modulus = pow_pz(prime_, precision_);
        unit_ = std::move(unit);
        mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
        if (unit_ == 0 || mpz_fdiv_ui(unit_.get_mpz_t(),
                                      static_cast<unsigned long>(prime_)) == 0)
            throw not_a_unit_error("PadicNumber: unit residue is divisible by p");
    }

    std::int64_t prime() const { return prime_; }
    std::int64_t valuation() const { return valuation_; }
    const mpz_class& unit() const { return unit_; }
    std::int64_t precision() const { return precision_; }

    // First k base-p digits of the unit part, little-endian. Never fabricates
    // digits: k beyond the stored precision is an error.
    std::vector<std::int64_t> digits(std::int64_t k) const {
        if (k < 0 || k > precision_)
            throw insufficient_precision_error(
                "digits: requested " + std::to_string(k) + " digits but only " +
                std::to_string(precision_) + " are stored");
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(k));
        mpz_class rest = unit_;
        for (std::int64_t i = 0; i < k; ++i) {
            out.push_back(static_cast<std::int64_t>(mpz_fdiv_q_ui(
                rest.get_mpz_t(), rest.get_mpz_t(),
                static_cast<unsigned long>(prime_))));
        }
        return out;
    }

    std::vector<std::int64_t> digits() const { return digits(precision_); }

    // Same unit and precision, different valuation.
    PadicNumber with_valuation(std::int64_t v) const {
        return PadicNumber(prime_, v, unit_, precision_);
    }

    friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
        return a.prime_ == b.prime_ && a.valuation_ == b.valuation_ &&
               a.precision_ == b.precision_ && a.unit_ == b.unit_;
    }

private:
    std::int64_t prime_;
    std::int64_t valuation_;
    mpz_class unit_;
    std::int64_t precision_;
};

/// A p-adic value: either Zero or a nonzero PadicNumber.
using PadicValue = std::variant<Zero, PadicNumber>;

inline bool is_zero(const PadicValue& v) { return std::holds_alternative<Zero>(v); }

inline const PadicNumber& as_number(const PadicValue& v) {
    return std::get<PadicNumber>(v);
}

/// ord_p(x) extended with +infinity at x = 0.
struct Valuation {
    bool is_infinite = false;
    std::int64_t value = 0;

    static Valuation infinite() { return Valuation{true, 0}; }
    static Valuation of(std::int64_t v) { return Valuation{false, v}; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.is_infinite == b.is_infinite &&
               (a.is_infinite || a.value == b.value);
    }
};

// Canonical expansion of an exact rational at precision N. Returns Zero iff
// the numerator is zero; otherwise valuation = ord_p(m) - ord_p(n) and the
// unit residue is (m / p^ord_p(m)) * (n / p^ord_p(n))^-1 mod p^N.
inline PadicValue from_rational(std::int64_t p, const RationalInput& r,
                                std::int64_t precision) {
    if (!is_prime(p))
        throw invalid_prime_error(std::to_string(p) + " is not prime");
    if (precision < 1)
        throw invalid_precision_error("from_rational: precision must be >= 1");
    if (r.numerator == 0)
        return Zero{};

    mpz_class m_pure, n_pure;
    const mpz_class pz(static_cast<long>(p));
    const std::int64_t vm = static_cast<std::int64_t>(mpz_remove(
        m_pure.get_mpz_t(), r.numerator.get_mpz_t(), pz.get_mpz_t()));
    const std::int64_t vn = static_cast<std::int64_t>(mpz_remove(
        n_pure.get_mpz_t(), r.denominator.get_mpz_t(), pz.get_mpz_t()));

    const mpz_class modulus = pow_pz(p, precision);
    mpz_class u = m_pure * invert_mod(n_pure, modulus);
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    return PadicNumber(p, vm - vn, u, precision);
}

inline PadicValue from_rational(std::int64_t p, std::int64_t num, std::int64_t den,
                                std::int64_t precision) {
    return from_rational(p, RationalInput(num, den), precision);
}

// (ord_p(x), |x|_p) with the norm as an exact rational; (+infinity, 0) at 0.
inline std::pair<Valuation, mpq_class> valuation_and_norm(const PadicValue& x) {
    if (is_zero(x))
        return {Valuation::infinite(), mpq_class(0)};
    const PadicNumber& n = as_number(x);
    const std::int64_t v = n.valuation();
    mpq_class norm;
    if (v >= 0)
        norm = mpq_class(1, pow_pz(n.prime(), v));
    else
        norm = mpq_class(pow_pz(n.prime(), -v), 1);
    norm.canonicalize();
    return {Valuation::of(v), norm};
}

// Product at the smaller operand precision; valuations add.
inline PadicNumber mul(const PadicNumber& x, const PadicNumber& y) {
    if (x.prime() != y.prime())
        throw prime_mismatch_error("mul: operands live over different primes");
    const std::int64_t n = std::min(x.precision(), y.precision());
    return PadicNumber(x.prime(), x.valuation() + y.valuation(),
                       x.unit() * y.unit(), n);
}

// x^q for q >= 1; the valuation multiplies by q.
inline PadicNumber pow(const PadicNumber& x, std::int64_t q) {
    if (q < 1)
        throw invalid_argument_error("pow: exponent must be >= 1");
    const mpz_class modulus = pow_pz(x.prime(), x.precision());
    mpz_class u;
    const mpz_class e(static_cast<long>(q));
    mpz_powm(u.get_mpz_t(), x.unit().get_mpz_t(), e.get_mpz_t(),
             modulus.get_mpz_t());
    return PadicNumber(x.prime(), x.valuation() * q, u, x.precision());
}

// Splits x as p^v * x_* and reports whether q divides v. The unit part is x
// with its valuation forced to zero.
inline std::pair<bool, PadicNumber> reduce_to_unit(const PadicNumber& x,
                                                   std::int64_t q) {
    if (q < 1)
        throw invalid_argument_error("reduce_to_unit: q must be >= 1");
    const bool divisible = x.valuation() % q == 0;
    return {divisible, x.with_valuation(0)};
}

// Digit rendering shared by the CLI and golden tests:
//   p=<p> val=<v> digits=[d0,d1,...,d{N-1}]
inline std::string render(const PadicNumber& x) {
    std::string out = "p=" + std::to_string(x.prime()) +
                      " val=" + std::to_string(x.valuation()) + " digits=[";
    bool first = true;
    for (std::int64_t d : x.digits()) {
        if (!first)
            out += ',';
        out += std::to_string(d);
        first = false;
    }
    out += ']';
    return out;
}

// Zero has no digits to show; valuation renders as inf.
inline std::string render_zero(std::int64_t p) {
    return "p=" + std::to_string(p) + " val=inf digits=[]";
}

} // namespace padiq
