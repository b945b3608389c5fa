#include "padiq/residue.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <gmpxx.h>

#include <random>
#include <vector>

using namespace padiq;

namespace {

// Test-side ground truth: count x in [1, p-1] with x^q == a0 (mod p) by
// direct scan, no shared code path with the verdict under test.
std::int64_t scan_root_count(std::int64_t a0, std::int64_t q, std::int64_t p) {
    std::int64_t count = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        std::int64_t acc = 1;
        for (std::int64_t i = 0; i < q; ++i)
            acc = acc * x % p;
        if (acc == a0 % p)
            ++count;
    }
    return count;
}

} // namespace

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(2, 3, 7) == 1);
    CHECK(mod_pow(123, 0, 97) == 1);
    CHECK(mod_pow(4, (5 - 1) / 2, 5) == 1);
    CHECK(mod_pow(-1, 3, 7) == 6);
    CHECK(mod_pow(0, 5, 9) == 0);
    CHECK_THROWS_AS(mod_pow(2, 3, 1), invalid_argument_error);
    CHECK_THROWS_AS(mod_pow(2, -1, 7), invalid_argument_error);
}

TEST_CASE("mod_pow matches bignum arithmetic on wide operands") {
    std::mt19937_64 rng(0x5eed001);
    std::uniform_int_distribution<std::int64_t> dist(2, (std::int64_t{1} << 62));
    for (int i = 0; i < 200; ++i) {
        const std::int64_t m = dist(rng);
        const std::int64_t b = dist(rng) % m;
        const std::int64_t e = dist(rng) % 1000;
        mpz_class expected;
        mpz_powm_ui(expected.get_mpz_t(), mpz_class(static_cast<long>(b)).get_mpz_t(),
                    static_cast<unsigned long>(e),
                    mpz_class(static_cast<long>(m)).get_mpz_t());
        CHECK(mod_pow(b, e, m) == expected.get_si());
    }
}

TEST_CASE("checked_pow refuses to wrap") {
    CHECK(checked_pow(3, 0) == 1);
    CHECK(checked_pow(2, 62) == (std::int64_t{1} << 62));
    CHECK_THROWS_AS(checked_pow(2, 63), overflow_error);
    CHECK_THROWS_AS(checked_pow(10, 19), overflow_error);
}

TEST_CASE("is_prime trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(2147483647)); // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(2147483646));
}

TEST_CASE("qth_power_residue verdicts") {
    SECTION("2 is a square mod 7") {
        const ResidueVerdict v = qth_power_residue(2, 2, 7);
        CHECK(v.is_residue);
        CHECK(v.d == 2);
        CHECK(v.witness_power == 1);
    }
    SECTION("2 is not a square mod 5") {
        const ResidueVerdict v = qth_power_residue(2, 2, 5);
        CHECK_FALSE(v.is_residue);
        CHECK(v.d == 2);
    }
    SECTION("1 is every power") {
        for (std::int64_t p : {3, 5, 13, 41})
            for (std::int64_t q = 1; q <= 8; ++q)
                CHECK(qth_power_residue(1, q, p).is_residue);
    }
    SECTION("non-units are rejected") {
        CHECK_THROWS_AS(qth_power_residue(14, 2, 7), not_a_unit_error);
        CHECK_THROWS_AS(qth_power_residue(0, 2, 7), not_a_unit_error);
    }
}

TEST_CASE("count_mod_p_roots examples") {
    CHECK(count_mod_p_roots(2, 2, 7) == 2);
    CHECK(scan_root_count(2, 2, 7) == 2); // roots 3 and 4
    CHECK(count_mod_p_roots(2, 2, 5) == 0);
    CHECK(count_mod_p_roots(1, 4, 13) == 4); // {1, 5, 8, 12}
}

TEST_CASE("residue verdict equals exhaustive scan for all odd p <= 50, q <= 20") {
    for (std::int64_t p = 3; p <= 50; ++p) {
        if (!is_prime(p))
            continue;
        for (std::int64_t q = 1; q <= 20; ++q) {
            for (std::int64_t a0 = 1; a0 < p; ++a0) {
                const std::int64_t expected = scan_root_count(a0, q, p);
                const ResidueVerdict v = qth_power_residue(a0, q, p);
                REQUIRE(v.is_residue == (expected > 0));
                REQUIRE(count_mod_p_roots(a0, q, p) == expected);
            }
        }
    }
}

TEST_CASE("Fermat: a0^(p-1) == 1 mod p for units") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (std::int64_t a0 = 1; a0 < p; ++a0)
            REQUIRE(mod_pow(a0, p - 1, p) == 1);
}
