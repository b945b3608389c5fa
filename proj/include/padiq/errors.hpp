#pragma once

#include <stdexcept>
#include <string>

namespace padiq {

// Base class for everything this library throws on contract violations.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct invalid_prime_error : error {
    explicit invalid_prime_error(const std::string& msg) : error(msg) {}
};

struct invalid_precision_error : error {
    explicit invalid_precision_error(const std::string& msg) : error(msg) {}
};

// Raised when more digits are requested than a value actually stores.
// Digits are never fabricated.
struct insufficient_precision_error : error {
    explicit insufficient_precision_error(const std::string& msg) : error(msg) {}
};

struct prime_mismatch_error : error {
    explicit prime_mismatch_error(const std::string& msg) : error(msg) {}
};

struct not_a_unit_error : error {
    explicit not_a_unit_error(const std::string& msg) : error(msg) {}
};

// Raised when a lifting seed fails one of its congruence invariants.
// The message names the congruence that failed.
struct invalid_seed_error : error {
    explicit invalid_seed_error(const std::string& msg) : error(msg) {}
};

struct budget_exceeded_error : error {
    explicit budget_exceeded_error(const std::string& msg) : error(msg) {}
};

// Native integer kernels refuse to wrap; anything past their width is an error.
struct overflow_error : error {
    explicit overflow_error(const std::string& msg) : error(msg) {}
};

struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& msg) : error(msg) {}
};

} // namespace padiq
