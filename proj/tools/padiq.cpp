// padiq: decide and solve x^q = a over the p-adic numbers.
//
// Subcommands: expand, solvable, roots, minus-one, verify.
// Exit codes are part of the contract: 0 solvable/success, 1 unsolvable,
// 2 input error, 3 scan budget exceeded.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "padiq/padiq.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_unsolvable = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

// Parses "m" or "m/n" into an exact fraction.
padiq::RationalInput parse_value(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_text = text.substr(0, slash);
    const std::string den_text =
        slash == std::string::npos ? "1" : text.substr(slash + 1);
    mpz_class num, den;
    if (num_text.empty() ||
        mpz_set_str(num.get_mpz_t(), num_text.c_str(), 10) != 0)
        throw padiq::invalid_argument_error("cannot parse numerator in '" + text + "'");
    if (den_text.empty() ||
        mpz_set_str(den.get_mpz_t(), den_text.c_str(), 10) != 0)
        throw padiq::invalid_argument_error("cannot parse denominator in '" + text + "'");
    return padiq::RationalInput(num, den);
}

// Digits needed so that the criterion, the enumeration and the requested
// display all fit in one value.
std::int64_t working_precision(std::int64_t p, std::int64_t q, std::int64_t digits) {
    const std::int64_t s = padiq::ord_p(q, p);
    std::int64_t need = std::max<std::int64_t>(digits, 2 * s + 1);
    need = std::max(need, p == 2 ? s + 2 : s + 1);
    return need;
}

void print_roots_text(const padiq::RootSet& roots, std::int64_t p) {
    for (const padiq::PadicValue& r : roots.roots) {
        if (padiq::is_zero(r))
            std::cout << padiq::render_zero(p) << '\n';
        else
            std::cout << padiq::render(padiq::as_number(r)) << '\n';
    }
}

void print_report_text(const padiq::SolvabilityReport& report) {
    std::cout << "solvable=" << (report.solvable ? "yes" : "no")
              << " clause=" << padiq::clause_name(report.clause) << '\n';
    for (const padiq::Check& c : report.checks)
        std::cout << "check \"" << c.desc << "\": " << c.lhs
                  << (c.pass ? " == " : " != ") << c.rhs << " (mod " << c.modulus
                  << ") -> " << (c.pass ? "pass" : "fail") << '\n';
    if (report.root_count_mod_p)
        std::cout << "roots mod p: " << *report.root_count_mod_p << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for x^q = a over the p-adic numbers"};
    app.require_subcommand(1);

    std::int64_t prime = 0;
    std::int64_t q = 1;
    std::int64_t digits = 16;
    std::int64_t mod_exp = -1;
    std::int64_t budget = padiq::default_scan_budget;
    std::string value;
    bool as_json = false;

    CLI::App* expand = app.add_subcommand("expand", "canonical digit expansion of m/n");
    expand->add_option("--prime,-p", prime, "prime p")->required();
    expand->add_option("--value,-a", value, "rational m/n or integer m")->required();
    expand->add_option("--digits,-n", digits, "number of base-p digits");

    CLI::App* solvable = app.add_subcommand("solvable", "decide x^q = a over Q_p");
    solvable->add_option("--prime,-p", prime, "prime p")->required();
    solvable->add_option("--q,-q", q, "exponent q >= 1")->required();
    solvable->add_option("--value,-a", value, "rational m/n or integer m")->required();
    solvable->add_option("--digits,-n", digits, "working precision in digits");
    solvable->add_flag("--json", as_json, "print the report as JSON");

    CLI::App* roots = app.add_subcommand("roots", "all p-adic roots of x^q = a");
    roots->add_option("--prime,-p", prime, "prime p")->required();
    roots->add_option("--q,-q", q, "exponent q >= 1")->required();
    roots->add_option("--value,-a", value, "rational m/n or integer m")->required();
    roots->add_option("--digits,-n", digits, "digits per printed root");
    roots->add_flag("--json", as_json, "print report and roots as JSON");

    CLI::App* minus_one = app.add_subcommand("minus-one",
                                             "is -1 a q-th power in Q_p?");
    minus_one->add_option("--prime,-p", prime, "prime p")->required();
    minus_one->add_option("--q,-q", q, "exponent q >= 2")->required();

    CLI::App* verify = app.add_subcommand("verify",
                                          "brute-force x^q == a (mod p^k)");
    verify->add_option("--prime,-p", prime, "prime p")->required();
    verify->add_option("--q,-q", q, "exponent q >= 1")->required();
    verify->add_option("--value,-a", value, "integer a")->required();
    verify->add_option("--mod-exp,-k", mod_exp,
                       "exponent k of the modulus p^k (default 2*ord_p(q)+3)");
    verify->add_option("--budget", budget, "max residues to scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    if (expand->parsed()) {
        const padiq::PadicValue x =
            padiq::from_rational(prime, parse_value(value), digits);
        if (padiq::is_zero(x))
            std::cout << padiq::render_zero(prime) << '\n';
        else
            std::cout << padiq::render(padiq::as_number(x)) << '\n';
        return exit_ok;
    }

    if (solvable->parsed() || roots->parsed()) {
        if (q < 1)
            throw padiq::invalid_argument_error("q must be >= 1");
        if (!padiq::is_prime(prime))
            throw padiq::invalid_prime_error(std::to_string(prime) + " is not prime");
        const padiq::PadicValue a = padiq::from_rational(
            prime, parse_value(value), working_precision(prime, q, digits));
        const auto [report, rootset] = padiq::solve_qp(a, q, budget);
        if (as_json) {
            std::cout << padiq::report_to_json(report, rootset).dump() << '\n';
        } else if (solvable->parsed()) {
            print_report_text(report);
        } else {
            print_roots_text(rootset, prime);
            if (!report.solvable)
                std::cerr << "unsolvable: clause "
                          << padiq::clause_name(report.clause) << '\n';
        }
        return report.solvable ? exit_ok : exit_unsolvable;
    }

    if (minus_one->parsed()) {
        const padiq::MinusOneVerdict v = padiq::minus_one_is_qth_power(prime, q);
        std::cout << (v.is_power ? "yes" : "no") << '\n';
        return v.is_power ? exit_ok : exit_unsolvable;
    }

    // verify
    if (q < 1)
        throw padiq::invalid_argument_error("q must be >= 1");
    if (!padiq::is_prime(prime))
        throw padiq::invalid_prime_error(std::to_string(prime) + " is not prime");
    if (mod_exp < 0)
        mod_exp = 2 * padiq::ord_p(q, prime) + 3;
    mpz_class a;
    if (mpz_set_str(a.get_mpz_t(), value.c_str(), 10) != 0)
        throw padiq::invalid_argument_error("cannot parse integer '" + value + "'");
    const padiq::OracleResult r = padiq::brute_force(prime, mod_exp, q, a, budget);
    std::cout << "modulus=" << prime << "^" << mod_exp << " count="
              << r.solutions.size() << " solutions=[";
    for (std::size_t i = 0; i < r.solutions.size(); ++i)
        std::cout << (i ? "," : "") << r.solutions[i];
    std::cout << "]\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const padiq::budget_exceeded_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const padiq::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}
