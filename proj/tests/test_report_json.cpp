#include "padiq/report_json.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "padiq/solver.hpp"

using namespace padiq;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> keys_of(const ordered_json& j) {
    std::vector<std::string> ks;
    for (const auto& item : j.items())
        ks.push_back(item.key());
    return ks;
}

} // namespace

TEST_CASE("report schema: fixed field names in fixed order") {
    const auto [report, roots] = solve_qp(from_rational(7, 2, 1, 4), 2);
    const ordered_json j = report_to_json(report, roots);

    CHECK(keys_of(j) ==
          std::vector<std::string>{"solvable", "clause", "checks", "roots"});
    CHECK(j["solvable"] == true);
    CHECK(j["clause"] == "ODD_P_COPRIME");

    REQUIRE(j["checks"].size() == 2);
    for (const auto& c : j["checks"])
        CHECK(keys_of(c) ==
              std::vector<std::string>{"desc", "lhs", "rhs", "modulus", "pass"});
    CHECK(j["checks"][0]["desc"] == "ord_p(a) mod q");

    REQUIRE(j["roots"].size() == 2);
    for (const auto& r : j["roots"])
        CHECK(keys_of(r) == std::vector<std::string>{"val", "digits"});
    CHECK(j["roots"][0]["val"] == 0);
    CHECK(j["roots"][0]["digits"][0] == 3);
    CHECK(j["roots"][1]["digits"][0] == 4);
}

TEST_CASE("zero root serializes with null valuation") {
    const auto [report, roots] = solve_qp(PadicValue(Zero{}), 3);
    const ordered_json j = report_to_json(report, roots);
    REQUIRE(j["roots"].size() == 1);
    CHECK(j["roots"][0]["val"].is_null());
    CHECK(j["roots"][0]["digits"].empty());
}

TEST_CASE("json round-trips byte-identically") {
    const std::vector<std::pair<PadicValue, std::int64_t>> cases = {
        {from_rational(7, 2, 1, 4), 2},   // solvable, two roots
        {from_rational(3, 27, 1, 8), 2},  // valuation obstruction
        {from_rational(2, 17, 1, 8), 2},  // p = 2
        {from_rational(5, -1, 1, 8), 10}, // mixed clause
        {PadicValue(Zero{}), 4},
    };
    for (const auto& [a, q] : cases) {
        const auto [report, roots] = solve_qp(a, q);
        const std::string once = report_to_json(report, roots).dump();
        const std::string twice = ordered_json::parse(once).dump();
        REQUIRE(once == twice);
    }
}
