#pragma once

// JSON form of a solvability report. Key order is fixed (insertion order of
// an ordered_json) so that parse -> dump round-trips byte-identically:
//   {solvable, clause, checks:[{desc,lhs,rhs,modulus,pass}], roots:[{val,digits}]}

#include <nlohmann/json.hpp>

#include "padiq/hensel.hpp"
#include "padiq/padic.hpp"
#include "padiq/solver.hpp"

namespace padiq {

inline nlohmann::ordered_json root_to_json(const PadicValue& r) {
    nlohmann::ordered_json j;
    if (is_zero(r)) {
        j["val"] = nullptr;
        j["digits"] = nlohmann::ordered_json::array();
        return j;
    }
    const PadicNumber& x = as_number(r);
    j["val"] = x.valuation();
    j["digits"] = x.digits();
    return j;
}

inline nlohmann::ordered_json report_to_json(const SolvabilityReport& report,
                                             const RootSet& roots) {
    nlohmann::ordered_json j;
    j["solvable"] = report.solvable;
    j["clause"] = clause_name(report.clause);
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        nlohmann::ordered_json cj;
        cj["desc"] = c.desc;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["modulus"] = c.modulus;
        cj["pass"] = c.pass;
        j["checks"].push_back(std::move(cj));
    }
    j["roots"] = nlohmann::ordered_json::array();
    for (const PadicValue& r : roots.roots)
        j["roots"].push_back(root_to_json(r));
    return j;
}

} // namespace padiq
