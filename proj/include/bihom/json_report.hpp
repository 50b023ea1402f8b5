#pragma once

#include <json.hpp>

#include "bihom/algebra.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/derivations.hpp"
#include "bihom/report.hpp"

namespace bihom {

// Machine-readable mirrors of the result types. Rationals are written as
// strings "p/q" and group elements in GradingGroup::format notation.

nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const CohomologyResult& result, const GradingGroup& group);
nlohmann::json to_json(const SolverResult& result, const GradingGroup& group);
nlohmann::json to_json(const ColourAlgebra& a);

/// {"version": 1, "command": ..., <body fields>}
nlohmann::json make_document(const std::string& command, nlohmann::json body);

}  // namespace bihom
