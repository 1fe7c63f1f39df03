#pragma once

// vendored single-header nlohmann/json
#include "json.hpp"

#include "liecx/complex_structure.hpp"
#include "liecx/lie_algebra.hpp"
#include "liecx/polynomial_system.hpp"
#include "liecx/search.hpp"

namespace liecx {

// {"dim": n, "basis_labels": [...], "brackets": [{"i":1,"j":2,"result":{"3":"1"}}, ...]}
// Indices are 1-based; scalars are "p" or "p/q" strings.
nlohmann::json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const nlohmann::json& j);

// {"dim": n, "rows": [["0","-1",...], ...]}
nlohmann::json endomorphism_to_json(const Endomorphism& j);
Endomorphism endomorphism_from_json(const nlohmann::json& j);

// Serializes only the nonzero pairs.
nlohmann::json report_to_json(const IntegrabilityReport& report);

nlohmann::json search_result_to_json(const SearchResult& result);

nlohmann::json system_to_json(const PolynomialSystem& sys);

}  // namespace liecx
