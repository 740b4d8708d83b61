#pragma once

#include <json.hpp>

#include "opcheck/theorems.hpp"
#include "opcheck/types.hpp"

namespace opcheck {

/// Matrix wire format: {"dim": n, "entries": [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Spectral set wire format: {"points": [[re, im], ...]}.
nlohmann::json points_to_json(const std::vector<Complex>& pts);

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json property_report_to_json(const PropertyReport& r);
nlohmann::json counterexamples_to_json(const std::vector<CounterexampleResult>& results);

nlohmann::json tolerances_to_json(const Tolerances& t);

}  // namespace opcheck
