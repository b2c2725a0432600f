#pragma once

#include <json.hpp>

#include "selcon/connectors.hpp"
#include "selcon/report.hpp"

namespace selcon {

/// JSON object with exactly the SolutionReport fields as snake_case keys.
nlohmann::ordered_json to_json(const SolutionReport& report);
SolutionReport report_from_json(const nlohmann::ordered_json& j);

/// Array of {"removed", "inefficiency", "solution_size"} plus the argmin index.
nlohmann::ordered_json to_json(const RelaxTrace& trace);

} // namespace selcon
