#pragma once

#include <string>

#include <json.hpp>

#include "dqdc/problems.hpp"

namespace dqdc {

// 17-significant-digit decimal form; round-trips doubles exactly.
std::string format_double(double x);

nlohmann::json solve_result_to_json(const SolveResult& r, const std::string& problem);
SolveResult solve_result_from_json(const nlohmann::json& j);

}  // namespace dqdc
