#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/checks.hpp"

namespace blowup {

/// {check, samples, max_deviation, tolerance, pass}.
nlohmann::ordered_json to_json(const CheckResult& result);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& results);

/// "PASS beta-slope samples=10000 max_deviation=0 tolerance=0".
std::string format_line(const CheckResult& result);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace blowup
