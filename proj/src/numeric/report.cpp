#include "blowup/report.hpp"

#include <algorithm>
#include <cstdio>

namespace blowup {

nlohmann::ordered_json to_json(const CheckResult& result) {
  return {{"check", result.check},
          {"samples", result.samples},
          {"max_deviation", result.max_deviation},
          {"tolerance", result.tolerance},
          {"pass", result.pass}};
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    out.push_back(to_json(r));
  }
  return out;
}

std::string format_line(const CheckResult& result) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %s samples=%zu max_deviation=%.3e tolerance=%.1e", result.pass ? "PASS" : "FAIL",
                result.check.c_str(), result.samples, result.max_deviation, result.tolerance);
  std::string line = buf;
  if (result.skipped > 0) {
    line += " skipped=" + std::to_string(result.skipped);
  }
  return line;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace blowup
