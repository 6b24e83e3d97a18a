#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/weinstein.hpp"

namespace blowup::cli {

/// Malformed manifest or arguments; maps to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalModelSection {
  double rho = 0.0;
  double delta = 0.0;
  double r = 0.0;
};

struct Manifest {
  ManifoldSpec manifold;
  std::vector<CircleLoopSpec> loops;
  std::optional<LocalModelSection> local_model;
  std::uint64_t seed = 0;

  /// Throws SchemaError("unknown loop: NAME").
  const CircleLoopSpec& loop(const std::string& name) const;
};

/// Validates and converts. Rationals are strings "p/q" or "p" with an
/// optional sign; weights must have length n; loop names must be unique.
Manifest parse_manifest(const nlohmann::json& doc);
Manifest load_manifest(const std::string& path);

}  // namespace blowup::cli
