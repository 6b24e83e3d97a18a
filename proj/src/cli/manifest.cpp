#include "blowup/cli/manifest.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <set>

#include "blowup/exact/rational.hpp"

namespace blowup::cli {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
  if (!obj.is_object()) {
    throw SchemaError(where + ": expected an object");
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) {
      throw SchemaError(where + ": missing field '" + key + "'");
    }
  }
  for (const auto& item : obj.items()) {
    if (!required.count(item.key()) && !optional.count(item.key())) {
      throw SchemaError(where + ": unexpected field '" + item.key() + "'");
    }
  }
}

Rational rational_field(const json& v, const std::string& where) {
  static const std::regex pattern(R"(^[+-]?\d+(/\d+)?$)");
  if (!v.is_string() || !std::regex_match(v.get<std::string>(), pattern)) {
    throw SchemaError(where + ": expected a rational string like \"3/4\"");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

double real_field(const json& v, const std::string& where) {
  if (!v.is_number()) {
    throw SchemaError(where + ": expected a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw SchemaError(where + ": expected a finite number");
  }
  return x;
}

std::int64_t int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw SchemaError(where + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

const CircleLoopSpec& Manifest::loop(const std::string& name) const {
  for (const auto& l : loops) {
    if (l.name == name) {
      return l;
    }
  }
  throw SchemaError("unknown loop: " + name);
}

Manifest parse_manifest(const json& doc) {
  require_keys(doc, "manifest", {"manifold", "loops"}, {"local_model", "seed"});

  const json& m = doc.at("manifold");
  require_keys(m, "manifold", {"n", "volume", "period"}, {"gromov_width"});
  const std::int64_t n = int_field(m.at("n"), "manifold.n");
  std::optional<double> width;
  if (m.contains("gromov_width")) {
    width = real_field(m.at("gromov_width"), "manifold.gromov_width");
  }
  std::optional<ManifoldSpec> manifold;
  try {
    if (n < 1 || n > 64) {
      throw std::invalid_argument("n out of range");
    }
    manifold = ManifoldSpec::make(static_cast<int>(n), rational_field(m.at("volume"), "manifold.volume"),
                                  rational_field(m.at("period"), "manifold.period"), width);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("manifold: ") + e.what());
  }

  Manifest out{*manifold, {}, std::nullopt, 0};
  const json& loops = doc.at("loops");
  if (!loops.is_array()) {
    throw SchemaError("loops: expected an array");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const std::string where = "loops[" + std::to_string(i) + "]";
    const json& l = loops[i];
    require_keys(l, where, {"name", "weights", "C"}, {});
    if (!l.at("name").is_string() || l.at("name").get<std::string>().empty()) {
      throw SchemaError(where + ".name: expected a non-empty string");
    }
    CircleLoopSpec spec;
    spec.name = l.at("name").get<std::string>();
    if (!names.insert(spec.name).second) {
      throw SchemaError(where + ".name: duplicate loop name '" + spec.name + "'");
    }
    const json& w = l.at("weights");
    if (!w.is_array()) {
      throw SchemaError(where + ".weights: expected an integer list");
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      spec.weights.push_back(int_field(w[j], where + ".weights[" + std::to_string(j) + "]"));
    }
    if (static_cast<std::int64_t>(spec.weights.size()) != n) {
      throw SchemaError(where + ".weights: length " + std::to_string(spec.weights.size()) + " differs from n = " +
                        std::to_string(n));
    }
    spec.C = rational_field(l.at("C"), where + ".C");
    out.loops.push_back(std::move(spec));
  }

  if (doc.contains("local_model")) {
    const json& lm = doc.at("local_model");
    require_keys(lm, "local_model", {"rho", "delta", "r"}, {});
    out.local_model = LocalModelSection{real_field(lm.at("rho"), "local_model.rho"),
                                        real_field(lm.at("delta"), "local_model.delta"),
                                        real_field(lm.at("r"), "local_model.r")};
  }
  if (doc.contains("seed")) {
    const std::int64_t seed = int_field(doc.at("seed"), "seed");
    if (seed < 0) {
      throw SchemaError("seed: expected a non-negative integer");
    }
    out.seed = static_cast<std::uint64_t>(seed);
  }
  return out;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open manifest: " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("manifest is not valid JSON: " + std::string(e.what()));
  }
  return parse_manifest(doc);
}

}  // namespace blowup::cli
