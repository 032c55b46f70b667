#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace lshape::harness {

using Json = nlohmann::ordered_json;

/// One verified quantity: pass iff residual <= tolerance.
struct CheckResult {
  std::string check_name;
  Json inputs = Json::object();
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

inline CheckResult make_check(std::string name, Json inputs, double residual, double tolerance) {
  CheckResult c{std::move(name), std::move(inputs), residual, tolerance, false};
  c.pass = residual <= tolerance;
  return c;
}

/// A boolean property reported as residual 0 (holds) or 1 (fails).
inline CheckResult make_flag(std::string name, Json inputs, bool holds) {
  return make_check(std::move(name), std::move(inputs), holds ? 0.0 : 1.0, 0.0);
}

inline Json to_json(const CheckResult& c) {
  Json j;
  j["check_name"] = c.check_name;
  j["inputs"] = c.inputs;
  j["residual"] = c.residual;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  return j;
}

inline Json to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace lshape::harness
