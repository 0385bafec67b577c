#include "polyalg/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace polyalg {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult& Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::nullopt, std::nullopt, std::move(detail)});
  return checks.back();
}

void Report::merge(const Report& other) {
  for (auto c : other.checks) {
    if (!other.suite.empty()) c.name = other.suite + "/" + c.name;
    checks.push_back(std::move(c));
  }
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (c.order) e["order"] = *c.order;
    e["first_mismatch"] = c.first_mismatch ? nlohmann::ordered_json(*c.first_mismatch) : nullptr;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(indent);
}

}  // namespace polyalg
