#pragma once

#include <optional>
#include <string>
#include <vector>

namespace polyalg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::optional<int> order;                 // truncation order or size parameter
  std::optional<std::string> first_mismatch;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  CheckResult& add(std::string name, bool pass, std::string detail = {});
  void merge(const Report& other);
  // {"suite":..., "pass":..., "checks":[{"name","pass","order","first_mismatch","detail"}]}
  std::string to_json(int indent = 2) const;
};

}  // namespace polyalg
