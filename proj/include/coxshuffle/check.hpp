#pragma once

#include <string>
#include <vector>

namespace coxshuffle {

// One verified identity, as listed in verify reports.
struct Check {
  std::string name;
  std::string statement;  // formula in words
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace coxshuffle
