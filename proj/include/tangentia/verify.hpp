#pragma once

#include <string>
#include <vector>

namespace tangentia {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string anchor;  // which published quantity the check reproduces
  bool passed = false;
  std::string detail;
};

/// Runs every end-to-end check in order; each result is independent.
std::vector<CheckResult> verify_all();

}  // namespace tangentia
