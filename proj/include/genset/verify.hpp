#pragma once

#include <string>
#include <vector>

#include "genset/equiv.hpp"

namespace genset {

struct SuiteCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool ok() const;
};

std::vector<std::string> suite_names();
// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const AnalysisOptions& options = {});

}  // namespace genset
