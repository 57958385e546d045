#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gaudin/asymptotics.hpp"

namespace gaudin::verify {

enum class Relation { LessEqual, GreaterEqual, Less };

/// One measured quantity against a pinned threshold.
struct Check {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::LessEqual;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<Check> checks;
  std::vector<asym::ResidualFit> fits;
  double seconds = 0.0;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::vector<CriterionResult> criteria;
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  bool overall = false;
};

/// all, wienerhopf, specfun, constants, q2, energy, section5, limits.
const std::vector<std::string>& suite_names();

/// Runs the selected suites. UsageError for an unknown selector.
VerificationReport run(std::string_view selector);

std::string to_json(const VerificationReport& report);

}  // namespace gaudin::verify
