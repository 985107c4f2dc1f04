#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matrep::app {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string measured;
  std::string tolerance;
  bool pass = false;
};

struct AcceptanceOptions {
  /// Relative change applied to the off-diagonal r^2 coefficients before the
  /// r^2 diagnostics run. Nonzero values exist to prove the suite can fail.
  double r2_perturbation = 0.0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options = {});

/// One line per criterion, then the failing ids if any.
void print_report(std::ostream &out, const std::vector<CriterionResult> &results);

bool all_passed(const std::vector<CriterionResult> &results);

}  // namespace matrep::app
