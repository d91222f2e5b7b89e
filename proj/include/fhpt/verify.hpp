#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fhpt/model.hpp"

namespace fhpt::verify {

struct Check {
  std::string name;
  /// The identity being checked, written as a formula.
  std::string identity;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  model::PotentialParams params;
  int nmax = 10;
  model::IntervalMode interval = model::IntervalMode::kFull;
  int quad_order = 200;
  std::complex<double> z{1.5, 0.0};
  /// Replaces every per-check tolerance when set.
  std::optional<double> tol;
};

/// Runs every identity check; throws DomainError on invalid parameters.
std::vector<Check> run_suite(const SuiteOptions& options);

bool all_pass(const std::vector<Check>& checks);

}  // namespace fhpt::verify
