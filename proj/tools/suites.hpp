#pragma once

#include <string>
#include <vector>

#include "melonic/kinematics.hpp"

namespace melonic::cli {

struct Check {
  std::string name;
  bool passed = true;
  // Reported but never counted as a failure.
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  std::size_t failures() const;
};

SuiteReport verify_coeffs(int max_order);

SuiteReport verify_identities(int max_n);

struct SdeSuiteOptions {
  std::vector<double> lambdas;
  std::vector<Point3> points;
  bool numeric = false;
  double abs_tol = 1e-8;
};

constexpr double kAlgebraicThreshold = 1e-12;
constexpr double kNumericThreshold = 1e-6;

SdeSuiteOptions default_sde_options(bool numeric);
SuiteReport verify_sde(const SdeSuiteOptions& options);

SuiteReport verify_lambert();

}  // namespace melonic::cli
