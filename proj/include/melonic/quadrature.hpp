#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "melonic/kinematics.hpp"

namespace melonic {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Raised by the residual operations when the underlying quadrature did not
/// reach its tolerance; the partial result is attached.
class NotConverged : public std::runtime_error {
 public:
  NotConverged(const std::string& what, QuadResult result)
      : std::runtime_error(what), result_(result) {}
  const QuadResult& result() const { return result_; }

 private:
  QuadResult result_;
};

/// How [0, inf) is compactified onto [0, 1).
enum class HalfLineMap {
  Rational,     ///< q = s u / (1 - u)
  Exponential,  ///< q = -s log(1 - u); only for integrands with exponential decay
};

struct QuadOptions {
  double abs_tol = 1e-8;
  std::size_t max_evaluations = 10'000'000;
  HalfLineMap map = HalfLineMap::Rational;
  double scale = 1.0;
  /// Repeat the integral with the map scale doubled and fold the
  /// disagreement into the error estimate.
  bool tail_check = true;
};

using QuarterPlaneIntegrand = std::function<double(double q2, double q3)>;

/// Integral of f over [0, inf)^2 by globally adaptive product Gauss-Legendre
/// panels on the unit square. Panels are split dyadically; a panel's error is
/// the difference between its own rule and the sum over its four children.
/// Never throws on non-convergence: converged is false instead.
QuadResult integrate_quarter_plane(const QuarterPlaneIntegrand& f, const QuadOptions& options);
QuadResult integrate_quarter_plane(const QuarterPlaneIntegrand& f, double abs_tol);

/// G(x) - (1 + |x|^2 + 2 lambda I)^(-1), where I is the quadrature of
/// G(x1, q2, q3) - 1/(1 + q2^2 + q3^2). Throws NotConverged.
double sde_residual_numeric(const Point3& x, const Coupling& coupling, double abs_tol);

/// Quadrature of G(x1, q2, q3) - 1/(1 + |q|^2) minus -(pi/4) log(1 + x1^2 + g).
/// Throws NotConverged.
double integrated_identity_residual(double x1, const Coupling& coupling, double abs_tol);

}  // namespace melonic
