#include "melonic/kinematics.hpp"

#include <cmath>
#include <numbers>

#include "melonic/errors.hpp"

namespace melonic {

Point3::Point3(double x1, double x2, double x3) : c_{x1, x2, x3} {
  for (double v : c_) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("momentum components must be finite and >= 0");
  }
}

Coupling::Coupling(double lambda) : lambda_(lambda), z_(std::numbers::pi / 2.0 * lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("coupling lambda must be finite and > 0");
}

}  // namespace melonic
