#include "melonic/specialfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "melonic/errors.hpp"

namespace melonic {

namespace {

constexpr double kBranchPoint = -0.36787944117144233;  // -1/e rounded to nearest
constexpr int kMaxIterations = 64;

// Series of W about the branch point in p = +-sqrt(2(e y + 1)).
double branch_point_series(double p) {
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

double branch_parameter(double y) {
  const double t = 2.0 * (std::numbers::e * y + 1.0);
  return t > 0.0 ? std::sqrt(t) : 0.0;
}

// Halley on f(w) = w e^w - y.
double halley(double y, double w) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - y;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double y) {
  if (std::isnan(y) || y < kBranchPoint) throw DomainError("lambert_w0 needs y >= -1/e");
  if (y == kBranchPoint) return -1.0;
  if (y == 0.0) return 0.0;
  if (std::isinf(y)) return y;
  // Large arguments: w + log w = log y is well conditioned and never overflows.
  if (y > std::numbers::e) return wright_omega(std::log(y));

  double w;
  const double p = branch_parameter(y);
  if (p < 1e-3) return branch_point_series(p);
  if (y < -0.25) {
    w = branch_point_series(p);
  } else if (std::abs(y) < 0.25) {
    w = y * (1.0 - y * (1.0 - 1.5 * y));
  } else {
    w = std::log1p(y) * (1.0 - std::log1p(std::log1p(y)) / (2.0 + std::log1p(y)));
  }
  return halley(y, w);
}

double lambert_wm1(double y) {
  if (std::isnan(y) || y < kBranchPoint || y >= 0.0) throw DomainError("lambert_wm1 needs -1/e <= y < 0");
  if (y == kBranchPoint) return -1.0;
  const double p = branch_parameter(y);
  if (p < 1e-3) return branch_point_series(-p);
  double w;
  if (y < -0.25) {
    w = branch_point_series(-p);
  } else {
    const double l1 = std::log(-y);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  return halley(y, w);
}

double wright_omega(double t) {
  if (std::isnan(t)) throw DomainError("wright_omega needs a finite argument");
  if (std::isinf(t)) return t > 0 ? t : 0.0;
  if (t < -40.0) {
    // omega = e^(t - omega) and omega < 1e-17 here.
    const double e = std::exp(t);
    return e * (1.0 - e);
  }

  double w;
  if (t > 2.0) {
    const double lt = std::log(t);
    w = t - lt + lt / t;
  } else if (t > -2.0) {
    w = 0.5671432904097838 + 0.6 * (t * (1.0 + 0.08 * t));
    if (w <= 0.0) w = std::exp(t);
  } else {
    w = std::exp(t);
  }

  // Fritsch-Shafer-Crowley iteration on w + log w - t.
  for (int i = 0; i < kMaxIterations; ++i) {
    const double r = t - w - std::log(w);
    const double wp1 = 1.0 + w;
    const double s = wp1 * (wp1 + 2.0 * r / 3.0);
    const double next = w * (1.0 + r / wp1 * (s - r / 2.0) / (s - r));
    const double change = next - w;
    w = next > 0.0 ? next : w / 2.0;
    if (std::abs(change) <= 2.0 * std::numeric_limits<double>::epsilon() * w) break;
  }
  return w;
}

double g_shift(double x1, const Coupling& coupling) {
  if (!std::isfinite(x1) || x1 < 0.0) throw DomainError("g_shift needs finite x1 >= 0");
  if (x1 == 0.0) return 0.0;
  const double z = coupling.z();
  const double a = 1.0 + x1 * x1;
  return z * wright_omega(-std::log(z) + a / z) - a;
}

double g2_exact(const Point3& x, const Coupling& coupling) {
  const double denominator = 1.0 + x.norm2() + g_shift(x.x1(), coupling);
  if (!(denominator > 0.0)) throw EvaluationDomain("1 + |x|^2 + g is not positive");
  return 1.0 / denominator;
}

double sde_residual_algebraic(double x1, const Coupling& coupling) {
  const double g = g_shift(x1, coupling);
  return g + coupling.z() * std::log(1.0 + x1 * x1 + g);
}

}  // namespace melonic
