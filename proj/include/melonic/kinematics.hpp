#pragma once

namespace melonic {

/// External momentum x = (x1, x2, x3); components are nonnegative and finite.
class Point3 {
 public:
  Point3(double x1, double x2, double x3);

  double x1() const { return c_[0]; }
  double x2() const { return c_[1]; }
  double x3() const { return c_[2]; }
  double operator[](int colour) const { return c_[colour]; }

  /// |x|^2 = x1^2 + x2^2 + x3^2
  double norm2() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2]; }

  friend bool operator==(const Point3&, const Point3&) = default;

 private:
  double c_[3];
};

/// Positive real coupling lambda, with z = (pi/2) lambda.
class Coupling {
 public:
  explicit Coupling(double lambda);

  double lambda() const { return lambda_; }
  double z() const { return z_; }

 private:
  double lambda_;
  double z_;
};

/// 1/(1+|x|^2)
inline double free_propagator_value(const Point3& x) { return 1.0 / (1.0 + x.norm2()); }

}  // namespace melonic
