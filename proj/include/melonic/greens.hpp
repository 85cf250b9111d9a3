#pragma once

#include <span>
#include <vector>

#include "melonic/kinematics.hpp"

namespace melonic {

/// Ordered external momenta X = (x^1, ..., x^k), k >= 1, with pairwise
/// distinct coordinates in every colour. Construction throws
/// CoincidentCoordinates otherwise.
class PointTuple {
 public:
  explicit PointTuple(std::vector<Point3> points);

  std::size_t size() const { return points_.size(); }
  const Point3& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point3> points() const { return points_; }

 private:
  std::vector<Point3> points_;
};

/// Connected 2k-point function of the melonic chain, from the recursion
///   G(X) = 2 lambda G2(x1^1, x2^2, x3^2)
///          * sum_{rho=2..k} G(x^rho..x^k)
///            * [G(x^1..x^(rho-1)) - G((x1^rho, x2^1, x3^1), x^2..x^(rho-1))]
///            / ((x1^1)^2 - (x1^rho)^2)
/// on top of the exact 2-point function (k = 1). Contiguous sub-tuples are
/// memoized for the duration of one call.
double connected_2k(const PointTuple& points, const Coupling& coupling);

/// Same recursion without a memo table.
double connected_2k_unmemoized(const PointTuple& points, const Coupling& coupling);

/// The 4-point function with disconnected boundary graph: identically zero at
/// leading order in N.
double disconnected_4pt(const Point3& x, const Point3& y, const Coupling& coupling);

/// LHS - RHS of G4(x,y) = -2 lambda G2(x)^2 int dq2 dq3 G4((x1,q2,q3), y)
/// evaluated on disconnected_4pt.
double disconnected_4pt_sde_residual(const Point3& x, const Point3& y, const Coupling& coupling);

/// Whether order lambda^n of the disconnected 4-point function vanishes,
/// by plugging power series of G2 and G4 into the equation above. Order 0 has
/// no connected Feynman graph; higher orders inherit from lower ones.
bool disconnected_4pt_order_vanishes(int n);

}  // namespace melonic
