#include "melonic/greens.hpp"

#include <map>
#include <string>

#include "melonic/errors.hpp"
#include "melonic/quadrature.hpp"
#include "melonic/specialfn.hpp"

namespace melonic {

namespace {

using Key = std::vector<double>;

class ChainEvaluator {
 public:
  ChainEvaluator(const Coupling& coupling, bool memoize) : coupling_(coupling), memoize_(memoize) {}

  double operator()(const std::vector<Point3>& xs) {
    if (xs.size() == 1) return g2_exact(xs.front(), coupling_);
    if (!memoize_) return recurse(xs);

    Key key;
    key.reserve(3 * xs.size());
    for (const auto& p : xs) key.insert(key.end(), {p.x1(), p.x2(), p.x3()});
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const double value = recurse(xs);
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  double recurse(const std::vector<Point3>& xs) {
    const std::size_t k = xs.size();
    const Point3& first = xs[0];
    double sum = 0.0;
    for (std::size_t rho = 2; rho <= k; ++rho) {
      const Point3& pivot = xs[rho - 1];
      const std::vector<Point3> tail(xs.begin() + (rho - 1), xs.end());
      const std::vector<Point3> head(xs.begin(), xs.begin() + (rho - 1));
      std::vector<Point3> swapped = head;
      swapped[0] = Point3(pivot.x1(), first.x2(), first.x3());
      const double quotient = ((*this)(head) - (*this)(swapped)) /
                              (first.x1() * first.x1() - pivot.x1() * pivot.x1());
      sum += (*this)(tail) * quotient;
    }
    const Point3 mixed(first.x1(), xs[1].x2(), xs[1].x3());
    return 2.0 * coupling_.lambda() * g2_exact(mixed, coupling_) * sum;
  }

  const Coupling& coupling_;
  bool memoize_;
  std::map<Key, double> memo_;
};

}  // namespace

PointTuple::PointTuple(std::vector<Point3> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("a point tuple needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      for (int c = 0; c < 3; ++c) {
        if (points_[i][c] == points_[j][c]) {
          throw CoincidentCoordinates("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                      " share their colour-" + std::to_string(c + 1) + " coordinate");
        }
      }
    }
  }
}

double connected_2k(const PointTuple& points, const Coupling& coupling) {
  ChainEvaluator eval(coupling, true);
  return eval({points.points().begin(), points.points().end()});
}

double connected_2k_unmemoized(const PointTuple& points, const Coupling& coupling) {
  ChainEvaluator eval(coupling, false);
  return eval({points.points().begin(), points.points().end()});
}

double disconnected_4pt(const Point3&, const Point3&, const Coupling&) { return 0.0; }

double disconnected_4pt_sde_residual(const Point3& x, const Point3& y, const Coupling& coupling) {
  const double g2 = g2_exact(x, coupling);
  QuadOptions options;
  options.tail_check = false;
  const QuadResult inner = integrate_quarter_plane(
      [&](double q2, double q3) { return disconnected_4pt(Point3(x.x1(), q2, q3), y, coupling); }, options);
  const double rhs = -2.0 * coupling.lambda() * g2 * g2 * inner.value;
  return disconnected_4pt(x, y, coupling) - rhs;
}

bool disconnected_4pt_order_vanishes(int n) {
  if (n < 0) throw DomainError("perturbative order must be >= 0");
  // Order n of the right-hand side is a sum over a + b + c = n - 1 of
  // G2_a G2_b int G4_c, so it vanishes whenever every G4_c with c < n does.
  std::vector<bool> vanishes(n + 1);
  vanishes[0] = true;  // the only candidate graph at order 0 is disconnected
  for (int order = 1; order <= n; ++order) {
    bool all = true;
    for (int c = 0; c < order; ++c) all = all && vanishes[c];
    vanishes[order] = all;
  }
  return vanishes[n];
}

}  // namespace melonic
