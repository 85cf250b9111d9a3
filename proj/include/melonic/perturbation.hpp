#pragma once

#include <vector>

#include "melonic/combinatorics.hpp"
#include "melonic/kinematics.hpp"
#include "melonic/log_series.hpp"

namespace melonic {

/// G_0 = 1/(1+|x|^2): order 0, single term (1, 0, 0, 1).
LogSeries free_propagator();

/// Integrates a series evaluated at (x1, q2, q3) over q2, q3 in [0, inf).
///
/// A term (c, k, p, q) with q >= 2 becomes (c/(2(q-1)), k, p+q-1, 0) and the
/// order grows by one, since pi(1+x1^2)^(1-q)/(4(q-1)) = (pi/2) (1+x1^2)^(1-q)/(2(q-1)).
/// The bare free propagator is integrated with its value at x1 = 0
/// subtracted, giving -(pi/4) log(1+x1^2), i.e. (-1/2, 1, 0, 0) at order 1.
/// Any other term with fullpow <= 1 throws DivergentIntegral.
X1Series integrate_transverse(const LogSeries& s);

/// Memoized perturbative orders G_n of the one-pillow 2-point function,
///   G_n = -2 (1+|x|^2)^(-1) sum_{k<n} [int dq (G_k - delta_k0 G_0(q))] G_{n-k-1}.
/// Computed orders are immutable.
class Expansion {
 public:
  const LogSeries& order(int n);
  int computed_orders() const { return static_cast<int>(orders_.size()); }

 private:
  std::vector<LogSeries> orders_;
  std::vector<X1Series> tadpoles_;
};

LogSeries perturbative_order(int n);

/// The closed-form shape of G_n with a_{n,k,m} from a_closed:
///   L^n/(1+|x|^2)^(n+1)
///     + (-1)^n sum_k (-1)^k L^k sum_m a_{n,k,m} (1+x1^2)^(m-n) (1+|x|^2)^(-m-1)
/// with L = log(1+x1^2). Throws DomainError for n < 1.
LogSeries ansatz_order(int n);

/// Reads a_{n,k,m} back out of an order-n series of ansatz shape. Every valid
/// (k,m) slot appears in the result (zero when the term is absent). Throws
/// ShapeMismatch if a term fits no slot or the leading term is not exactly
/// log^n/(1+|x|^2)^(n+1).
CoeffRow extract_coefficients(const LogSeries& s);

/// sum_{n <= max_order} lambda^n G_n(x)
double eval_partial_sum(int max_order, const Point3& x, double lambda);
double eval_partial_sum(Expansion& expansion, int max_order, const Point3& x, double lambda);

/// G_0, G_1, G_2 of the model with all three pillow interactions, evaluated
/// from their closed forms. Orders above 2 throw DomainError.
double three_colour_low_order(int n, const Point3& x);

}  // namespace melonic
