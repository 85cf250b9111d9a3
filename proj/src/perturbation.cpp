#include "melonic/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "melonic/errors.hpp"

namespace melonic {

namespace {

bool is_bare_free_propagator(const LogSeries& s) {
  return s.order() == 0 && s == free_propagator();
}

int sign_of_power(int e) { return e % 2 == 0 ? 1 : -1; }

std::string describe(const LogTerm& t) {
  return "(" + to_string(t.coeff) + ", " + std::to_string(t.logpow) + ", " + std::to_string(t.x1pow) +
         ", " + std::to_string(t.fullpow) + ")";
}

// (x log((1+x^2)/4) + 2 atan x) / (2 (x^3 + x)); removable 0/0 at x = 0.
double three_colour_tower(double x) {
  if (x < 1e-5) return (1.0 - std::numbers::ln2) + x * x * (std::numbers::ln2 - 5.0 / 6.0);
  return (x * std::log((x * x + 1.0) / 4.0) + 2.0 * std::atan(x)) / (2.0 * (x * x * x + x));
}

}  // namespace

LogSeries free_propagator() { return LogSeries(0, {{Rational(1), 0, 0, 1}}); }

X1Series integrate_transverse(const LogSeries& s) {
  if (is_bare_free_propagator(s)) {
    return X1Series(LogSeries(1, {{Rational(-1, 2), 1, 0, 0}}));
  }
  std::vector<LogTerm> out;
  out.reserve(s.size());
  for (const auto& t : s.terms()) {
    if (t.fullpow <= 1) {
      throw DivergentIntegral("transverse integral of term " + describe(t) + " at order " +
                              std::to_string(s.order()) + " diverges");
    }
    out.push_back({t.coeff / (2 * (t.fullpow - 1)), t.logpow, t.x1pow + t.fullpow - 1, 0});
  }
  return X1Series(LogSeries(s.order() + 1, std::move(out)));
}

const LogSeries& Expansion::order(int n) {
  if (n < 0) throw DomainError("perturbative order must be >= 0");
  if (orders_.empty()) {
    orders_.push_back(free_propagator());
    tadpoles_.push_back(integrate_transverse(orders_.front()));
  }
  while (static_cast<int>(orders_.size()) <= n) {
    const int next = static_cast<int>(orders_.size());
    LogSeries sum(next, {});
    for (int k = 0; k < next; ++k) {
      sum = sum + tadpoles_[k].series() * orders_[next - k - 1];
    }
    orders_.push_back(sum.scaled(Rational(-2)).with_extra_fullpow(1));
    tadpoles_.push_back(integrate_transverse(orders_.back()));
  }
  return orders_[n];
}

LogSeries perturbative_order(int n) {
  Expansion expansion;
  return expansion.order(n);
}

LogSeries ansatz_order(int n) {
  if (n < 1) throw DomainError("ansatz is defined for n >= 1");
  std::vector<LogTerm> terms{{Rational(1), n, 0, n + 1}};
  for (int k = 1; k <= n - 1; ++k) {
    for (int m = 1; m <= k; ++m) {
      terms.push_back({sign_of_power(n + k) * a_closed(n, k, m), k, n - m, m + 1});
    }
  }
  return LogSeries(n, std::move(terms));
}

CoeffRow extract_coefficients(const LogSeries& s) {
  const int n = s.order();
  if (n < 1) throw ShapeMismatch("ansatz shape needs order >= 1");

  CoeffRow row;
  for (int k = 1; k <= n - 1; ++k) {
    for (int m = 1; m <= k; ++m) row[{k, m}] = 0;
  }
  bool leading = false;
  for (const auto& t : s.terms()) {
    if (t.logpow == n && t.x1pow == 0 && t.fullpow == n + 1) {
      if (t.coeff != 1) throw ShapeMismatch("leading term " + describe(t) + " must have coefficient 1");
      leading = true;
      continue;
    }
    const int k = t.logpow;
    const int m = t.fullpow - 1;
    if (!is_coefficient_index(n, k, m) || t.x1pow != n - m) {
      throw ShapeMismatch("term " + describe(t) + " fits no ansatz slot at order " + std::to_string(n));
    }
    row[{k, m}] = sign_of_power(n + k) * t.coeff;
  }
  if (!leading) throw ShapeMismatch("missing leading term at order " + std::to_string(n));
  return row;
}

double eval_partial_sum(Expansion& expansion, int max_order, const Point3& x, double lambda) {
  if (max_order < 0) throw DomainError("partial sum order must be >= 0");
  double sum = 0.0;
  double power = 1.0;
  for (int n = 0; n <= max_order; ++n) {
    sum += power * eval_series(expansion.order(n), x);
    power *= lambda;
  }
  return sum;
}

double eval_partial_sum(int max_order, const Point3& x, double lambda) {
  Expansion expansion;
  return eval_partial_sum(expansion, max_order, x, lambda);
}

double three_colour_low_order(int n, const Point3& x) {
  constexpr double pi = std::numbers::pi;
  const double full = 1.0 + x.norm2();
  if (n == 0) return 1.0 / full;

  double logs[3];
  for (int c = 0; c < 3; ++c) logs[c] = std::log1p(x[c] * x[c]);
  const double log_sum = logs[0] + logs[1] + logs[2];

  if (n == 1) return pi / (2.0 * full * full) * log_sum;
  if (n == 2) {
    double single = 0.0;
    double tower = 0.0;
    for (int c = 0; c < 3; ++c) {
      single += pi * logs[c] / (2.0 * (x[c] * x[c] + 1.0));
      tower += three_colour_tower(x[c]);
    }
    const double doubled = pi * pi * log_sum * log_sum / (4.0 * full);
    return (doubled - single - pi * pi * tower) / (full * full);
  }
  throw DomainError("three-colour closed forms exist only for n <= 2");
}

}  // namespace melonic
