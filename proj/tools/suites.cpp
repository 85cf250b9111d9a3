#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "melonic/combinatorics.hpp"
#include "melonic/errors.hpp"
#include "melonic/perturbation.hpp"
#include "melonic/quadrature.hpp"
#include "melonic/specialfn.hpp"

namespace melonic::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sides(const IdentitySides& s) { return to_string(s.lhs) + " vs " + to_string(s.rhs); }

std::string at(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::string at(int n, int k, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
}

// Tracks the worst relative error over a grid.
struct Worst {
  double error = 0.0;
  double where = 0.0;
  void update(double e, double x) {
    if (!(e <= error)) {
      error = e;
      where = x;
    }
  }
  Check check(std::string name, double limit) const {
    return {std::move(name), error <= limit, false, "max error " + num(error) + " at " + num(where)};
  }
};

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.informational && !c.passed; });
}

SuiteReport verify_coeffs(int max_order) {
  if (max_order < 1) throw DomainError("--max-order must be >= 1");
  SuiteReport report{"coeffs", {}};
  Expansion expansion;
  const bool have_table = max_order >= 2;
  const CoeffTable recur = have_table ? CoeffTable::from_recurrences(max_order) : CoeffTable(2);
  for (int n = 1; n <= max_order; ++n) {
    const LogSeries& generated = expansion.order(n);
    report.checks.push_back({"recursion = ansatz, n=" + std::to_string(n), generated == ansatz_order(n), false,
                             std::to_string(generated.size()) + " terms"});
    if (n < 2) continue;
    Check c{"extracted = closed = recurrence, n=" + std::to_string(n), true, false, ""};
    try {
      const CoeffRow extracted = extract_coefficients(generated);
      for (const auto& [km, value] : extracted) {
        const auto [k, m] = km;
        const Rational closed = a_closed(n, k, m);
        const Rational& rec = recur.at(n, k, m);
        if (value != closed || rec != closed) {
          c.passed = false;
          c.detail += at(n, k, m) + ": " + to_string(value) + ", " + to_string(closed) + ", " + to_string(rec) + "; ";
        }
      }
      if (c.passed) c.detail = std::to_string(extracted.size()) + " coefficients";
    } catch (const ShapeMismatch& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

SuiteReport verify_identities(int max_n) {
  if (max_n < 1) throw DomainError("--max-n must be >= 1");
  SuiteReport report{"identities", {}};

  for (int n = 1; n <= max_n; ++n) {
    Check c{"harmonic, n=" + std::to_string(n), true, false, ""};
    for (int k = 1; k <= n; ++k) {
      const IdentitySides s = check_identity_harmonic(n, k);
      if (!s.holds()) {
        c.passed = false;
        c.detail += at(n, k) + ": " + sides(s) + "; ";
      }
    }
    report.checks.push_back(std::move(c));
  }

  for (int n = 4; n <= max_n; ++n) {
    Check corrected{"Stirling sum, n=" + std::to_string(n), true, false, ""};
    for (int k = 1; k <= n - 3; ++k) {
      const StirlingSumCheck s = check_identity_stirling_sum(n, k);
      if (!s.corrected.holds()) {
        corrected.passed = false;
        corrected.detail += at(n, k) + ": " + sides(s.corrected) + "; ";
      }
      if (!s.variant.holds()) {
        report.checks.push_back({"Stirling sum, 1/(n-l)! variant " + at(n, k), false, true, sides(s.variant)});
      }
    }
    report.checks.push_back(std::move(corrected));
  }

  for (int n = 5; n <= max_n; ++n) {
    Check rec{"general recurrence in Stirling form, n=" + std::to_string(n), true, false, ""};
    Check expanded{"general recurrence, expanded Stirling sums, n=" + std::to_string(n), true, true, ""};
    for (int k = 2; k <= n - 3; ++k) {
      for (int m = 2; m <= k; ++m) {
        const BigStirlingCheck s = check_identity_big_stirling(n, k, m);
        if (!s.recurrence.holds()) {
          rec.passed = false;
          rec.detail += at(n, k, m) + ": " + sides(s.recurrence) + "; ";
        }
        if (!s.expanded.holds()) {
          expanded.passed = false;
          expanded.detail += at(n, k, m) + ": " + sides(s.expanded) + "; ";
        }
      }
    }
    report.checks.push_back(std::move(rec));
    if (!expanded.passed) report.checks.push_back(std::move(expanded));
  }
  return report;
}

SdeSuiteOptions default_sde_options(bool numeric) {
  SdeSuiteOptions o;
  o.numeric = numeric;
  if (numeric) {
    o.lambdas = {0.1, 0.5, 1.0};
    o.points = {Point3(0.5, 0.5, 0.5), Point3(1, 0.5, 2), Point3(2, 1, 1)};
  } else {
    o.lambdas = {0.01, 0.1, 1.0, 10.0};
    for (double x1 : {0.0, 0.5, 1.0, 2.0, 5.0}) o.points.emplace_back(x1, 0.0, 0.0);
  }
  return o;
}

SuiteReport verify_sde(const SdeSuiteOptions& options) {
  if (!(options.abs_tol > 0.0)) throw DomainError("--tol must be > 0");
  SuiteReport report{"sde", {}};
  for (double lambda : options.lambdas) {
    const Coupling coupling(lambda);
    for (const Point3& x : options.points) {
      const std::string where = "lambda=" + num(lambda) + " x=(" + num(x.x1()) + "," + num(x.x2()) + "," +
                                num(x.x3()) + ")";
      const double r = sde_residual_algebraic(x.x1(), coupling);
      report.checks.push_back({"algebraic " + where, std::abs(r) < kAlgebraicThreshold, false, "residual " + num(r)});
      if (!options.numeric) continue;
      try {
        const double rn = sde_residual_numeric(x, coupling, options.abs_tol);
        report.checks.push_back({"numeric " + where, std::abs(rn) < kNumericThreshold, false, "residual " + num(rn)});
        const double ri = integrated_identity_residual(x.x1(), coupling, options.abs_tol);
        report.checks.push_back(
            {"integrated " + where, std::abs(ri) < kNumericThreshold, false, "residual " + num(ri)});
      } catch (const NotConverged& e) {
        report.checks.push_back({"numeric " + where, false, false, e.what()});
      }
    }
  }
  return report;
}

SuiteReport verify_lambert() {
  SuiteReport report{"lambert", {}};
  const double lo = -0.99 / std::numbers::e;

  Worst w0_args;
  for (int i = 0; i <= 400; ++i) {
    const double y = lo + (0.0 - lo) * i / 400.0;
    const double w = lambert_w0(y);
    w0_args.update(std::abs(lambert_w0(w * std::exp(w)) - w) / (1.0 + std::abs(w)), y);
  }
  for (int i = 0; i <= 800; ++i) {
    const double y = std::pow(10.0, -12.0 + 20.0 * i / 800.0);
    const double w = lambert_w0(y);
    w0_args.update(std::abs(w * std::exp(w) - y) / y, y);
  }
  report.checks.push_back(w0_args.check("W0 round trip, argument grid [-0.99/e, 1e8]", 1e-13));

  Worst w0_values;
  for (int i = 0; i <= 1000; ++i) {
    const double w = -0.99 + (700.0 + 0.99) * std::pow(i / 1000.0, 2);
    w0_values.update(std::abs(lambert_w0(w * std::exp(w)) - w) / (1.0 + std::abs(w)), w);
  }
  report.checks.push_back(w0_values.check("W0 round trip, value grid [-0.99, 700]", 1e-13));

  Worst wm1;
  for (int i = 1; i <= 500; ++i) {
    const double w = -1.01 - 700.0 * std::pow(i / 500.0, 2);
    wm1.update(std::abs(lambert_wm1(w * std::exp(w)) - w) / (1.0 + std::abs(w)), w);
  }
  report.checks.push_back(wm1.check("W-1 round trip, value grid [-701, -1.01]", 1e-13));

  Worst omega;
  for (int i = 0; i <= 2000; ++i) {
    const double s = i / 2000.0;
    const double t = -10.0 + (1e6 + 10.0) * s * s * s;
    const double w = wright_omega(t);
    omega.update(std::abs(w + std::log(w) - t) / (1.0 + std::abs(t)), t);
  }
  report.checks.push_back(omega.check("omega + log omega = t, t in [-10, 1e6]", 1e-12));
  return report;
}

}  // namespace melonic::cli
