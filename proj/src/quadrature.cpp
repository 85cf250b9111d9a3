#include "melonic/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "melonic/errors.hpp"
#include "melonic/specialfn.hpp"

namespace melonic {

namespace {

constexpr unsigned kRuleOrder = 8;
constexpr int kMaxDepth = 52;

struct Rule {
  std::array<double, kRuleOrder> nodes;    // on [-1, 1]
  std::array<double, kRuleOrder> weights;
};

const Rule& gauss_rule() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, kRuleOrder>;
    Rule r{};
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    constexpr unsigned half = kRuleOrder / 2;
    for (unsigned i = 0; i < half; ++i) {
      r.nodes[half - 1 - i] = -x[i];
      r.weights[half - 1 - i] = w[i];
      r.nodes[half + i] = x[i];
      r.weights[half + i] = w[i];
    }
    return r;
  }();
  return rule;
}

struct Panel {
  double u0, u1, v0, v1;
  int depth;
  double coarse;                  // this panel's own rule
  std::array<double, 4> children; // rule on each quadrant
  double fine() const { return children[0] + children[1] + children[2] + children[3]; }
  double error() const { return std::abs(coarse - fine()); }
};

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const { return a.error() < b.error(); }
};

class Integrator {
 public:
  Integrator(const QuarterPlaneIntegrand& f, const QuadOptions& opt) : f_(f), opt_(opt) {}

  QuadResult run() {
    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    std::vector<Panel> frozen;
    queue.push(make_panel(0.0, 1.0, 0.0, 1.0, 0, rule(0.0, 1.0, 0.0, 1.0)));

    double error = queue.top().error();
    while (error > opt_.abs_tol && evaluations_ < opt_.max_evaluations && !queue.empty()) {
      Panel worst = queue.top();
      queue.pop();
      if (worst.depth >= kMaxDepth) {
        frozen.push_back(worst);
        continue;
      }
      const double um = 0.5 * (worst.u0 + worst.u1);
      const double vm = 0.5 * (worst.v0 + worst.v1);
      const int d = worst.depth + 1;
      const std::array<Panel, 4> quads{make_panel(worst.u0, um, worst.v0, vm, d, worst.children[0]),
                                       make_panel(um, worst.u1, worst.v0, vm, d, worst.children[1]),
                                       make_panel(worst.u0, um, vm, worst.v1, d, worst.children[2]),
                                       make_panel(um, worst.u1, vm, worst.v1, d, worst.children[3])};
      error -= worst.error();
      for (const auto& q : quads) {
        error += q.error();
        queue.push(q);
      }
      // The running sum drifts under repeated subtraction.
      if (++splits_ % 1024 == 0) error = total_error(queue, frozen);
    }

    // Fixed summation order: heap storage order, then frozen panels.
    auto leaves = std::move(frozen);
    while (!queue.empty()) {
      leaves.push_back(queue.top());
      queue.pop();
    }
    QuadResult result;
    for (const auto& p : leaves) {
      result.value += p.fine();
      result.error_estimate += p.error();
    }
    result.evaluations = evaluations_;
    result.converged = std::isfinite(result.value) && result.error_estimate <= opt_.abs_tol;
    return result;
  }

 private:
  static double total_error(std::priority_queue<Panel, std::vector<Panel>, ByError> queue,
                            const std::vector<Panel>& frozen) {
    double sum = 0.0;
    for (const auto& p : frozen) sum += p.error();
    while (!queue.empty()) {
      sum += queue.top().error();
      queue.pop();
    }
    return sum;
  }

  Panel make_panel(double u0, double u1, double v0, double v1, int depth, double coarse) {
    const double um = 0.5 * (u0 + u1);
    const double vm = 0.5 * (v0 + v1);
    Panel p{u0, u1, v0, v1, depth, coarse,
            {rule(u0, um, v0, vm), rule(um, u1, v0, vm), rule(u0, um, vm, v1), rule(um, u1, vm, v1)}};
    return p;
  }

  // q(u) and dq/du for the configured half-line map.
  void map(double u, double& q, double& jac) const {
    const double s = opt_.scale;
    const double one_minus = 1.0 - u;
    if (opt_.map == HalfLineMap::Rational) {
      q = s * u / one_minus;
      jac = s / (one_minus * one_minus);
    } else {
      q = -s * std::log1p(-u);
      jac = s / one_minus;
    }
  }

  double rule(double u0, double u1, double v0, double v1) {
    const Rule& r = gauss_rule();
    const double hu = 0.5 * (u1 - u0);
    const double hv = 0.5 * (v1 - v0);
    const double cu = 0.5 * (u0 + u1);
    const double cv = 0.5 * (v0 + v1);
    std::array<double, kRuleOrder> qv{}, jv{};
    for (unsigned j = 0; j < kRuleOrder; ++j) map(cv + hv * r.nodes[j], qv[j], jv[j]);
    double sum = 0.0;
    for (unsigned i = 0; i < kRuleOrder; ++i) {
      double qu, ju;
      map(cu + hu * r.nodes[i], qu, ju);
      double row = 0.0;
      for (unsigned j = 0; j < kRuleOrder; ++j) row += r.weights[j] * jv[j] * f_(qu, qv[j]);
      sum += r.weights[i] * ju * row;
    }
    evaluations_ += kRuleOrder * kRuleOrder;
    return sum * hu * hv;
  }

  const QuarterPlaneIntegrand& f_;
  const QuadOptions& opt_;
  std::size_t evaluations_ = 0;
  std::size_t splits_ = 0;
};

QuadResult integrate_once(const QuarterPlaneIntegrand& f, const QuadOptions& options) {
  return Integrator(f, options).run();
}

}  // namespace

QuadResult integrate_quarter_plane(const QuarterPlaneIntegrand& f, const QuadOptions& options) {
  if (!(options.abs_tol > 0.0)) throw DomainError("quadrature tolerance must be > 0");
  if (!(options.scale > 0.0)) throw DomainError("quadrature map scale must be > 0");

  QuadResult first = integrate_once(f, options);
  if (!options.tail_check) return first;

  QuadOptions doubled = options;
  doubled.scale = 2.0 * options.scale;
  const QuadResult second = integrate_once(f, doubled);

  QuadResult out = first;
  out.evaluations = first.evaluations + second.evaluations;
  out.error_estimate = std::max({first.error_estimate, second.error_estimate, std::abs(first.value - second.value)});
  out.converged = first.converged && second.converged && out.error_estimate <= options.abs_tol;
  return out;
}

QuadResult integrate_quarter_plane(const QuarterPlaneIntegrand& f, double abs_tol) {
  QuadOptions options;
  options.abs_tol = abs_tol;
  return integrate_quarter_plane(f, options);
}

namespace {

// int dq [ 1/(A + |q|^2) - 1/(1 + |q|^2) ] with A = 1 + x1^2 + g, written as
// a single fraction so the tail carries no cancellation.
QuadResult subtracted_tadpole(double x1, const Coupling& coupling, double abs_tol) {
  const double shift = x1 * x1 + g_shift(x1, coupling);  // A - 1
  const double a = 1.0 + shift;
  auto integrand = [shift, a](double q2, double q3) {
    const double s = q2 * q2 + q3 * q3;
    return -shift / ((a + s) * (1.0 + s));
  };
  QuadResult r = integrate_quarter_plane(integrand, abs_tol);
  if (!r.converged) throw NotConverged("subtracted tadpole quadrature did not converge", r);
  return r;
}

}  // namespace

double sde_residual_numeric(const Point3& x, const Coupling& coupling, double abs_tol) {
  const QuadResult tadpole = subtracted_tadpole(x.x1(), coupling, abs_tol);
  const double rhs = 1.0 / (1.0 + x.norm2() + 2.0 * coupling.lambda() * tadpole.value);
  return g2_exact(x, coupling) - rhs;
}

double integrated_identity_residual(double x1, const Coupling& coupling, double abs_tol) {
  const QuadResult tadpole = subtracted_tadpole(x1, coupling, abs_tol);
  const double closed = -std::numbers::pi / 4.0 * std::log(1.0 + x1 * x1 + g_shift(x1, coupling));
  return tadpole.value - closed;
}

}  // namespace melonic
