#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "melonic/combinatorics.hpp"
#include "melonic/errors.hpp"
#include "melonic/greens.hpp"
#include "melonic/perturbation.hpp"
#include "melonic/quadrature.hpp"
#include "melonic/specialfn.hpp"
#include "suites.hpp"

namespace melonic::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Point3 to_point(const std::vector<double>& v, const std::string& flag) {
  if (v.size() != 3) throw UsageError(flag + " expects three comma-separated components");
  return Point3(v[0], v[1], v[2]);
}

struct Common {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output", c.output, "Write to PATH instead of standard output");
}

// Sends text to --output or the given stream.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw UsageError("cannot open " + c.output + " for writing");
  file << text;
}

struct Record {
  double lambda;
  Point3 x;
  double g;
  double g2;
  double free;
  double residual;
};

Record evaluate(double lambda, const Point3& x) {
  const Coupling coupling(lambda);
  return {lambda,
          x,
          g_shift(x.x1(), coupling),
          g2_exact(x, coupling),
          free_propagator_value(x),
          sde_residual_algebraic(x.x1(), coupling)};
}

constexpr const char* kRecordHeader = "lambda,x1,x2,x3,g,G2,free,residual_algebraic\n";

std::string csv_row(const Record& r) {
  return num(r.lambda) + "," + num(r.x.x1()) + "," + num(r.x.x2()) + "," + num(r.x.x3()) + "," + num(r.g) + "," +
         num(r.g2) + "," + num(r.free) + "," + num(r.residual) + "\n";
}

json to_json(const Record& r) {
  return json{{"lambda", r.lambda}, {"x", {r.x.x1(), r.x.x2(), r.x.x3()}}, {"g", r.g},
              {"G2", r.g2},         {"free", r.free},                     {"residual_algebraic", r.residual}};
}

std::string render_records(const std::vector<Record>& records, const Common& c, bool single) {
  if (c.format == "csv") {
    std::string text = kRecordHeader;
    for (const auto& r : records) text += csv_row(r);
    return text;
  }
  if (single) return to_json(records.front()).dump(2) + "\n";
  json array = json::array();
  for (const auto& r : records) array.push_back(to_json(r));
  return array.dump(2) + "\n";
}

std::string render_series(const LogSeries& s, const Common& c) {
  if (c.format == "csv") {
    std::string text = "order,prefactor_pi_over_2_pow,coeff,logpow,x1pow,fullpow\n";
    for (const auto& t : s.terms()) {
      text += std::to_string(s.order()) + "," + std::to_string(s.order()) + "," + to_string(t.coeff) + "," +
              std::to_string(t.logpow) + "," + std::to_string(t.x1pow) + "," + std::to_string(t.fullpow) + "\n";
    }
    return text;
  }
  json terms = json::array();
  for (const auto& t : s.terms()) {
    terms.push_back(
        {{"coeff", to_string(t.coeff)}, {"logpow", t.logpow}, {"x1pow", t.x1pow}, {"fullpow", t.fullpow}});
  }
  json doc{{"order", s.order()}, {"prefactor_pi_over_2_pow", s.order()}, {"terms", terms}};
  return doc.dump(2) + "\n";
}

std::string render_coeffs(int max_order, const Common& c) {
  const CoeffTable closed = CoeffTable::closed_form(max_order);
  const CoeffTable recur = CoeffTable::from_recurrences(max_order);
  if (c.format == "csv") {
    std::string text = "n,k,m,a_closed,a_recur\n";
    for (const auto& [idx, value] : closed) {
      text += std::to_string(idx.n) + "," + std::to_string(idx.k) + "," + std::to_string(idx.m) + "," +
              to_string(value) + "," + to_string(recur.at(idx.n, idx.k, idx.m)) + "\n";
    }
    return text;
  }
  json rows = json::array();
  for (const auto& [idx, value] : closed) {
    rows.push_back({{"n", idx.n},
                    {"k", idx.k},
                    {"m", idx.m},
                    {"a_closed", to_string(value)},
                    {"a_recur", to_string(recur.at(idx.n, idx.k, idx.m))}});
  }
  return rows.dump(2) + "\n";
}

std::string render_reports(const std::vector<SuiteReport>& reports, const std::optional<std::string>& format) {
  if (!format) {
    std::string text;
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
        text += std::string(tag) + " [" + r.suite + "] " + c.name;
        if (!c.detail.empty()) text += ": " + c.detail;
        text += "\n";
      }
      text += r.suite + ": " + (r.passed() ? "passed" : std::to_string(r.failures()) + " failure(s)") + "\n";
    }
    return text;
  }
  if (*format == "csv") {
    std::string text = "suite,check,status,detail\n";
    auto quote = [](const std::string& s) {
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        const char* tag = c.informational ? "info" : (c.passed ? "pass" : "fail");
        text += r.suite + "," + quote(c.name) + "," + tag + "," + quote(c.detail) + "\n";
      }
    }
    return text;
  }
  json doc = json::array();
  for (const auto& r : reports) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"status", c.informational ? "info" : (c.passed ? "pass" : "fail")},
                        {"detail", c.detail}});
    }
    doc.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 2-point function and perturbative series of a melonic quartic tensor field theory"};
  app.require_subcommand(1);
  std::function<int()> action;

  // eval
  Common eval_common;
  double eval_lambda = 0.0;
  std::vector<double> eval_x;
  auto* eval = app.add_subcommand("eval", "Evaluate the exact 2-point function at one point");
  eval->add_option("--lambda", eval_lambda, "Coupling")->required();
  eval->add_option("--x", eval_x, "Momentum x1,x2,x3")->delimiter(',')->required();
  add_common(eval, eval_common, "json");
  eval->callback([&] {
    action = [&] {
      const Record r = evaluate(eval_lambda, to_point(eval_x, "--x"));
      emit(eval_common, out, render_records({r}, eval_common, true));
      return int(kOk);
    };
  });

  // series
  Common series_common;
  int series_order = 0;
  auto* series = app.add_subcommand("series", "Perturbative order of the 2-point function as exact terms");
  series->add_option("--order", series_order, "Order n >= 0")->required()->check(CLI::NonNegativeNumber);
  add_common(series, series_common, "json");
  series->callback([&] {
    action = [&] {
      emit(series_common, out, render_series(perturbative_order(series_order), series_common));
      return int(kOk);
    };
  });

  // coeffs
  Common coeffs_common;
  int coeffs_max = 9;
  auto* coeffs = app.add_subcommand("coeffs", "Table of ansatz coefficients a_{n,k,m}");
  coeffs->add_option("--max-order", coeffs_max, "Largest order n >= 2")->capture_default_str();
  add_common(coeffs, coeffs_common, "json");
  coeffs->callback([&] {
    action = [&] {
      if (coeffs_max < 2) throw UsageError("--max-order must be >= 2");
      emit(coeffs_common, out, render_coeffs(coeffs_max, coeffs_common));
      return int(kOk);
    };
  });

  // greens
  Common greens_common;
  double greens_lambda = 0.0;
  std::vector<std::vector<double>> greens_x;
  auto* greens = app.add_subcommand("greens", "Connected 2k-point function of the melonic chain");
  greens->add_option("--lambda", greens_lambda, "Coupling")->required();
  greens->add_option("--x", greens_x, "One point x1,x2,x3 per occurrence, in order")->delimiter(',')->required();
  add_common(greens, greens_common, "json");
  greens->callback([&] {
    action = [&] {
      const Coupling coupling(greens_lambda);
      std::vector<Point3> points;
      for (const auto& v : greens_x) points.push_back(to_point(v, "--x"));
      const PointTuple tuple(points);
      const double value = connected_2k(tuple, coupling);
      std::string text;
      if (greens_common.format == "csv") {
        text = "lambda,k,value\n" + num(greens_lambda) + "," + std::to_string(tuple.size()) + "," + num(value) + "\n";
      } else {
        json pts = json::array();
        for (const auto& p : points) pts.push_back({p.x1(), p.x2(), p.x3()});
        text = json{{"lambda", greens_lambda}, {"k", tuple.size()}, {"points", pts}, {"value", value}}.dump(2) + "\n";
      }
      emit(greens_common, out, text);
      return int(kOk);
    };
  });

  // tabulate
  Common tab_common;
  std::vector<double> tab_lambda;
  std::vector<double> tab_x1;
  double tab_x2 = 0.0;
  double tab_x3 = 0.0;
  auto* tab = app.add_subcommand("tabulate", "Exact 2-point function over a grid of couplings and x1");
  tab->add_option("--lambda", tab_lambda, "Comma-separated couplings")->delimiter(',')->required();
  tab->add_option("--x1", tab_x1, "Comma-separated x1 values")->delimiter(',')->required();
  tab->add_option("--x2", tab_x2, "Fixed x2")->capture_default_str();
  tab->add_option("--x3", tab_x3, "Fixed x3")->capture_default_str();
  add_common(tab, tab_common, "csv");
  tab->callback([&] {
    action = [&] {
      std::vector<Record> rows;
      for (double lambda : tab_lambda) {
        for (double x1 : tab_x1) rows.push_back(evaluate(lambda, Point3(x1, tab_x2, tab_x3)));
      }
      emit(tab_common, out, render_records(rows, tab_common, false));
      return int(kOk);
    };
  });

  // verify
  std::string suite;
  int verify_max_order = 9;
  int verify_max_n = 20;
  std::optional<double> verify_lambda;
  std::vector<double> verify_x;
  double verify_tol = 1e-8;
  bool verify_numeric = false;
  std::optional<std::string> verify_format;
  std::string verify_output;
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
  verify->add_option("suite", suite, "coeffs | identities | sde | lambert | all")
      ->required()
      ->check(CLI::IsMember({"coeffs", "identities", "sde", "lambert", "all"}));
  verify->add_option("--max-order", verify_max_order, "Largest perturbative order")->capture_default_str();
  verify->add_option("--max-n", verify_max_n, "Largest n for the identity suite")->capture_default_str();
  verify->add_option("--lambda", verify_lambda, "Single coupling for the sde suite");
  verify->add_option("--x", verify_x, "Single point x1,x2,x3 for the sde suite")->delimiter(',');
  verify->add_option("--tol", verify_tol, "Quadrature absolute tolerance")->capture_default_str();
  verify->add_flag("--numeric", verify_numeric, "Add quadrature checks to the sde suite");
  verify->add_option("--format", verify_format, "json or csv (default: text report)")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--output", verify_output, "Write to PATH instead of standard output");
  verify->callback([&] {
    action = [&] {
      if (!(verify_tol > 0.0)) throw UsageError("--tol must be > 0");
      std::vector<SuiteReport> reports;
      const bool all = suite == "all";
      if (all || suite == "coeffs") reports.push_back(verify_coeffs(verify_max_order));
      if (all || suite == "identities") reports.push_back(verify_identities(verify_max_n));
      if (all || suite == "sde") {
        SdeSuiteOptions o = default_sde_options(verify_numeric);
        o.abs_tol = verify_tol;
        if (verify_lambda) o.lambdas = {*verify_lambda};
        if (!verify_x.empty()) o.points = {to_point(verify_x, "--x")};
        reports.push_back(verify_sde(o));
      }
      if (all || suite == "lambert") reports.push_back(verify_lambert());
      Common c;
      c.output = verify_output;
      emit(c, out, render_reports(reports, verify_format));
      for (const auto& r : reports) {
        if (!r.passed()) return int(kVerificationFailed);
      }
      return int(kOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const EvaluationDomain& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const CoincidentCoordinates& e) {
    err << "domain error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace melonic::cli
