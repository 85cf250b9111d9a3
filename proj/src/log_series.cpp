#include "melonic/log_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "melonic/errors.hpp"

namespace melonic {

LogSeries::LogSeries(int order, std::vector<LogTerm> terms) : order_(order) {
  std::sort(terms.begin(), terms.end(),
            [](const LogTerm& a, const LogTerm& b) { return a.key() < b.key(); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().key() == t.key()) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const LogTerm& t) { return t.coeff == 0; });
}

Rational LogSeries::coefficient(int logpow, int x1pow, int fullpow) const {
  const std::tuple key{logpow, x1pow, fullpow};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const LogTerm& t, const auto& k) { return t.key() < k; });
  return (it != terms_.end() && it->key() == key) ? it->coeff : Rational(0);
}

LogSeries LogSeries::scaled(const Rational& factor) const {
  std::vector<LogTerm> out(terms_.begin(), terms_.end());
  for (auto& t : out) t.coeff *= factor;
  return LogSeries(order_, std::move(out));
}

LogSeries LogSeries::with_extra_fullpow(int extra) const {
  std::vector<LogTerm> out(terms_.begin(), terms_.end());
  for (auto& t : out) t.fullpow += extra;
  return LogSeries(order_, std::move(out));
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  std::vector<LogTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      out.push_back({s.coeff * t.coeff, s.logpow + t.logpow, s.x1pow + t.x1pow, s.fullpow + t.fullpow});
    }
  }
  return LogSeries(a.order() + b.order(), std::move(out));
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
  if (a.order() != b.order()) throw DomainError("cannot add series of different order");
  std::vector<LogTerm> out(a.terms().begin(), a.terms().end());
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return LogSeries(a.order(), std::move(out));
}

X1Series::X1Series(LogSeries series) : series_(std::move(series)) {
  for (const auto& t : series_.terms()) {
    if (t.fullpow != 0) throw DomainError("X1Series terms must not depend on |x|");
  }
}

double eval_series(const LogSeries& s, const Point3& x) {
  const double a = 1.0 + x.x1() * x.x1();
  const double log_a = std::log1p(x.x1() * x.x1());
  const double full = 1.0 + x.norm2();
  double sum = 0.0;
  for (const auto& t : s.terms()) {
    sum += to_double(t.coeff) * std::pow(log_a, t.logpow) * std::pow(a, -t.x1pow) *
           std::pow(full, -t.fullpow);
  }
  return std::pow(std::numbers::pi / 2.0, s.order()) * sum;
}

}  // namespace melonic
