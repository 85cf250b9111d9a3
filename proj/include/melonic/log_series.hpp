#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "melonic/kinematics.hpp"
#include "melonic/rational.hpp"

namespace melonic {

/// coeff * log^logpow(1+x1^2) * (1+x1^2)^(-x1pow) * (1+|x|^2)^(-fullpow)
struct LogTerm {
  Rational coeff;
  int logpow = 0;
  int x1pow = 0;
  int fullpow = 0;

  std::tuple<int, int, int> key() const { return {logpow, x1pow, fullpow}; }
  friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

/// (pi/2)^order times a finite sum of LogTerms. Terms are kept sorted by
/// (logpow, x1pow, fullpow) with distinct keys and nonzero coefficients.
class LogSeries {
 public:
  LogSeries() = default;
  LogSeries(int order, std::vector<LogTerm> terms);

  int order() const { return order_; }
  std::span<const LogTerm> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the term with the given key, zero if absent.
  Rational coefficient(int logpow, int x1pow, int fullpow) const;

  LogSeries scaled(const Rational& factor) const;
  /// Multiplies every term by (1+|x|^2)^(-extra).
  LogSeries with_extra_fullpow(int extra) const;

  friend bool operator==(const LogSeries&, const LogSeries&) = default;

 private:
  int order_ = 0;
  std::vector<LogTerm> terms_;
};

/// Termwise product; orders add.
LogSeries operator*(const LogSeries& a, const LogSeries& b);

/// Sum of two series of the same order. Throws DomainError on order mismatch.
LogSeries operator+(const LogSeries& a, const LogSeries& b);

/// A series in x1 alone: every term has fullpow = 0.
class X1Series {
 public:
  explicit X1Series(LogSeries series);
  const LogSeries& series() const { return series_; }
  friend bool operator==(const X1Series&, const X1Series&) = default;

 private:
  LogSeries series_;
};

/// Value with the (pi/2)^order prefactor applied.
double eval_series(const LogSeries& s, const Point3& x);

}  // namespace melonic
