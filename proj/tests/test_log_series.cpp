#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "melonic/errors.hpp"
#include "melonic/log_series.hpp"
#include "melonic/perturbation.hpp"

using namespace melonic;

namespace {
LogSeries first_order() { return LogSeries(1, {{Rational(1), 1, 0, 2}}); }
}  // namespace

TEST(LogSeries, CanonicalizesOnConstruction) {
  const LogSeries s(2, {{Rational(1), 2, 0, 3}, {Rational(-1), 1, 1, 2}, {Rational(1, 2), 1, 1, 2},
                        {Rational(3), 0, 0, 0}, {Rational(-3), 0, 0, 0}, {Rational(-1, 2), 1, 1, 2}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.terms()[0], (LogTerm{Rational(-1), 1, 1, 2}));
  EXPECT_EQ(s.terms()[1], (LogTerm{Rational(1), 2, 0, 3}));
  EXPECT_EQ(s.coefficient(1, 1, 2), Rational(-1));
  EXPECT_EQ(s.coefficient(0, 0, 0), Rational(0));
}

TEST(LogSeries, CanonicalizationIsIdempotent) {
  for (int n = 0; n <= 6; ++n) {
    const LogSeries s = perturbative_order(n);
    const LogSeries again(s.order(), {s.terms().begin(), s.terms().end()});
    EXPECT_EQ(again, s);
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s.terms()[i - 1].key(), s.terms()[i].key());
    for (const auto& t : s.terms()) EXPECT_NE(t.coeff, 0);
  }
}

TEST(SeriesMul, Examples) {
  EXPECT_EQ(free_propagator() * free_propagator(), LogSeries(0, {{Rational(1), 0, 0, 2}}));
  const LogSeries empty(3, {});
  const LogSeries product = first_order() * empty;
  EXPECT_TRUE(product.empty());
  EXPECT_EQ(product.order(), 4);
  EXPECT_EQ(first_order() * first_order(), LogSeries(2, {{Rational(1), 2, 0, 4}}));
}

TEST(SeriesMul, CancellationDropsTerms) {
  const LogSeries a(0, {{Rational(1), 0, 0, 1}, {Rational(1), 0, 1, 0}});
  const LogSeries b(0, {{Rational(1), 0, 0, 1}, {Rational(-1), 0, 1, 0}});
  // (u + v)(u - v) = u^2 - v^2
  EXPECT_EQ(a * b, LogSeries(0, {{Rational(1), 0, 0, 2}, {Rational(-1), 0, 2, 0}}));
}

TEST(SeriesAdd, RequiresMatchingOrder) {
  EXPECT_THROW(first_order() + free_propagator(), DomainError);
  EXPECT_TRUE((first_order() + first_order().scaled(Rational(-1))).empty());
}

TEST(X1Series, RejectsFullMomentumDependence) {
  EXPECT_THROW(X1Series{first_order()}, DomainError);
  EXPECT_NO_THROW(X1Series(LogSeries(1, {{Rational(1), 1, 1, 0}})));
}

TEST(EvalSeries, Examples) {
  EXPECT_DOUBLE_EQ(eval_series(free_propagator(), Point3(0, 0, 0)), 1.0);
  EXPECT_DOUBLE_EQ(eval_series(free_propagator(), Point3(1, 1, 1)), 0.25);
  // (pi/2) log 2 / 4
  EXPECT_NEAR(eval_series(first_order(), Point3(1, 0, 0)), 0.27219826128795027, 1e-15);
  const double direct = std::numbers::pi / 2 * std::log(2.0) / 4.0;
  EXPECT_NEAR(eval_series(first_order(), Point3(1, 0, 0)), direct, 1e-15);
}

TEST(EvalSeries, NegativeX1PowIsANumeratorFactor) {
  const LogSeries s(0, {{Rational(1), 0, -2, 0}});
  EXPECT_DOUBLE_EQ(eval_series(s, Point3(2, 5, 7)), 25.0);
}
