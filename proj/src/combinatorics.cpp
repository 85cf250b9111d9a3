#include "melonic/combinatorics.hpp"

#include <string>
#include <vector>

#include "melonic/errors.hpp"

namespace melonic {

namespace {

std::string index_string(int n, int k, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
}

void require_coefficient_index(int n, int k, int m) {
  if (!is_coefficient_index(n, k, m)) {
    throw DomainError("a_{n,k,m} requires n >= 2, 1 <= m <= k <= n-1; got " + index_string(n, k, m));
  }
}

// Rows 0..n of the signed Stirling triangle.
std::vector<std::vector<BigInt>> stirling_rows(int n) {
  std::vector<std::vector<BigInt>> rows(n + 1);
  rows[0] = {BigInt(1)};
  for (int i = 1; i <= n; ++i) {
    rows[i].assign(i + 1, BigInt(0));
    for (int j = 1; j <= i; ++j) {
      BigInt prev_same = j <= i - 1 ? rows[i - 1][j] : BigInt(0);
      rows[i][j] = rows[i - 1][j - 1] - (i - 1) * prev_same;
    }
  }
  return rows;
}

Rational unsigned_over_factorial(int n, int k) {
  return Rational(stirling_first_unsigned(n, k), factorial(n));
}

// Right-hand sides of the recurrence system. `a` is any callable returning
// a_{n,k,m} for indices strictly below order n.
template <class A>
Rational rule_top_diagonal(int n, int m, A&& a) {
  // a_{n,n-1,1} = 1/(n-1);  a_{n,n-1,m} = 1/(n-m) + a_{n-1,n-2,m-1}
  if (m == 1) return Rational(1, n - 1);
  return Rational(1, n - m) + a(n - 1, n - 2, m - 1);
}

template <class A>
Rational rule_first_column(int n, int k, A&& a) {
  // a_{n,k,1} = sum_{l=1..k} a_{n-1,k,l}/l
  Rational sum = 0;
  for (int l = 1; l <= k; ++l) sum += a(n - 1, k, l) / l;
  return sum;
}

template <class A>
Rational rule_second_diagonal(int n, int m, A&& a) {
  // a_{n,n-2,m}, 2 <= m <= n-2
  Rational sum = a(n - 1, n - 3, m - 1);
  for (int r = m - 1; r <= n - 3; ++r) sum += a(r + 1, r, m - 1) / (n - 2 - r);
  for (int l = 1; l <= n - 1 - m; ++l) sum += a(n - m, n - 1 - m, l) / l;
  return sum;
}

template <class A>
Rational rule_general(int n, int k, int m, A&& a) {
  // a_{n,k,m}, 2 <= k <= n-3, 2 <= m <= k
  Rational sum = a(n - 1, k - 1, m - 1);
  for (int r = m - 1; r <= k - 1; ++r) sum += a(n - 1 + r - k, r, m - 1) / (k - r);
  for (int l = 1; l <= k - m + 1; ++l) sum += a(n - m, k - m + 1, l) / l;
  for (int r = m - 1; r <= k - 1; ++r) {
    for (int l = 1; l <= k - r; ++l) {
      for (int p = k - r + 1; p <= n - 2 - r; ++p) {
        sum += a(p, k - r, l) * a(n - p - 1, r, m - 1) / l;
      }
    }
  }
  return sum;
}

template <class A>
Rational recurrence_rhs(int n, int k, int m, A&& a) {
  if (k == n - 1) return rule_top_diagonal(n, m, a);
  // Covers a_{n,1,1} = a_{n-1,1,1} and the m = 1 entry of the second
  // diagonal, which the same column rule reproduces.
  if (m == 1) return rule_first_column(n, k, a);
  if (k == n - 2) return rule_second_diagonal(n, m, a);
  return rule_general(n, k, m, a);
}

}  // namespace

BigInt stirling_first_signed(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("Stirling numbers need n, k >= 0");
  if (k > n) return 0;
  return stirling_rows(n)[n][k];
}

BigInt stirling_first_unsigned(int n, int k) {
  BigInt s = stirling_first_signed(n, k);
  return s < 0 ? BigInt(-s) : s;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial needs n >= 0");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Rational harmonic(int k) {
  if (k < 1) throw DomainError("harmonic number needs k >= 1");
  Rational sum = 0;
  for (int j = 1; j <= k; ++j) sum += Rational(1, j);
  return sum;
}

bool is_coefficient_index(int n, int k, int m) {
  return n >= 2 && m >= 1 && m <= k && k <= n - 1;
}

Rational a_closed(int n, int k, int m) {
  require_coefficient_index(n, k, m);
  return Rational(binomial(n - 1, m - 1) * factorial(m) * stirling_first_unsigned(n - m, n - k),
                  factorial(k));
}

Rational a_recur(int n, int k, int m) {
  require_coefficient_index(n, k, m);
  return CoeffTable::from_recurrences(n).at(n, k, m);
}

CoeffTable::CoeffTable(int max_order) : max_order_(max_order) {
  if (max_order < 2) throw DomainError("coefficient tables start at order 2");
}

CoeffTable CoeffTable::closed_form(int max_order) {
  CoeffTable table(max_order);
  for (int n = 2; n <= max_order; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = 1; m <= k; ++m) table.set(n, k, m, a_closed(n, k, m));
    }
  }
  return table;
}

CoeffTable CoeffTable::from_recurrences(int max_order) {
  CoeffTable table(max_order);
  auto lookup = [&table](int n, int k, int m) -> const Rational& { return table.at(n, k, m); };
  // Every rule refers to strictly lower orders, so filling by increasing n
  // never reads an unset entry.
  for (int n = 2; n <= max_order; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = 1; m <= k; ++m) table.set(n, k, m, recurrence_rhs(n, k, m, lookup));
    }
  }
  return table;
}

void CoeffTable::check_index(int n, int k, int m) const {
  require_coefficient_index(n, k, m);
  if (n > max_order_) {
    throw DomainError("index " + index_string(n, k, m) + " beyond table order " +
                      std::to_string(max_order_));
  }
}

const Rational& CoeffTable::at(int n, int k, int m) const {
  check_index(n, k, m);
  auto it = entries_.find({n, k, m});
  if (it == entries_.end()) throw DomainError("no entry at " + index_string(n, k, m));
  return it->second;
}

bool CoeffTable::contains(int n, int k, int m) const {
  return is_coefficient_index(n, k, m) && entries_.contains({n, k, m});
}

void CoeffTable::set(int n, int k, int m, Rational value) {
  check_index(n, k, m);
  entries_[{n, k, m}] = std::move(value);
}

CoeffRow CoeffTable::row(int n) const {
  CoeffRow out;
  for (const auto& [idx, value] : entries_) {
    if (idx.n == n) out.emplace(std::pair{idx.k, idx.m}, value);
  }
  return out;
}

StirlingSumCheck check_identity_stirling_sum(int n, int k) {
  if (n < 4 || k < 1 || k > n - 3) {
    throw DomainError("Stirling sum identity needs n >= 4, 1 <= k <= n-3");
  }
  StirlingSumCheck out;
  const Rational lhs = unsigned_over_factorial(n - 1, n - k);
  out.corrected.lhs = lhs;
  out.variant.lhs = lhs;

  Rational corrected_sum = 0;
  Rational variant_sum = 0;
  for (int l = 1; l <= k; ++l) {
    const BigInt c = stirling_first_unsigned(n - 1 - l, n - 1 - k);
    corrected_sum += Rational(c, factorial(n - 1 - l));
    variant_sum += Rational(c, factorial(n - l));
  }
  out.corrected.rhs = corrected_sum / (n - 1);
  out.variant.rhs = variant_sum;
  return out;
}

IdentitySides check_identity_harmonic(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw DomainError("harmonic identity needs 1 <= k <= n");
  Rational sum = 0;
  for (int l = 1; l <= k; ++l) sum += Rational(n + 1 - k + l, l * (k + 1 - l));
  return {harmonic(k), Rational(k + 1, 2 * n + 3 - k) * sum};
}

BigStirlingCheck check_identity_big_stirling(int n, int k, int m) {
  if (n < 5 || k < 2 || k > n - 3 || m < 2 || m > k) {
    throw DomainError("big Stirling identity needs n >= 5, 2 <= k <= n-3, 2 <= m <= k");
  }
  auto c = [](int a, int b) { return stirling_first_unsigned(a, b); };
  auto fact = [](int a) { return factorial(a); };

  BigStirlingCheck out;
  out.expanded.lhs = Rational(BigInt((n - 1) * m - k * (m - 1)) * fact(n - 2) * c(n - m, n - k),
                             fact(k) * fact(n - m));

  Rational rhs = 0;
  for (int l = 1; l <= k - m + 1; ++l) {
    const Rational bracket = Rational(fact(n - 1 - m), fact(k - m + 1)) +
                             Rational(m - 1, l) * Rational(fact(n - l - 2), fact(k - l));
    rhs += Rational(c(n - m - l, n - k - 1), fact(n - m - l)) * bracket;
  }
  for (int l = 1; l <= k - m + 1; ++l) {
    Rational inner = 0;
    for (int p = l + 1; p <= n - 2 - k + l; ++p) {
      Rational tail = 0;
      for (int r = 1; r <= l; ++r) tail += Rational(c(p - r, p - l), fact(p - r));
      inner += Rational(fact(p - 1) * fact(n - 2 - p) * c(n - m - p, n - k - 1 - p + l),
                        fact(n - m - p)) *
               tail;
    }
    rhs += Rational(m - 1) / Rational(fact(l) * fact(k - l)) * inner;
  }
  out.expanded.rhs = rhs;

  out.recurrence.lhs = a_closed(n, k, m);
  out.recurrence.rhs = rule_general(n, k, m, [](int nn, int kk, int mm) { return a_closed(nn, kk, mm); });
  return out;
}

}  // namespace melonic
