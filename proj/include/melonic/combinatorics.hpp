#pragma once

#include <compare>
#include <map>
#include <utility>

#include "melonic/rational.hpp"

namespace melonic {

/// Signed Stirling numbers of the first kind: coefficients of the falling
/// factorial x(x-1)...(x-n+1), with s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
BigInt stirling_first_signed(int n, int k);

/// |s(n,k)|, the number of permutations of n elements with k cycles.
BigInt stirling_first_unsigned(int n, int k);

/// C(n,k), zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

/// H_k = 1 + 1/2 + ... + 1/k. Throws DomainError for k < 1.
Rational harmonic(int k);

/// True iff n >= 2 and 1 <= m <= k <= n-1.
bool is_coefficient_index(int n, int k, int m);

/// a_{n,k,m} = C(n-1,m-1) m!/k! |s(n-m,n-k)|.
Rational a_closed(int n, int k, int m);

/// a_{n,k,m} from the recurrence system alone, seeded by a_{2,1,1} = 1.
/// Builds a table up to order n for every call.
Rational a_recur(int n, int k, int m);

struct CoeffIndex {
  int n = 0;
  int k = 0;
  int m = 0;
  friend auto operator<=>(const CoeffIndex&, const CoeffIndex&) = default;
};

/// (k,m) -> a_{n,k,m} for one fixed order n.
using CoeffRow = std::map<std::pair<int, int>, Rational>;

/// Exact a_{n,k,m} for 2 <= n <= max_order. Lookups outside the valid index
/// set throw DomainError rather than returning zero.
class CoeffTable {
 public:
  explicit CoeffTable(int max_order);

  static CoeffTable closed_form(int max_order);
  static CoeffTable from_recurrences(int max_order);

  int max_order() const { return max_order_; }
  const Rational& at(int n, int k, int m) const;
  bool contains(int n, int k, int m) const;
  void set(int n, int k, int m, Rational value);

  CoeffRow row(int n) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  void check_index(int n, int k, int m) const;

  int max_order_;
  std::map<CoeffIndex, Rational> entries_;
};

/// Both sides of an exact identity.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// The unsigned-Stirling identity implied by the m = 1 recurrence, in the form
///   c(n-1,n-k)/(n-1)! = 1/(n-1) * sum_{l=1..k} c(n-1-l,n-1-k)/(n-1-l)!
/// (corrected) next to the variant with 1/(n-l)! in the summand.
struct StirlingSumCheck {
  IdentitySides corrected;
  IdentitySides variant;
  bool passed() const { return corrected.holds(); }
};

/// Valid for n >= 4, 1 <= k <= n-3.
StirlingSumCheck check_identity_stirling_sum(int n, int k);

/// H_k against (k+1)/(2n+3-k) * sum_{l=1..k} (n+1-k+l)/(l(k+1-l)).
/// Valid for n >= 1, 1 <= k <= n.
IdentitySides check_identity_harmonic(int n, int k);

/// The general (k <= n-3, m >= 2) recurrence rewritten in Stirling numbers,
/// with every sum expanded, together with the recurrence itself evaluated on
/// closed-form a-values. The recurrence is the ground truth for passed().
struct BigStirlingCheck {
  IdentitySides expanded;
  IdentitySides recurrence;
  bool passed() const { return recurrence.holds(); }
};

/// Valid for n >= 5, 2 <= k <= n-3, 2 <= m <= k.
BigStirlingCheck check_identity_big_stirling(int n, int k, int m);

}  // namespace melonic
