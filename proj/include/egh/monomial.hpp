#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egh/error.hpp"

namespace egh {

using Count = std::int64_t;

/// Checked binomial coefficient C(n, k); zero when k < 0 or k > n.
Count binomial(Count n, Count k);

/// Polynomial ring k[x_1, ..., x_n]; the coefficient field is implicit.
class RingContext {
 public:
  explicit RingContext(int n);

  int n() const noexcept { return n_; }

  /// dim S_j = C(n - 1 + j, j); zero for negative j.
  Count slice_dim(int j) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  int n_;
};

/// Dense exponent vector; x_1 is the lex-heaviest variable.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

  static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// x_var^e with 0-based variable index.
  static Monomial power(int n, int var, int e);

  int n() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// x_var * this, 0-based index.
  Monomial times_var(int var) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Degree-lex: total degree first, then exponent vectors with x_1 heaviest.
/// Throws dimension_mismatch when the variable counts differ.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Strict-weak "greater in degree-lex" predicate, for sorting descending.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

/// Every degree-j monomial in lex-descending order; C(n-1+j, j) of them.
std::vector<Monomial> monomials_of_degree(const RingContext& ring, int j);

/// Position of m among degree-deg(m) monomials in lex-descending order
/// (0 is the largest, x_1^j).
Count lex_rank(const Monomial& m);

/// Inverse of lex_rank.
Monomial lex_unrank(const RingContext& ring, int j, Count rank);

/// Text form `x1^2*x3`; the unit monomial prints as `1`.
std::string to_string(const Monomial& m);

/// Parses the text form; variable indices must lie in 1..n.
Monomial parse_monomial(std::string_view text, int n);

}  // namespace egh
