#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egh/monomial.hpp"

namespace egh {

/// Nondecreasing positive integers d_1 <= ... <= d_h, h >= 1.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> entries);
  DegreeSequence(std::initializer_list<int> entries) : DegreeSequence(std::vector<int>(entries)) {}

  int h() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int back() const { return entries_.back(); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  /// First k entries (the d' of a shorter regular sequence).
  DegreeSequence prefix(int k) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// sum (d_i - 1).
int socle_degree(const DegreeSequence& d);
int socle_degree(std::span<const int> powers);

std::string to_string(const DegreeSequence& d);
/// Parses "4,5,7". When `allow_unsorted` the entries are sorted and
/// `was_sorted` reports whether that changed anything.
DegreeSequence parse_degree_sequence(std::string_view text, bool allow_unsorted = false,
                                     bool* was_sorted = nullptr);

/// Monomial ideal kept as its minimal generating set, ordered by degree and
/// lex-descending within a degree. No generators means the zero ideal; the unit ideal is {1}.
class MonomialIdeal {
 public:
  MonomialIdeal(RingContext ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(RingContext ring) { return MonomialIdeal(ring, {}); }
  static MonomialIdeal unit(RingContext ring) { return MonomialIdeal(ring, {Monomial::one(ring.n())}); }
  /// (x_1^{p_1}, ..., x_h^{p_h}).
  static MonomialIdeal pure_powers(RingContext ring, std::span<const int> powers);

  const RingContext& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  /// Degree-j members in lex-descending order.
  std::vector<Monomial> component(int j) const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  RingContext ring_;
  std::vector<Monomial> gens_;
};

std::string to_string(const MonomialIdeal& I);

/// Ideal file: one generator per line; blank and '#' lines ignored.
MonomialIdeal parse_ideal(std::istream& in, const RingContext& ring);
MonomialIdeal parse_ideal_text(std::string_view text, const RingContext& ring);

enum class Side { ideal, quotient };

std::string_view to_string(Side side);

/// Hilbert function values on [0, jmax]. Degrees above jmax are unspecified.
class HilbertTable {
 public:
  HilbertTable(RingContext ring, Side side, std::vector<Count> values);

  const RingContext& ring() const noexcept { return ring_; }
  Side side() const noexcept { return side_; }
  int jmax() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Count>& values() const noexcept { return values_; }

  /// Throws insufficient_range outside [0, jmax].
  Count at(int j) const;

  HilbertTable to_side(Side side) const;
  HilbertTable truncated(int jmax) const;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

 private:
  RingContext ring_;
  Side side_;
  std::vector<Count> values_;
};

/// Ideal-side count of degree-j monomials in I.
Count hilbert_function(const MonomialIdeal& I, int j);
HilbertTable hilbert_table(const MonomialIdeal& I, int jmax, Side side = Side::ideal);

/// {m : m * J ⊆ I}. Throws invalid_input for J = 0.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// Quotient-side table of S/(x^d) from prod (1 - t^{d_i}) / (1 - t)^n.
HilbertTable ci_hilbert_table(const RingContext& ring, const DegreeSequence& d, int jmax);
/// Same series for an arbitrary exponent list (h <= n, any order).
HilbertTable ci_hilbert_table(const RingContext& ring, std::span<const int> powers, int jmax);

}  // namespace egh
