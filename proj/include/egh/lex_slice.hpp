#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egh/ideal.hpp"

namespace egh {

/// True when some x_i^{powers[i]} divides m.
bool divisible_by_pure_power(const Monomial& m, std::span<const int> powers);

/// Number of degree-(j+1) multiples of the size-`size` lex segment of S_j.
/// S_1 times a lex segment is again a lex segment ending at x_n * (last).
Count lex_segment_growth(const RingContext& ring, int j, Count size);

/// One graded piece S_j seen against fixed pure powers: which lex positions
/// already lie in (x^p)_j, and how many non-power monomials precede each
/// position. Sets of the form (x^p)_j ∪ Lex_K are handled through K.
class LexSlice {
 public:
  LexSlice(const RingContext& ring, std::span<const int> powers, int j);

  int degree() const noexcept { return j_; }
  Count dim() const noexcept { return static_cast<Count>(in_powers_.size()); }
  Count power_count() const noexcept { return power_count_; }
  bool in_powers(Count rank) const { return in_powers_[static_cast<std::size_t>(rank)] != 0; }

  /// |(x^p)_j ∪ Lex_K|.
  Count union_size(Count prefix) const;
  /// Smallest K with union_size(K) == size; size must lie in [power_count, dim].
  Count min_prefix(Count size) const;
  /// Largest K' >= K with the same union (skips power monomials).
  Count canonical_prefix(Count prefix) const;
  /// Rank of the lex-smallest non-power monomial inside Lex_K, if any.
  std::optional<Count> smallest_free_in_prefix(Count prefix) const;

 private:
  int j_;
  Count power_count_ = 0;
  std::vector<char> in_powers_;
  std::vector<Count> free_before_;  // non-power monomials among ranks < r
};

enum class InfeasibleReason { below_ci, above_ring, closure };

std::string_view to_string(InfeasibleReason reason);

/// First degree at which a Hilbert table cannot be realized.
struct Infeasibility {
  int degree = 0;
  InfeasibleReason reason = InfeasibleReason::closure;
  std::string detail;
};

/// Per-degree canonical lex prefixes realizing an ideal-side table as
/// (x^p) + lex, or the first degree where that fails.
struct ProfileResult {
  std::vector<Count> prefixes;
  std::optional<Infeasibility> failure;
};

ProfileResult build_lex_profile(const RingContext& ring, std::span<const int> powers, const HilbertTable& table);

}  // namespace egh
