#include "egh/lex_slice.hpp"

#include <algorithm>

namespace egh {

bool divisible_by_pure_power(const Monomial& m, std::span<const int> powers) {
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (m[static_cast<int>(i)] >= powers[i]) return true;
  return false;
}

Count lex_segment_growth(const RingContext& ring, int j, Count size) {
  if (size < 0 || size > ring.slice_dim(j)) throw Error(Errc::infeasible_value, "lex segment size out of range");
  if (size == 0) return 0;
  const Monomial last = lex_unrank(ring, j, size - 1);
  return lex_rank(last.times_var(ring.n() - 1)) + 1;
}

LexSlice::LexSlice(const RingContext& ring, std::span<const int> powers, int j) : j_(j) {
  const auto monomials = monomials_of_degree(ring, j);
  in_powers_.resize(monomials.size());
  free_before_.resize(monomials.size() + 1);
  Count free = 0;
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    free_before_[r] = free;
    const bool p = divisible_by_pure_power(monomials[r], powers);
    in_powers_[r] = p ? 1 : 0;
    if (p)
      ++power_count_;
    else
      ++free;
  }
  free_before_[monomials.size()] = free;
}

Count LexSlice::union_size(Count prefix) const {
  return power_count_ + free_before_[static_cast<std::size_t>(prefix)];
}

Count LexSlice::min_prefix(Count size) const {
  if (size < power_count_ || size > dim()) throw Error(Errc::infeasible_value, "slice size out of range");
  const Count want_free = size - power_count_;
  // free_before_ is nondecreasing; the first K with free_before_[K] == want_free.
  auto it = std::lower_bound(free_before_.begin(), free_before_.end(), want_free);
  return static_cast<Count>(it - free_before_.begin());
}

Count LexSlice::canonical_prefix(Count prefix) const {
  while (prefix < dim() && in_powers(prefix)) ++prefix;
  return prefix;
}

std::optional<Count> LexSlice::smallest_free_in_prefix(Count prefix) const {
  for (Count r = prefix - 1; r >= 0; --r)
    if (!in_powers(r)) return r;
  return std::nullopt;
}

std::string_view to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::below_ci: return "below-ci";
    case InfeasibleReason::above_ring: return "above-ring";
    case InfeasibleReason::closure: return "closure";
  }
  return "unknown";
}

ProfileResult build_lex_profile(const RingContext& ring, std::span<const int> powers, const HilbertTable& table) {
  if (!(table.ring() == ring)) throw Error(Errc::dimension_mismatch, "table ring differs from target ring");
  const HilbertTable t = table.to_side(Side::ideal);
  ProfileResult result;
  for (int j = 0; j <= t.jmax(); ++j) {
    const LexSlice slice(ring, powers, j);
    const Count want = t.at(j);
    if (want < slice.power_count()) {
      result.failure = Infeasibility{j, InfeasibleReason::below_ci,
                                     "HF " + std::to_string(want) + " < pure-power count " +
                                         std::to_string(slice.power_count())};
      return result;
    }
    if (want > slice.dim()) {
      result.failure = Infeasibility{j, InfeasibleReason::above_ring,
                                     "HF " + std::to_string(want) + " > dim S_j = " + std::to_string(slice.dim())};
      return result;
    }
    const Count k = slice.canonical_prefix(slice.min_prefix(want));
    if (j > 0) {
      const Count needed = lex_segment_growth(ring, j - 1, result.prefixes.back());
      if (needed > k) {
        result.failure = Infeasibility{j, InfeasibleReason::closure,
                                       "multiples of degree-" + std::to_string(j - 1) + " lex part need a prefix of " +
                                           std::to_string(needed) + " but the table allows " + std::to_string(k)};
        return result;
      }
    }
    result.prefixes.push_back(k);
  }
  return result;
}

}  // namespace egh
