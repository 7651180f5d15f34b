#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egh/ideal.hpp"
#include "egh/lex_slice.hpp"

namespace egh {

/// (x_1^{p_1}, ..., x_h^{p_h}) + L with L a lex ideal, known on [0, jmax].
///
/// Stored per degree as the largest lex prefix K_j contained in the ideal,
/// so that L_j = (x^p)_j ∪ Lex_{K_j} and the prefixes alone form a lex
/// ideal. `powers` normally is a degree sequence; unsorted exponent lists
/// are accepted for the linkage construction, which needs the smaller power
/// on the last variable.
class LppIdeal {
 public:
  /// Validates closure L_j * S_1 ⊆ L_{j+1} and canonicalizes the prefixes.
  LppIdeal(RingContext ring, std::vector<int> powers, std::vector<Count> lex_prefixes);

  /// The pure-power ideal itself on [0, jmax].
  static LppIdeal pure_powers(RingContext ring, std::vector<int> powers, int jmax);

  const RingContext& ring() const noexcept { return ring_; }
  const std::vector<int>& powers() const noexcept { return powers_; }
  /// Throws invalid_degree_sequence when the powers are not sorted.
  DegreeSequence degree_sequence() const;
  int jmax() const noexcept { return static_cast<int>(prefixes_.size()) - 1; }
  Count lex_prefix(int j) const;
  const std::vector<Count>& lex_prefixes() const noexcept { return prefixes_; }

  bool contains(const Monomial& m) const;
  /// L_j, lex-descending.
  std::vector<Monomial> component(int j) const;
  /// V_j = L_j minus (x^p)_j, lex-descending.
  std::vector<Monomial> lex_part(int j) const;
  Count hf(int j) const;
  HilbertTable table(Side side = Side::ideal) const;
  /// Minimal generators in degrees <= jmax.
  MonomialIdeal generators() const;

  friend bool operator==(const LppIdeal& a, const LppIdeal& b) {
    return a.ring_ == b.ring_ && a.powers_ == b.powers_ && a.prefixes_ == b.prefixes_;
  }

 private:
  const LexSlice& slice(int j) const;

  RingContext ring_;
  std::vector<int> powers_;
  std::vector<Count> prefixes_;
  std::vector<LexSlice> slices_;
};

/// Reads the lex prefixes straight off an explicit monomial set per degree.
/// Throws precondition when a degree is not of the form (x^p)_j ∪ segment.
LppIdeal lpp_from_components(const RingContext& ring, std::vector<int> powers,
                             const std::vector<std::vector<Monomial>>& components);

struct LppResult {
  std::optional<LppIdeal> ideal;
  std::optional<Infeasibility> failure;

  explicit operator bool() const noexcept { return ideal.has_value(); }
};

/// The d-LPP ideal with ideal-side table t on [0, jmax], if one exists.
LppResult lpp_from_table(const RingContext& ring, const DegreeSequence& d, const HilbertTable& t);
/// Same for an arbitrary exponent list on x_1..x_h.
LppResult lpp_from_table(const RingContext& ring, std::vector<int> powers, const HilbertTable& t);

/// |(x^d)_{j+1} ∪ S_1 L_j| where L_j = (x^d)_j ∪ (shortest lex segment giving
/// |L_j| = a): the least HF(I; j+1) compatible with EGH. Throws
/// infeasible_value for a outside [HF((x^d); j), dim S_j].
Count egh_min_growth(const RingContext& ring, const DegreeSequence& d, int j, Count a);

/// Lex-largest degree-j monomial outside L_j; nullopt when L_j = S_j.
std::optional<Monomial> out(const LppIdeal& L, int j);

/// Drops the lex-smallest monomial of V_j for D <= j <= Dp, clears V_j for
/// j < D and keeps the rest. Requires HF(L; D) > HF((x^p); D),
/// D <= Dp <= socle degree of the powers, and jmax >= Dp + 1. Throws
/// infeasible_value when no d-LPP ideal has the resulting table, which
/// happens for some inputs with h = n but never with h < n at desk scale.
LppIdeal lemma_lex_transform(const LppIdeal& L, int D, int Dp);

/// L + (x_{h+1}^{dnew}); dnew must not be below the last power and h < n.
LppIdeal add_pure_power(const LppIdeal& L, int dnew);

/// The d-LPP ideal with the Hilbert function of (x^{dpp}) on [0, jmax], for
/// dpp <= d entrywise. Feasibility is a theorem, so failure throws
/// hard_failure instead of returning.
LppIdeal lpp_of_ci(const RingContext& ring, const DegreeSequence& d, const DegreeSequence& dpp, int jmax);

struct EghCheck {
  bool holds = false;
  std::optional<LppIdeal> witness;
  std::optional<Infeasibility> failure;
};

/// Does some d-LPP ideal share the ideal-side table t on [0, jmax]?
EghCheck egh_check(const RingContext& ring, const DegreeSequence& d, const HilbertTable& t);

struct EghJCheck {
  bool holds = false;
  Count bound = 0;  // egh_min_growth(j, aj) when aj is feasible
  std::string reason;
};

/// One-degree check: aj >= HF((x^d); j) and aj1 >= egh_min_growth(j, aj).
EghJCheck egh_j_check(const RingContext& ring, const DegreeSequence& d, int j, Count aj, Count aj1);

std::string to_string(const LppIdeal& L);

}  // namespace egh
