#pragma once

#include <optional>
#include <vector>

#include "egh/ideal.hpp"
#include "egh/lex_slice.hpp"

namespace egh {

/// a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_s, s), k_d > ... > k_s >= s >= 1.
struct MacaulayRep {
  struct Term {
    Count top;
    int bottom;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Count value = 0;
  int degree = 1;
  std::vector<Term> terms;  // bottom descending from `degree`

  Count sum() const;
};

/// Greedy binomial expansion of a in degree d (d >= 1).
MacaulayRep macaulay_decompose(Count a, int d);

/// a^<d>: the largest possible HF(S/I; d+1) when HF(S/I; d) = a.
Count macaulay_max_quotient_growth(Count a, int d);

/// Smallest possible HF(I; j+1) for an ideal with HF(I; j) = a and no other
/// information (Macaulay's bound). Throws infeasible_value for a outside
/// [0, dim S_j].
Count macaulay_min_ideal_growth(const RingContext& ring, int j, Count a);

/// The `size` lex-largest degree-j monomials, lex-descending.
std::vector<Monomial> lex_segment(const RingContext& ring, int j, Count size);

struct LexIdealResult {
  std::optional<MonomialIdeal> ideal;
  std::optional<Infeasibility> failure;

  explicit operator bool() const noexcept { return ideal.has_value(); }
};

/// Lex ideal with the given ideal-side table on [0, jmax] (generators up to
/// jmax), or the first degree where the segments do not nest.
LexIdealResult lex_ideal_from_table(const RingContext& ring, const HilbertTable& table);

/// Numeric hypothesis of the small-constant persistence lemma:
/// 0 < t(D) == t(D+1) <= D, for an ideal generated in degrees <= D. The
/// caller must vouch for the generation degree (`generated_in_degree_le_D`);
/// a table cannot witness it. Throws precondition when the flag is false and
/// insufficient_range when D+1 is outside the table.
bool gotzmann_persists(const RingContext& ring, const HilbertTable& quotient_table, int D,
                       bool generated_in_degree_le_D);

}  // namespace egh
