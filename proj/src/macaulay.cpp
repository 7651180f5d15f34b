#include "egh/macaulay.hpp"

namespace egh {

Count MacaulayRep::sum() const {
  Count s = 0;
  for (const auto& t : terms) s += binomial(t.top, t.bottom);
  return s;
}

MacaulayRep macaulay_decompose(Count a, int d) {
  if (a < 0) throw Error(Errc::infeasible_value, "Macaulay representation of a negative count");
  if (d < 1) throw Error(Errc::invalid_input, "Macaulay representation needs degree >= 1");
  MacaulayRep rep{a, d, {}};
  Count rest = a;
  for (int i = d; i >= 1 && rest > 0; --i) {
    // largest k with C(k, i) <= rest; C(i, i) = 1 <= rest so k >= i
    Count k = i;
    while (binomial(k + 1, i) <= rest) ++k;
    rep.terms.push_back({k, i});
    rest -= binomial(k, i);
  }
  return rep;
}

Count macaulay_max_quotient_growth(Count a, int d) {
  Count out = 0;
  for (const auto& t : macaulay_decompose(a, d).terms) out += binomial(t.top + 1, t.bottom + 1);
  return out;
}

Count macaulay_min_ideal_growth(const RingContext& ring, int j, Count a) {
  if (j < 0) throw Error(Errc::invalid_input, "negative degree");
  const Count dim = ring.slice_dim(j);
  if (a < 0 || a > dim)
    throw Error(Errc::infeasible_value, "HF(I;" + std::to_string(j) + ") = " + std::to_string(a) +
                                            " outside [0, " + std::to_string(dim) + "]");
  const Count quotient = dim - a;
  // Degree 0 has no binomial form: a nonzero constant quotient can grow to all of S_1.
  const Count max_quotient_next = j == 0 ? quotient * ring.n() : macaulay_max_quotient_growth(quotient, j);
  return ring.slice_dim(j + 1) - max_quotient_next;
}

std::vector<Monomial> lex_segment(const RingContext& ring, int j, Count size) {
  const Count dim = ring.slice_dim(j);
  if (size < 0 || size > dim)
    throw Error(Errc::infeasible_value, "lex segment size " + std::to_string(size) + " outside [0, " +
                                            std::to_string(dim) + "]");
  auto all = monomials_of_degree(ring, j);
  all.resize(static_cast<std::size_t>(size), Monomial::one(ring.n()));
  return all;
}

LexIdealResult lex_ideal_from_table(const RingContext& ring, const HilbertTable& table) {
  const ProfileResult profile = build_lex_profile(ring, {}, table);
  if (profile.failure) return {std::nullopt, profile.failure};
  std::vector<Monomial> gens;
  for (int j = 0; j < static_cast<int>(profile.prefixes.size()); ++j) {
    const Count inherited = j == 0 ? 0 : lex_segment_growth(ring, j - 1, profile.prefixes[static_cast<std::size_t>(j - 1)]);
    for (Count r = inherited; r < profile.prefixes[static_cast<std::size_t>(j)]; ++r) gens.push_back(lex_unrank(ring, j, r));
  }
  return {MonomialIdeal(ring, std::move(gens)), std::nullopt};
}

bool gotzmann_persists(const RingContext& ring, const HilbertTable& quotient_table, int D,
                       bool generated_in_degree_le_D) {
  if (!(quotient_table.ring() == ring)) throw Error(Errc::dimension_mismatch, "table ring differs");
  if (!generated_in_degree_le_D)
    throw Error(Errc::precondition, "ideal must be generated in degrees <= D = " + std::to_string(D));
  if (D < 0 || D + 1 > quotient_table.jmax())
    throw Error(Errc::insufficient_range, "persistence test needs degrees D and D+1 = " + std::to_string(D + 1));
  const HilbertTable t = quotient_table.to_side(Side::quotient);
  const Count at_D = t.at(D);
  return at_D > 0 && at_D == t.at(D + 1) && at_D <= D;
}

}  // namespace egh
