#include "egh/lpp.hpp"

#include <algorithm>

namespace egh {

namespace {

void validate_powers(const RingContext& ring, const std::vector<int>& powers) {
  if (static_cast<int>(powers.size()) > ring.n())
    throw Error(Errc::invalid_degree_sequence, std::to_string(powers.size()) + " pure powers in " +
                                                   std::to_string(ring.n()) + " variables");
  for (int p : powers)
    if (p < 1) throw Error(Errc::invalid_degree_sequence, "pure powers must have positive degree");
}

}  // namespace

LppIdeal::LppIdeal(RingContext ring, std::vector<int> powers, std::vector<Count> lex_prefixes)
    : ring_(ring), powers_(std::move(powers)), prefixes_(std::move(lex_prefixes)) {
  validate_powers(ring_, powers_);
  if (prefixes_.empty()) throw Error(Errc::insufficient_range, "LPP ideal needs at least degree 0");
  slices_.reserve(prefixes_.size());
  for (int j = 0; j <= jmax(); ++j) {
    slices_.emplace_back(ring_, powers_, j);
    Count& k = prefixes_[static_cast<std::size_t>(j)];
    if (k < 0 || k > slices_.back().dim())
      throw Error(Errc::infeasible_value, "lex prefix out of range at degree " + std::to_string(j));
    k = slices_.back().canonical_prefix(k);
    if (j > 0 && lex_segment_growth(ring_, j - 1, prefixes_[static_cast<std::size_t>(j - 1)]) > k)
      throw Error(Errc::precondition, "not an ideal: degree-" + std::to_string(j - 1) +
                                          " lex part escapes degree " + std::to_string(j));
  }
}

LppIdeal LppIdeal::pure_powers(RingContext ring, std::vector<int> powers, int jmax) {
  return LppIdeal(ring, std::move(powers), std::vector<Count>(static_cast<std::size_t>(jmax) + 1, 0));
}

DegreeSequence LppIdeal::degree_sequence() const { return DegreeSequence(powers_); }

const LexSlice& LppIdeal::slice(int j) const {
  if (j < 0 || j > jmax())
    throw Error(Errc::insufficient_range, "degree " + std::to_string(j) + " outside LPP range [0, " +
                                              std::to_string(jmax()) + "]");
  return slices_[static_cast<std::size_t>(j)];
}

Count LppIdeal::lex_prefix(int j) const {
  slice(j);
  return prefixes_[static_cast<std::size_t>(j)];
}

bool LppIdeal::contains(const Monomial& m) const {
  slice(m.degree());  // range check
  return divisible_by_pure_power(m, powers_) || lex_rank(m) < prefixes_[static_cast<std::size_t>(m.degree())];
}

std::vector<Monomial> LppIdeal::component(int j) const {
  const LexSlice& s = slice(j);
  const Count k = prefixes_[static_cast<std::size_t>(j)];
  std::vector<Monomial> out;
  for (Count r = 0; r < s.dim(); ++r)
    if (r < k || s.in_powers(r)) out.push_back(lex_unrank(ring_, j, r));
  return out;
}

std::vector<Monomial> LppIdeal::lex_part(int j) const {
  const LexSlice& s = slice(j);
  std::vector<Monomial> out;
  for (Count r = 0; r < prefixes_[static_cast<std::size_t>(j)]; ++r)
    if (!s.in_powers(r)) out.push_back(lex_unrank(ring_, j, r));
  return out;
}

Count LppIdeal::hf(int j) const { return slice(j).union_size(prefixes_[static_cast<std::size_t>(j)]); }

HilbertTable LppIdeal::table(Side side) const {
  std::vector<Count> v;
  for (int j = 0; j <= jmax(); ++j) v.push_back(hf(j));
  return HilbertTable(ring_, Side::ideal, std::move(v)).to_side(side);
}

MonomialIdeal LppIdeal::generators() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < powers_.size(); ++i)
    if (powers_[i] <= jmax()) gens.push_back(Monomial::power(ring_.n(), static_cast<int>(i), powers_[i]));
  for (int j = 0; j <= jmax(); ++j) {
    const Count inherited = j == 0 ? 0 : lex_segment_growth(ring_, j - 1, prefixes_[static_cast<std::size_t>(j - 1)]);
    const LexSlice& s = slices_[static_cast<std::size_t>(j)];
    for (Count r = inherited; r < prefixes_[static_cast<std::size_t>(j)]; ++r)
      if (!s.in_powers(r)) gens.push_back(lex_unrank(ring_, j, r));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

LppIdeal lpp_from_components(const RingContext& ring, std::vector<int> powers,
                             const std::vector<std::vector<Monomial>>& components) {
  validate_powers(ring, powers);
  std::vector<Count> prefixes;
  for (int j = 0; j < static_cast<int>(components.size()); ++j) {
    const LexSlice s(ring, powers, j);
    std::vector<char> member(static_cast<std::size_t>(s.dim()), 0);
    for (const auto& m : components[static_cast<std::size_t>(j)]) {
      if (m.degree() != j) throw Error(Errc::invalid_input, "monomial " + to_string(m) + " in wrong degree");
      member[static_cast<std::size_t>(lex_rank(m))] = 1;
    }
    Count k = 0;
    while (k < s.dim() && (member[static_cast<std::size_t>(k)] || s.in_powers(k))) ++k;
    for (Count r = 0; r < s.dim(); ++r) {
      const bool expected = r < k || s.in_powers(r);
      if (expected != static_cast<bool>(member[static_cast<std::size_t>(r)]))
        throw Error(Errc::precondition, "degree " + std::to_string(j) + " is not pure powers plus a lex segment");
    }
    prefixes.push_back(k);
  }
  return LppIdeal(ring, std::move(powers), std::move(prefixes));
}

LppResult lpp_from_table(const RingContext& ring, std::vector<int> powers, const HilbertTable& t) {
  validate_powers(ring, powers);
  ProfileResult profile = build_lex_profile(ring, powers, t);
  if (profile.failure) return {std::nullopt, std::move(profile.failure)};
  return {LppIdeal(ring, std::move(powers), std::move(profile.prefixes)), std::nullopt};
}

LppResult lpp_from_table(const RingContext& ring, const DegreeSequence& d, const HilbertTable& t) {
  return lpp_from_table(ring, d.entries(), t);
}

Count egh_min_growth(const RingContext& ring, const DegreeSequence& d, int j, Count a) {
  if (j < 0) throw Error(Errc::invalid_input, "negative degree");
  validate_powers(ring, d.entries());
  const LexSlice here(ring, d.entries(), j);
  if (a < here.power_count() || a > here.dim())
    throw Error(Errc::infeasible_value, "HF(I;" + std::to_string(j) + ") = " + std::to_string(a) + " outside [" +
                                            std::to_string(here.power_count()) + ", " + std::to_string(here.dim()) + "]");
  const Count grown = lex_segment_growth(ring, j, here.min_prefix(a));
  return LexSlice(ring, d.entries(), j + 1).union_size(grown);
}

std::optional<Monomial> out(const LppIdeal& L, int j) {
  const Count k = L.lex_prefix(j);
  const LexSlice s(L.ring(), L.powers(), j);
  for (Count r = k; r < s.dim(); ++r)
    if (!s.in_powers(r)) return lex_unrank(L.ring(), j, r);
  return std::nullopt;
}

LppIdeal lemma_lex_transform(const LppIdeal& L, int D, int Dp) {
  if (D < 0) throw Error(Errc::precondition, "D must be nonnegative");
  if (Dp < D) throw Error(Errc::precondition, "need D <= D' (D = " + std::to_string(D) + ", D' = " + std::to_string(Dp) + ")");
  const int socle = socle_degree(std::span<const int>(L.powers()));
  if (Dp > socle)
    throw Error(Errc::precondition, "need D' <= socle degree " + std::to_string(socle) + ", got " + std::to_string(Dp));
  if (L.jmax() < Dp + 1)
    throw Error(Errc::precondition, "LPP ideal known only through degree " + std::to_string(L.jmax()) +
                                        ", need D' + 1 = " + std::to_string(Dp + 1));
  const LexSlice at_D(L.ring(), L.powers(), D);
  if (L.hf(D) <= at_D.power_count())
    throw Error(Errc::precondition, "need HF(L;D) > HF((x^d);D) at D = " + std::to_string(D));

  std::vector<Count> prefixes = L.lex_prefixes();
  for (int j = 0; j <= std::min(Dp, L.jmax()); ++j) {
    auto& k = prefixes[static_cast<std::size_t>(j)];
    if (j < D) {
      k = 0;
      continue;
    }
    const LexSlice s(L.ring(), L.powers(), j);
    const auto smallest = s.smallest_free_in_prefix(k);
    if (!smallest)
      throw Error(Errc::hard_failure, "V_" + std::to_string(j) + " is empty although V_D is not");
    k = *smallest;
  }
  // The result is the only d-LPP candidate for the target table, so a
  // closure failure means no such ideal exists (possible when h = n).
  try {
    return LppIdeal(L.ring(), L.powers(), std::move(prefixes));
  } catch (const Error& e) {
    throw Error(Errc::infeasible_value, std::string("no d-LPP ideal has the transformed table: ") + e.what());
  }
}

LppIdeal add_pure_power(const LppIdeal& L, int dnew) {
  const auto& p = L.powers();
  if (!p.empty() && dnew < p.back())
    throw Error(Errc::invalid_degree_sequence, "new power " + std::to_string(dnew) + " below last entry " +
                                                   std::to_string(p.back()));
  if (dnew < 1) throw Error(Errc::invalid_degree_sequence, "new power must be positive");
  if (static_cast<int>(p.size()) >= L.ring().n())
    throw Error(Errc::invalid_degree_sequence, "no variable left for another pure power");
  std::vector<int> powers = p;
  powers.push_back(dnew);
  return LppIdeal(L.ring(), std::move(powers), L.lex_prefixes());
}

LppIdeal lpp_of_ci(const RingContext& ring, const DegreeSequence& d, const DegreeSequence& dpp, int jmax) {
  if (d.h() != dpp.h()) throw Error(Errc::invalid_degree_sequence, "d and d'' must have the same length");
  for (int i = 0; i < d.h(); ++i)
    if (dpp[i] > d[i]) throw Error(Errc::invalid_degree_sequence, "need d''_i <= d_i entrywise");
  const HilbertTable target = ci_hilbert_table(ring, dpp, jmax).to_side(Side::ideal);
  LppResult r = lpp_from_table(ring, d, target);
  if (!r)
    throw Error(Errc::hard_failure, "no " + to_string(d) + "-LPP ideal matches the CI " + to_string(dpp) +
                                        " (degree " + std::to_string(r.failure->degree) + ", " +
                                        std::string(to_string(r.failure->reason)) + ")");
  return std::move(*r.ideal);
}

EghCheck egh_check(const RingContext& ring, const DegreeSequence& d, const HilbertTable& t) {
  LppResult r = lpp_from_table(ring, d, t);
  EghCheck out;
  out.holds = r.ideal.has_value();
  out.witness = std::move(r.ideal);
  out.failure = std::move(r.failure);
  return out;
}

EghJCheck egh_j_check(const RingContext& ring, const DegreeSequence& d, int j, Count aj, Count aj1) {
  const LexSlice here(ring, d.entries(), j);
  if (aj < here.power_count()) return {false, 0, "below-ci"};
  if (aj > here.dim()) return {false, 0, "above-ring"};
  if (aj1 < 0 || aj1 > ring.slice_dim(j + 1)) return {false, 0, "next value outside slice"};
  const Count bound = egh_min_growth(ring, d, j, aj);
  if (aj1 < bound) return {false, bound, "growth below EGH bound"};
  return {true, bound, ""};
}

std::string to_string(const LppIdeal& L) { return to_string(L.generators()); }

}  // namespace egh
