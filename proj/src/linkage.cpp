#include "egh/linkage.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace egh {

HilbertTable linked_table(const LinkageQuery& query) {
  const int s = query.s;
  if (s < 0) throw Error(Errc::invalid_input, "socle degree must be nonnegative");
  if (query.ci.jmax() < s || query.q.jmax() < s)
    throw Error(Errc::insufficient_range, "linkage needs both tables on [0, " + std::to_string(s) + "]");
  if (!(query.ci.ring() == query.q.ring())) throw Error(Errc::dimension_mismatch, "tables over different rings");
  const HilbertTable ci = query.ci.to_side(Side::quotient);
  const HilbertTable q = query.q.to_side(Side::quotient);
  std::vector<Count> out;
  for (int j = 0; j <= s; ++j) {
    if (q.at(j) > ci.at(j))
      throw Error(Errc::inconsistent_link, "HF(S/Q;" + std::to_string(j) + ") exceeds HF(S/g;" + std::to_string(j) + ")");
    const Count v = ci.at(s - j) - q.at(s - j);
    if (v < 0) throw Error(Errc::inconsistent_link, "negative linked value at degree " + std::to_string(j));
    out.push_back(v);
  }
  try {
    return HilbertTable(ci.ring(), Side::quotient, std::move(out));
  } catch (const Error& e) {
    throw Error(Errc::inconsistent_link, e.what());
  }
}

LinkCheck monomial_link_check(const RingContext& ring, const DegreeSequence& d, const MonomialIdeal& Q) {
  if (d.h() != ring.n()) throw Error(Errc::precondition, "linkage needs h = n");
  for (int i = 0; i < d.h(); ++i)
    if (!Q.contains(Monomial::power(ring.n(), i, d[i])))
      throw Error(Errc::precondition, "Q does not contain x" + std::to_string(i + 1) + "^" + std::to_string(d[i]));
  const int s = socle_degree(d);
  const auto g = MonomialIdeal::pure_powers(ring, d.entries());
  const auto J = colon(g, Q);
  LinkCheck out{false, std::nullopt, hilbert_table(J, s, Side::quotient)};
  const auto predicted = linked_table({ci_hilbert_table(ring, d, s), hilbert_table(Q, s, Side::quotient), s});
  for (int j = 0; j <= s; ++j)
    if (predicted.at(j) != out.linked.at(j)) {
      out.failed_degree = j;
      return out;
    }
  out.holds = true;
  return out;
}

std::string_view to_string(PipelineBranch branch) {
  switch (branch) {
    case PipelineBranch::early_exit: return "early-exit";
    case PipelineBranch::equality: return "growth-three";
    case PipelineBranch::ell_small: return "ell<=n-2";
    case PipelineBranch::ell_large: return "ell>=n-1";
    case PipelineBranch::aborted: return "aborted";
  }
  return "?";
}

bool PipelineTrace::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PipelineCheck& c) { return c.passed; });
}

bool PipelineTrace::core_passed() const {
  if (branch == PipelineBranch::early_exit) return passed();
  for (const char* id : {"a", "b", "c", "d", "e"}) {
    const PipelineCheck* c = find(id);
    if (!c || !c->passed) return false;
  }
  return true;
}

const PipelineCheck* PipelineTrace::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool pipeline_gate(const DegreeSequence& d) {
  if (d.h() < 2) return false;
  int sum = 0;
  for (int i = 0; i + 1 < d.h(); ++i) sum += d[i] - 1;
  return d.back() == sum;
}

namespace {

std::vector<Count> ideal_table(const MonomialIdeal& I, int window) { return hilbert_table(I, window).values(); }

// Degree-j monomials outside `base` that some element of `extra` divides.
Count count_new(const MonomialIdeal& base, const std::vector<Monomial>& extra, int j) {
  Count count = 0;
  for (const auto& m : monomials_of_degree(base.ring(), j)) {
    if (base.contains(m)) continue;
    if (std::any_of(extra.begin(), extra.end(), [&](const Monomial& e) { return e.divides(m); })) ++count;
  }
  return count;
}

std::string numbers(std::initializer_list<std::pair<const char*, Count>> items) {
  std::string out;
  for (const auto& [name, v] : items) {
    if (!out.empty()) out += ", ";
    out += name;
    out += " = ";
    out += std::to_string(v);
  }
  return out;
}

// d-LPP form of an explicit ideal on [0, window], if it has that form.
std::optional<LppIdeal> as_lpp(const MonomialIdeal& I, const std::vector<int>& powers, int window) {
  std::vector<std::vector<Monomial>> comps;
  for (int j = 0; j <= window; ++j) comps.push_back(I.component(j));
  try {
    return lpp_from_components(I.ring(), powers, comps);
  } catch (const Error& e) {
    if (e.code() != Errc::precondition) throw;
    return std::nullopt;
  }
}

class Recorder {
 public:
  explicit Recorder(PipelineTrace& t) : t_(t) {}
  bool operator()(std::string id, std::string identity, bool ok, std::string detail) {
    t_.checks.push_back({std::move(id), std::move(identity), ok, std::move(detail)});
    return ok;
  }

 private:
  PipelineTrace& t_;
};

}  // namespace

PipelineTrace socle_pipeline(const RingContext& ring, const DegreeSequence& d, const LppIdeal& L1) {
  const int n = ring.n();
  if (d.h() != n) throw Error(Errc::precondition, "pipeline needs h = n");
  if (!pipeline_gate(d))
    throw Error(Errc::precondition, "need d_n = sum_{i<n}(d_i - 1), got d = " + to_string(d));
  const int dn = d.back();
  const std::vector<int> dprime(d.entries().begin(), d.entries().end() - 1);
  if (!(L1.ring() == ring) || L1.powers() != dprime)
    throw Error(Errc::precondition, "L1 must be a d'-LPP ideal over d' = " + to_string(DegreeSequence(dprime)));
  const int s = 2 * dn - 2;  // socle degree of S/(x^{d''})
  if (L1.jmax() < s)
    throw Error(Errc::insufficient_range, "L1 must be known through degree " + std::to_string(s));

  PipelineTrace t;
  t.n = n;
  t.window = s;
  t.d = d.entries();
  t.d_prime = dprime;
  t.d_second = dprime;
  t.d_second.push_back(dn - 1);
  t.permutation.resize(t.d_second.size());
  std::iota(t.permutation.begin(), t.permutation.end(), 0);
  std::stable_sort(t.permutation.begin(), t.permutation.end(),
                   [&](int a, int b) { return t.d_second[static_cast<std::size_t>(a)] < t.d_second[static_cast<std::size_t>(b)]; });
  for (int i : t.permutation) t.d_second_sorted.push_back(t.d_second[static_cast<std::size_t>(i)]);
  t.l1_table = L1.table().truncated(s).values();
  Recorder check(t);

  const auto g = MonomialIdeal::pure_powers(ring, t.d_second);
  const auto ci_g = ci_hilbert_table(ring, t.d_second, s);
  const HilbertTable Qq = linked_table({ci_g, L1.table(Side::quotient).truncated(s), s});
  const HilbertTable Qi = Qq.to_side(Side::ideal);
  t.q_table = Qi.values();

  const auto ci_dprime = LppIdeal::pure_powers(ring, dprime, s);
  const int D = dn - 2;
  if (L1.hf(D) < ci_dprime.hf(D)) throw Error(Errc::precondition, "HF(L1; d_n - 2) below HF((x^{d'}); d_n - 2)");
  if (L1.hf(D) == ci_dprime.hf(D)) {
    t.branch = PipelineBranch::early_exit;
    check("early-exit", "HF(L1;d_n-2) = HF((x^d');d_n-2) implies HF(S/Q;d_n) = 0",
          Qq.at(dn) == 0, numbers({{"HF(S/Q;d_n)", Qq.at(dn)}}));
    return t;
  }

  // L2 by the lex lemma (h = n - 1 here).
  const LppIdeal L2 = lemma_lex_transform(L1, D, dn - 1);
  {
    bool ok = true;
    for (int j = 0; j <= s; ++j) {
      const Count expected = j < D ? ci_dprime.hf(j) : j <= dn - 1 ? L1.hf(j) - 1 : L1.hf(j);
      ok = ok && L2.hf(j) == expected;
    }
    check("lemma", "HF(L2;j) = CI for j < d_n-2, HF(L1;j)-1 for j = d_n-2, d_n-1, HF(L1;j) after", ok, "");
  }
  t.steps.push_back({"L2", L2.table().truncated(s).values(), L2.generators().generators()});

  const MonomialIdeal P = L2.generators() + MonomialIdeal(ring, {Monomial::power(n, n - 1, dn - 1)});
  t.steps.push_back({"L2+(x_n^{d_n-1})", ideal_table(P, s), P.generators()});
  {
    const Count p1 = hilbert_function(P, dn - 1), p2 = hilbert_function(P, dn - 2);
    const bool lpp = as_lpp(P, t.d_second, s).has_value();
    check("L2+x", "L2+(x_n^{d_n-1}) is d''-LPP, equals HF(L1) at d_n-1 and HF(L1)-1 at d_n-2",
          lpp && p1 == L1.hf(dn - 1) && p2 == L1.hf(dn - 2) - 1,
          numbers({{"HF(P;d_n-1)", p1}, {"HF(L1;d_n-1)", L1.hf(dn - 1)}, {"HF(P;d_n-2)", p2}, {"HF(L1;d_n-2)", L1.hf(dn - 2)}}) +
              (lpp ? "" : "; not d''-LPP"));
  }

  const MonomialIdeal L3 = colon(g, P);
  const auto L3t = hilbert_table(L3, s);
  t.steps.push_back({"L3", L3t.values(), L3.generators()});
  check("link-1", "HF(Q;d_n-1) = HF(L3;d_n-1)", Qi.at(dn - 1) == L3t.at(dn - 1),
        numbers({{"HF(Q;d_n-1)", Qi.at(dn - 1)}, {"HF(L3;d_n-1)", L3t.at(dn - 1)}}));
  check("link-2", "HF(Q;d_n) = HF(L3;d_n) - 1", Qi.at(dn) == L3t.at(dn) - 1,
        numbers({{"HF(Q;d_n)", Qi.at(dn)}, {"HF(L3;d_n)", L3t.at(dn)}}));

  const LppResult sorted_witness = lpp_from_table(ring, t.d_second_sorted, L3t);
  check("mp-sorted", "a sorted d''-LPP ideal with the Hilbert function of L3 exists", sorted_witness.ideal.has_value(),
        sorted_witness ? "" : sorted_witness.failure->detail);
  const LppResult L4r = lpp_from_table(ring, t.d_second, L3t);
  if (!check("L4", "a d''-LPP ideal L4 (x_n^{d_n-1} on x_n) has the Hilbert function of L3", L4r.ideal.has_value(),
             L4r ? "" : L4r.failure->detail))
    return t;
  const LppIdeal& L4 = *L4r.ideal;
  t.steps.push_back({"L4", L4.table().values(), L4.generators().generators()});

  // W = V_{d_n-1} ⊕ V_{d_n}; L5 = (x^{d'}) + (W).
  t.w = L4.lex_part(dn - 1);
  for (auto& m : L4.lex_part(dn)) t.w.push_back(std::move(m));
  std::vector<Monomial> l5gens = t.w;
  for (int i = 0; i < n - 1; ++i) l5gens.push_back(Monomial::power(n, i, dprime[static_cast<std::size_t>(i)]));
  const MonomialIdeal L5(ring, l5gens);
  t.steps.push_back({"L5", ideal_table(L5, s), L5.generators()});
  {
    const auto L5lpp = as_lpp(L5, dprime, s);
    std::string where;
    if (!L5lpp)
      for (int j = 0; j <= s && where.empty(); ++j)
        if (!as_lpp(L5, dprime, j)) where = "first non-LPP degree " + std::to_string(j);
    check("a", "L5 = (x^{d'}) + (W) is a d'-LPP ideal", L5lpp.has_value(), where);
  }

  for (const auto& m : monomials_of_degree(ring, dn - 1))
    if (!L5.contains(m)) {
      t.u = m;
      break;
    }
  if (!check("b", "u = out(L5; d_n-1) is not 0", t.u.has_value(), "")) return t;
  const Monomial& u = *t.u;
  const Monomial xn_dn = Monomial::power(n, n - 1, dn);
  const Monomial xn_dn1 = Monomial::power(n, n - 1, dn - 1);

  const MonomialIdeal Ld = L5 + MonomialIdeal(ring, {u, xn_dn});
  t.steps.push_back({"L(d)", ideal_table(Ld, s), Ld.generators()});
  check("Ld-lpp", "L(d) = L5 + (u, x_n^{d_n}) is a d-LPP ideal", as_lpp(Ld, d.entries(), s).has_value(), "");

  {
    const Count a = hilbert_function(Ld, dn - 1);
    const Count b = hilbert_function(L5 + MonomialIdeal(ring, {u}), dn - 1);
    const Count c = hilbert_function(L5 + MonomialIdeal(ring, {xn_dn1}), dn - 1);
    const Count l4 = L4.hf(dn - 1);
    check("c", "HF(L(d);d_n-1) = HF(L5+(u);d_n-1) = HF(L5+(x_n^{d_n-1});d_n-1) = HF(L4;d_n-1) = HF(Q;d_n-1)",
          a == b && b == c && c == l4 && l4 == Qi.at(dn - 1),
          numbers({{"HF(L(d))", a}, {"HF(L5+(u))", b}, {"HF(L5+(x_n^{d_n-1}))", c}, {"HF(L4)", l4}, {"HF(Q)", Qi.at(dn - 1)}}));
  }

  t.growth = static_cast<int>(count_new(L5, {u, xn_dn}, dn));
  const Count x_growth = count_new(L5, {xn_dn1}, dn);
  {
    const Count ld = hilbert_function(Ld, dn), l5 = hilbert_function(L5, dn), l4 = L4.hf(dn);
    bool contained = true;
    for (const auto& m : L5.component(dn)) contained = contained && L4.contains(m);
    const Count quotient = l4 - l5;  // HF(L4/L5; d_n) given L5 ⊆ L4
    check("d",
          "HF(L(d);d_n) = HF(L5;d_n) + HF((u,x_n^{d_n},L5)/L5;d_n) = HF(L4;d_n) - HF(L4/L5;d_n) + growth "
          "= HF(Q;d_n) + 1 - HF((x_n^{d_n-1},L5)/L5;d_n) + growth",
          contained && ld == l5 + t.growth && l4 == Qi.at(dn) + 1 && quotient == x_growth,
          numbers({{"HF(L(d);d_n)", ld}, {"HF(L5;d_n)", l5}, {"growth", t.growth}, {"HF(L4;d_n)", l4},
                   {"HF(L4/L5;d_n)", quotient}, {"HF((x_n^{d_n-1},L5)/L5;d_n)", x_growth}, {"HF(Q;d_n)", Qi.at(dn)}}) +
              (contained ? "" : "; L5 not inside L4 in degree d_n"));
  }
  check("e", "HF((u,x_n^{d_n},L5)/L5;d_n) <= 3", t.growth <= 3, numbers({{"growth", t.growth}}));
  {
    const auto r = egh_j_check(ring, d, dn - 1, Qi.at(dn - 1), Qi.at(dn));
    check("egh", "Q satisfies EGH(d_n-1)", r.holds,
          numbers({{"HF(Q;d_n-1)", Qi.at(dn - 1)}, {"HF(Q;d_n)", Qi.at(dn)}, {"bound", r.bound}}));
  }

  const Count ld_q_prev = ring.slice_dim(dn - 1) - hilbert_function(Ld, dn - 1);
  const Count ld_q = ring.slice_dim(dn) - hilbert_function(Ld, dn);
  if (t.growth == 3) {
    t.branch = PipelineBranch::equality;
    std::vector<int> special(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) special[static_cast<std::size_t>(i)] = dprime[static_cast<std::size_t>(i)] - 1;
    special[static_cast<std::size_t>(n - 2)] -= 1;
    check("u-special", "growth 3 only at u = x_1^{d_1-1} ... x_{n-2}^{d_{n-2}-1} x_{n-1}^{d_{n-1}-2}",
          u == Monomial(special), "u = " + to_string(u));
    const Count ci_d = LexSlice(ring, d.entries(), dn - 1).power_count();
    check("u-special-hf", "HF(L(d);d_n-1) = HF((x^d);d_n-1) + 1", hilbert_function(Ld, dn - 1) == ci_d + 1,
          numbers({{"HF(L(d);d_n-1)", hilbert_function(Ld, dn - 1)}, {"HF((x^d);d_n-1)", ci_d}}));
    check("u-special-ci", "Q has the Hilbert function of (x^{d''})", Qq.values() == ci_g.values(), "");
    return t;
  }

  t.ell = n + 1;
  for (int i = 0; i < n; ++i)
    if (!L5.contains(xn_dn1.times_var(i))) {
      t.ell = i + 1;
      break;
    }
  if (t.ell <= n - 2) {
    t.branch = PipelineBranch::ell_small;
    check("ell-small", "ell <= n-2 implies HF((x_n^{d_n-1},L5)/L5;d_n) >= 3", x_growth >= 3,
          numbers({{"ell", t.ell}, {"HF((x_n^{d_n-1},L5)/L5;d_n)", x_growth}}));
  } else {
    t.branch = PipelineBranch::ell_large;
    bool two_vars = true;
    for (int i = 0; i + 2 < n; ++i) two_vars = two_vars && u[i] == 0;
    std::vector<int> bound(static_cast<std::size_t>(n), 0);
    bound[static_cast<std::size_t>(n - 2)] = dprime.back() - 1;
    bound[static_cast<std::size_t>(n - 1)] = dn - dprime.back();
    check("ell-large-u", "u in k[x_{n-1},x_n] and u <=lex x_{n-1}^{d_{n-1}-1} x_n^{d_n-d_{n-1}}",
          two_vars && lex_compare(u, Monomial(bound)) <= 0, "u = " + to_string(u));
    check("ell-large-hf", "HF(S/L(d);d_n-1) <= d_n-1", ld_q_prev <= dn - 1,
          numbers({{"HF(S/L(d);d_n-1)", ld_q_prev}}));
    check("ell-large-drop", "HF(S/Q;d_n) < HF(S/Q;d_n-1)", Qq.at(dn) < Qq.at(dn - 1),
          numbers({{"HF(S/Q;d_n)", Qq.at(dn)}, {"HF(S/Q;d_n-1)", Qq.at(dn - 1)}}));
    check("ell-large-direct", "HF(S/L(d);d_n) = HF(S/L(d);d_n-1) - 1", ld_q == ld_q_prev - 1,
          numbers({{"HF(S/L(d);d_n)", ld_q}, {"HF(S/L(d);d_n-1)", ld_q_prev}}));
  }
  check("conclusion", "HF(L(d);d_n) <= HF(Q;d_n): Q satisfies EGH(d_n-1) with witness L(d)",
        hilbert_function(Ld, dn) <= Qi.at(dn),
        numbers({{"HF(L(d);d_n)", hilbert_function(Ld, dn)}, {"HF(Q;d_n)", Qi.at(dn)}}));
  return t;
}

std::vector<PipelineInput> admissible_pipeline_inputs(const RingContext& ring, const DegreeSequence& d,
                                                      std::size_t budget) {
  if (d.h() != ring.n() || !pipeline_gate(d))
    throw Error(Errc::precondition, "admissible inputs need n = h and d_n = sum_{i<n}(d_i - 1)");
  const int n = ring.n(), dn = d.back();
  const std::vector<int> dprime(d.entries().begin(), d.entries().end() - 1);
  std::vector<int> dsecond = dprime;
  dsecond.push_back(dn - 1);
  const auto g = MonomialIdeal::pure_powers(ring, dsecond);
  const auto base = MonomialIdeal::pure_powers(ring, dprime);
  const Monomial xn = Monomial::power(n, n - 1, dn - 1);

  std::vector<Monomial> optional;
  for (auto& m : monomials_of_degree(ring, dn - 1))
    if (!base.contains(m) && !(m == xn)) optional.push_back(std::move(m));
  if (optional.size() >= 63 || (std::size_t{1} << optional.size()) > budget)
    throw Error(Errc::budget_exceeded, std::to_string(optional.size()) + " optional generators exceed budget " +
                                           std::to_string(budget));

  const int window = 2 * dn - 2;
  std::vector<PipelineInput> out;
  std::set<std::vector<Count>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    std::vector<Monomial> gens = base.generators();
    gens.push_back(xn);
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (mask >> i & 1) gens.push_back(optional[i]);
    MonomialIdeal Q(ring, std::move(gens));
    const auto J = colon(g, Q);
    const auto table = hilbert_table(J, window);
    if (!seen.insert(table.values()).second) continue;
    LppResult L1 = lpp_from_table(ring, dprime, table);
    if (!L1)
      throw Error(Errc::hard_failure, "J = " + to_string(J) + " has no d'-LPP ideal: " + L1.failure->detail);
    out.push_back({std::move(Q), std::move(*L1.ideal)});
  }
  return out;
}

namespace {

nlohmann::json monomials_json(const std::vector<Monomial>& ms) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& m : ms) a.push_back(to_string(m));
  return a;
}

}  // namespace

nlohmann::json to_json(const PipelineTrace& t) {
  nlohmann::json j;
  j["inputs"] = {{"n", t.n},
                 {"d", t.d},
                 {"d_prime", t.d_prime},
                 {"d_second", t.d_second},
                 {"d_second_sorted", t.d_second_sorted},
                 {"permutation", t.permutation},
                 {"window", t.window},
                 {"L1_table", t.l1_table}};
  j["Q_table"] = t.q_table;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"name", s.name}, {"table", s.table}, {"generators", monomials_json(s.generators)}});
  j["steps"] = steps;
  j["W"] = monomials_json(t.w);
  j["u"] = t.u ? nlohmann::json(to_string(*t.u)) : nlohmann::json(nullptr);
  j["growth"] = t.growth;
  j["ell"] = t.ell;
  j["branch"] = std::string(to_string(t.branch));
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : t.checks)
    checks.push_back({{"id", c.id}, {"identity", c.identity}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["passed"] = t.passed();
  return j;
}

}  // namespace egh
