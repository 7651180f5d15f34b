#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "egh/lpp.hpp"
#include "egh/macaulay.hpp"

using namespace egh;

namespace {

using Key = std::vector<int>;

Key key(const Monomial& m) { return Key(m.exponents().begin(), m.exponents().end()); }

bool power_divides(const Monomial& m, const std::vector<int>& powers) {
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (m[static_cast<int>(i)] >= powers[i]) return true;
  return false;
}

// Closure of an explicit LPP by enumeration: every x_i * m stays inside.
void require_closed(const LppIdeal& L) {
  for (int j = 0; j < L.jmax(); ++j) {
    const auto next = L.component(j + 1);
    std::set<Key> upper;
    for (const auto& m : next) upper.insert(key(m));
    for (const auto& m : L.component(j))
      for (int v = 0; v < L.ring().n(); ++v) REQUIRE(upper.count(key(m.times_var(v))) == 1);
  }
}

// EGH bound from scratch: grow a lex segment one monomial at a time until
// (x^d)_j plus the segment has a elements, then count degree-(j+1) monomials
// that are pure-power multiples or multiples of the set.
Count egh_bound_oracle(int n, const std::vector<int>& d, int j, Count a) {
  const RingContext ring(n);
  const auto slice = monomials_of_degree(ring, j);
  std::set<Key> Lj;
  for (const auto& m : slice)
    if (power_divides(m, d)) Lj.insert(key(m));
  for (const auto& m : slice) {
    if (static_cast<Count>(Lj.size()) >= a) break;
    Lj.insert(key(m));
  }
  std::set<Key> up;
  for (const auto& m : monomials_of_degree(ring, j + 1))
    if (power_divides(m, d)) up.insert(key(m));
  for (const auto& k : Lj)
    for (int v = 0; v < n; ++v) up.insert(key(Monomial(k).times_var(v)));
  return static_cast<Count>(up.size());
}

// All canonical closed prefix profiles of d-LPP ideals on [0, jmax].
void for_each_profile(const RingContext& ring, const std::vector<int>& d, int jmax,
                      const std::function<void(const std::vector<Count>&)>& visit) {
  std::vector<LexSlice> slices;
  for (int j = 0; j <= jmax; ++j) slices.emplace_back(ring, d, j);
  std::vector<Count> cur;
  std::function<void(int)> rec = [&](int j) {
    if (j > jmax) {
      visit(cur);
      return;
    }
    const Count lo = j == 0 ? 0 : lex_segment_growth(ring, j - 1, cur.back());
    const LexSlice& s = slices[static_cast<std::size_t>(j)];
    for (Count k = lo; k <= s.dim(); ++k) {
      if (s.canonical_prefix(k) != k) continue;
      cur.push_back(k);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("lpp_from_table examples") {
  const RingContext r2(2);
  const DegreeSequence d22{2, 2};

  const auto full = lpp_from_table(r2, d22, HilbertTable(r2, Side::ideal, {0, 0, 3, 4}));
  REQUIRE(full);
  CHECK(to_string(*full.ideal) == "(x1^2, x1*x2, x2^2)");
  require_closed(*full.ideal);

  const auto ci = hilbert_table(MonomialIdeal::pure_powers(r2, d22.entries()), 5);
  const auto same = lpp_from_table(r2, d22, ci);
  REQUIRE(same);
  CHECK(*same.ideal == LppIdeal::pure_powers(r2, {2, 2}, 5));
  CHECK(same.ideal->lex_part(2).empty());

  const auto bad = lpp_from_table(r2, d22, HilbertTable(r2, Side::ideal, {0, 0, 2, 3}));
  REQUIRE_FALSE(bad);
  CHECK(bad.failure->degree == 3);

  const auto above = lpp_from_table(r2, std::vector<int>{2, 2}, HilbertTable(r2, Side::ideal, {0, 0, 1}));
  REQUIRE_FALSE(above);
  CHECK(above.failure->reason == InfeasibleReason::below_ci);
}

TEST_CASE("lpp ideal views") {
  const RingContext r3(3);
  const LppIdeal L(r3, {2, 2, 3}, {0, 1, 4, 10, 15});
  CHECK(L.hf(1) == 1);
  CHECK(L.lex_part(2) == std::vector<Monomial>{Monomial{1, 1, 0}, Monomial{1, 0, 1}});
  for (int j = 0; j <= L.jmax(); ++j) {
    std::set<Key> comp;
    for (const auto& m : L.component(j)) comp.insert(key(m));
    REQUIRE(static_cast<Count>(comp.size()) == L.hf(j));
    for (const auto& m : monomials_of_degree(r3, j)) REQUIRE(L.contains(m) == (comp.count(key(m)) == 1));
  }
  require_closed(L);
  std::vector<Monomial> all;
  for (int j = 0; j <= L.jmax(); ++j)
    for (const auto& m : L.component(j)) all.push_back(m);
  CHECK(L.generators() == MonomialIdeal(r3, all));
  CHECK(to_string(L) == "(x1, x2^2, x2*x3^2, x3^3)");
  CHECK(lpp_from_components(r3, {2, 2, 3}, {L.component(0), L.component(1), L.component(2)}) ==
        LppIdeal(r3, {2, 2, 3}, {0, 1, 3}));
  CHECK_THROWS_AS(lpp_from_components(r3, {2, 2, 3}, {{}, {Monomial{0, 1, 0}}}), Error);
  CHECK_THROWS_AS(LppIdeal(r3, {2, 2, 3}, {0, 1, 0}), Error);
}

TEST_CASE("egh_min_growth") {
  CHECK(egh_min_growth(RingContext(4), DegreeSequence{4, 5, 7}, 6, 20) == 41);
  CHECK(egh_min_growth(RingContext(4), DegreeSequence{4, 5, 6}, 6, 20) == 43);
  CHECK_THROWS_AS(egh_min_growth(RingContext(4), DegreeSequence{4, 5, 7}, 6, 13), Error);
  CHECK_THROWS_AS(egh_min_growth(RingContext(4), DegreeSequence{4, 5, 7}, 6, 85), Error);

  const std::vector<std::vector<int>> seqs{{1}, {2}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 4}, {3, 3, 3, 3}};
  for (int n = 1; n <= 4; ++n) {
    const RingContext ring(n);
    for (const auto& d : seqs) {
      if (static_cast<int>(d.size()) > n) continue;
      const DegreeSequence ds(d);
      for (int j = 0; j <= 7; ++j) {
        const LexSlice s(ring, d, j);
        CHECK(egh_min_growth(ring, ds, j, s.power_count()) == LexSlice(ring, d, j + 1).power_count());
        Count prev = -1;
        for (Count a = s.power_count(); a <= s.dim(); ++a) {
          const Count g = egh_min_growth(ring, ds, j, a);
          REQUIRE(g >= prev);
          prev = g;
          if (n <= 3 || j <= 5) REQUIRE(g == egh_bound_oracle(n, d, j, a));
        }
      }
    }
  }
}

TEST_CASE("out") {
  const RingContext r2(2);
  CHECK(out(LppIdeal::pure_powers(r2, {2, 3}, 4), 2) == Monomial{1, 1});
  CHECK(out(LppIdeal::pure_powers(r2, {2, 2}, 4), 2) == Monomial{1, 1});
  CHECK_FALSE(out(LppIdeal::pure_powers(r2, {2, 2}, 4), 3).has_value());
  CHECK(out(LppIdeal::pure_powers(r2, {2, 2}, 4), 0) == Monomial{0, 0});
  CHECK_THROWS_AS(out(LppIdeal::pure_powers(r2, {2, 2}, 4), 5), Error);
}

TEST_CASE("lemma_lex_transform examples") {
  const RingContext r2(2);
  const LppIdeal L(r2, {2, 2}, {0, 1, 3, 4});
  const auto Lp = lemma_lex_transform(L, 1, 2);
  CHECK(Lp.table().values() == std::vector<Count>{0, 0, 2, 4});
  require_closed(Lp);

  const std::vector<int> d{2, 2, 2};
  const RingContext r3(3);
  const int s = socle_degree(std::span<const int>(d));
  std::vector<Count> pref(static_cast<std::size_t>(s) + 2, 0);
  pref[static_cast<std::size_t>(s)] = 10;  // one extra monomial at the socle degree
  pref[static_cast<std::size_t>(s) + 1] = 15;
  const LppIdeal top(r3, d, pref);
  REQUIRE(top.hf(s) == LexSlice(r3, d, s).power_count() + 1);
  const auto dropped = lemma_lex_transform(top, s, s);
  const auto ci = LppIdeal::pure_powers(r3, d, s + 1);
  for (int j = 0; j <= s; ++j) CHECK(dropped.hf(j) == ci.hf(j));
  CHECK(dropped.hf(s + 1) == top.hf(s + 1));

  auto clause = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      CHECK(e.code() == Errc::precondition);
      return std::string(e.what());
    }
    FAIL("expected a precondition error");
    return std::string();
  };
  CHECK(clause([&] { lemma_lex_transform(LppIdeal::pure_powers(r2, {2, 2}, 4), 1, 2); }).find("HF(L;D)") !=
        std::string::npos);
  CHECK(clause([&] { lemma_lex_transform(L, 2, 1); }).find("D <= D'") != std::string::npos);
  CHECK(clause([&] { lemma_lex_transform(L, 1, 3); }).find("socle") != std::string::npos);
  CHECK(clause([&] { lemma_lex_transform(LppIdeal(r2, {2, 2}, {0, 1, 3}), 1, 2); }).find("D' + 1") !=
        std::string::npos);
}

TEST_CASE("lemma_lex_transform matches the three-case formula on random inputs") {
  std::mt19937_64 rng(2024);
  int conforming_free = 0, conforming_artinian = 0, unrealizable = 0;
  for (int attempt = 0; conforming_free < 1000; ++attempt) {
    REQUIRE(attempt < 200000);
    const int n = 1 + static_cast<int>(rng() % 4);
    const int h = 1 + static_cast<int>(rng() % n);
    std::vector<int> d(static_cast<std::size_t>(h));
    for (auto& x : d) x = 1 + static_cast<int>(rng() % 4);
    std::sort(d.begin(), d.end());
    const int s = socle_degree(std::span<const int>(d));
    const RingContext ring(n);
    const int jmax = s + 1 + static_cast<int>(rng() % 2);

    // random closed profile
    std::vector<Count> pref;
    for (int j = 0; j <= jmax; ++j) {
      const LexSlice sl(ring, d, j);
      const Count lo = j == 0 ? 0 : lex_segment_growth(ring, j - 1, pref.back());
      Count k = lo;
      if (rng() % 3 == 0) k = lo + static_cast<Count>(rng() % static_cast<std::uint64_t>(sl.dim() - lo + 1));
      pref.push_back(k);
    }
    const LppIdeal L(ring, d, pref);
    const int D = static_cast<int>(rng() % static_cast<std::uint64_t>(s + 1));
    const int Dp = D + static_cast<int>(rng() % static_cast<std::uint64_t>(s - D + 1));
    const auto ci = hilbert_table(MonomialIdeal::pure_powers(ring, d), jmax);
    if (L.hf(D) <= ci.at(D)) continue;

    std::vector<Count> expected;
    for (int j = 0; j <= jmax; ++j) expected.push_back(j < D ? ci.at(j) : j <= Dp ? L.hf(j) - 1 : L.hf(j));
    const bool realizable = static_cast<bool>(lpp_from_table(ring, d, HilbertTable(ring, Side::ideal, expected)));
    try {
      const auto Lp = lemma_lex_transform(L, D, Dp);
      REQUIRE(Lp.table().values() == expected);
      require_closed(Lp);
      ++(h < n ? conforming_free : conforming_artinian);
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::infeasible_value);
      REQUIRE(h == n);
      REQUIRE_FALSE(realizable);
      ++unrealizable;
    }
  }
  MESSAGE("h < n: " << conforming_free << " conforming; h = n: " << conforming_artinian << " conforming, "
                    << unrealizable << " with no d-LPP ideal for the lemma's table");
  CHECK(conforming_artinian > 0);
}

TEST_CASE("lemma_lex_transform: smallest Artinian input without a conforming ideal") {
  // L = (x1, x2) over d = (2,2): the target table (0, 1, 2, 4) would need
  // x1 in degree 1 but only two of its three degree-2 consequences.
  const RingContext r2(2);
  const LppIdeal L(r2, {2, 2}, {0, 2, 3, 4});
  CHECK(L.generators() == MonomialIdeal(r2, {Monomial{1, 0}, Monomial{0, 1}}));
  CHECK_FALSE(lpp_from_table(r2, DegreeSequence{2, 2}, HilbertTable(r2, Side::ideal, {0, 1, 2, 4})));
  try {
    lemma_lex_transform(L, 1, 2);
    FAIL("expected infeasible_value");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infeasible_value);
  }
  // the same shape with a free variable conforms
  const RingContext r3(3);
  const LppIdeal M(r3, {2, 2}, {0, 2, 5, 9});
  const auto Mp = lemma_lex_transform(M, 1, 2);
  CHECK(Mp.table().values() == std::vector<Count>{0, 1, 4, 9});
}

TEST_CASE("add_pure_power") {
  const RingContext r2(2);
  const LppIdeal L = LppIdeal::pure_powers(r2, {2}, 4);
  const auto ext = add_pure_power(L, 3);
  CHECK(L.hf(3) == 2);
  CHECK(ext.hf(3) == 3);
  CHECK(to_string(ext) == "(x1^2, x2^3)");
  CHECK_THROWS_AS(add_pure_power(L, 1), Error);
  CHECK_THROWS_AS(add_pure_power(ext, 4), Error);

  // power already inside the lex part
  const LppIdeal full(r2, {2}, {0, 2, 3, 4, 5});
  CHECK(add_pure_power(full, 3).hf(3) == full.hf(3));

  // growth equals the multiples of the new power outside L
  const RingContext r3(3);
  std::vector<Count> minimal{0, 0, 3};
  for (int j = 3; j <= 6; ++j) minimal.push_back(lex_segment_growth(r3, j - 1, minimal.back()));
  const LppIdeal M(r3, {2, 2}, minimal);
  const auto Mx = add_pure_power(M, 3);
  for (int j = 0; j <= M.jmax(); ++j) {
    Count outside = 0;
    for (const auto& m : monomials_of_degree(r3, j))
      if (m[2] >= 3 && !M.contains(m)) ++outside;
    CHECK(Mx.hf(j) == M.hf(j) + outside);
  }
}

TEST_CASE("lpp_of_ci") {
  const RingContext r2(2);
  CHECK(lpp_of_ci(r2, DegreeSequence{2, 3}, DegreeSequence{2, 3}, 5) == LppIdeal::pure_powers(r2, {2, 3}, 5));
  const auto L = lpp_of_ci(r2, DegreeSequence{2, 3}, DegreeSequence{2, 2}, 5);
  CHECK(L.table(Side::quotient).values() == std::vector<Count>{1, 2, 1, 0, 0, 0});
  CHECK(to_string(L) == "(x1^2, x1*x2, x2^3)");
  const auto M = lpp_of_ci(RingContext(3), DegreeSequence{2, 2, 2}, DegreeSequence{1, 2, 2}, 4);
  CHECK(M.table(Side::quotient).values() == std::vector<Count>{1, 2, 1, 0, 0});
  CHECK_THROWS_AS(lpp_of_ci(r2, DegreeSequence{2, 2}, DegreeSequence{2, 3}, 4), Error);

  // feasibility on a grid of dpp <= d
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c)
        for (int x = 1; x <= a; ++x)
          for (int y = x; y <= b; ++y)
            for (int z = y; z <= c; ++z) {
              const auto W = lpp_of_ci(RingContext(3), DegreeSequence{a, b, c}, DegreeSequence{x, y, z}, a + b + c);
              REQUIRE(W.table(Side::quotient) == ci_hilbert_table(RingContext(3), DegreeSequence{x, y, z}, a + b + c));
            }
}

TEST_CASE("egh_check and egh_j_check") {
  const RingContext r2(2);
  const DegreeSequence d22{2, 2};
  const auto yes = egh_check(r2, d22, HilbertTable(r2, Side::ideal, {0, 0, 3, 4}));
  CHECK(yes.holds);
  CHECK(to_string(*yes.witness) == "(x1^2, x1*x2, x2^2)");
  const auto ci = egh_check(r2, d22, hilbert_table(MonomialIdeal::pure_powers(r2, d22.entries()), 4));
  CHECK(ci.holds);
  CHECK(*ci.witness == LppIdeal::pure_powers(r2, {2, 2}, 4));
  const auto no = egh_check(r2, d22, HilbertTable(r2, Side::ideal, {0, 1, 2, 3}));
  CHECK_FALSE(no.holds);
  CHECK(no.failure->degree == 2);

  CHECK(egh_j_check(r2, d22, 2, 3, 4).holds);
  CHECK(egh_j_check(r2, d22, 2, 2, 4).holds);
  const auto r = egh_j_check(RingContext(4), DegreeSequence{4, 5, 7}, 6, 20, 40);
  CHECK_FALSE(r.holds);
  CHECK(r.bound == 41);
  CHECK(egh_j_check(RingContext(4), DegreeSequence{4, 5, 7}, 6, 20, 41).holds);
  CHECK(egh_j_check(r2, d22, 2, 1, 4).reason == "below-ci");
  CHECK(egh_j_check(r2, d22, 2, 4, 4).reason == "above-ring");
}

TEST_CASE("witnesses of monomial tables are closed") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const RingContext ring(n);
    const std::vector<int> d = n == 2 ? std::vector<int>{2, 3} : std::vector<int>{2, 2, 3};
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < d.size(); ++i) gens.push_back(Monomial::power(n, static_cast<int>(i), d[i]));
    for (int g = 0; g < 2; ++g) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& x : e) x = static_cast<int>(rng() % 3);
      gens.emplace_back(e);
    }
    const MonomialIdeal I(ring, gens);
    const auto t = hilbert_table(I, socle_degree(std::span<const int>(d)) + 1);
    const auto c = egh_check(ring, DegreeSequence(d), t);
    REQUIRE(c.holds);
    CHECK(c.witness->table() == t);
    require_closed(*c.witness);
  }
}

TEST_CASE("LPP ideals are determined by their Hilbert table") {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {2, {2, 2}}, {2, {2, 3}}, {2, {3, 3}}, {3, {2, 2}}, {3, {2, 3}}, {3, {3, 3}}, {3, {2, 2, 2}}};
  for (const auto& [n, d] : cases) {
    const RingContext ring(n);
    const int jmax = socle_degree(std::span<const int>(d)) + 1;
    std::map<std::vector<Count>, std::set<Key>> seen;
    int profiles = 0;
    for_each_profile(ring, d, jmax, [&](const std::vector<Count>& pref) {
      ++profiles;
      const LppIdeal L(ring, d, pref);
      std::set<Key> monomials;
      for (int j = 0; j <= jmax; ++j)
        for (const auto& m : L.component(j)) monomials.insert(key(m));
      const auto values = L.table().values();
      auto [it, fresh] = seen.emplace(values, monomials);
      REQUIRE((fresh || it->second == monomials));
      const auto back = lpp_from_table(ring, d, L.table());
      REQUIRE(back);
      REQUIRE(*back.ideal == L);
    });
    CHECK(profiles > 1);
  }
}

TEST_CASE("growth of (u, x_n^{d_n}) over a lex-plus-powers ideal") {
  // d' = (d_1..d_{n-1}), d_n = sum (d_i - 1); L is d'-LPP with lex part
  // generated in degrees d_n - 1 and d_n; u = out(L; d_n - 1).
  const std::vector<std::vector<int>> dprimes{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}};
  for (const auto& dp : dprimes) {
    const int n = static_cast<int>(dp.size()) + 1;
    const RingContext ring(n);
    const int dn = socle_degree(std::span<const int>(dp));
    const LexSlice below(ring, dp, dn - 1), at(ring, dp, dn);
    std::set<Key> attaining;
    int max_count = 0;
    for (Count k1 = 0; k1 <= below.dim(); ++k1) {
      if (below.canonical_prefix(k1) != k1) continue;
      for (Count k2 = lex_segment_growth(ring, dn - 1, k1); k2 <= at.dim(); ++k2) {
        if (at.canonical_prefix(k2) != k2) continue;
        std::vector<Count> pref(static_cast<std::size_t>(dn) + 1, 0);
        pref[static_cast<std::size_t>(dn - 1)] = k1;
        pref[static_cast<std::size_t>(dn)] = k2;
        const LppIdeal L(ring, dp, pref);
        const auto u = out(L, dn - 1);
        if (!u) continue;
        std::set<Key> fresh;
        for (int v = 0; v < n; ++v) {
          const Monomial m = u->times_var(v);
          if (!L.contains(m)) fresh.insert(key(m));
        }
        const Monomial xn = Monomial::power(n, n - 1, dn);
        if (!L.contains(xn)) fresh.insert(key(xn));
        const int count = static_cast<int>(fresh.size());
        max_count = std::max(max_count, count);
        if (count == 3) attaining.insert(key(*u));
      }
    }
    CAPTURE(to_string(DegreeSequence(dp)));
    CHECK(max_count <= 3);
    // the attaining u is x_1^{d_1-1} ... x_{n-2}^{d_{n-2}-1} x_{n-1}^{d_{n-1}-2}
    Key expected(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) expected[static_cast<std::size_t>(i)] = dp[static_cast<std::size_t>(i)] - 1;
    expected[static_cast<std::size_t>(n - 2)] -= 1;
    REQUIRE(attaining.size() == 1);
    CHECK(*attaining.begin() == expected);
    MESSAGE("d' = " << to_string(DegreeSequence(dp)) << ": attaining u = " << to_string(Monomial(*attaining.begin())));
  }
}
