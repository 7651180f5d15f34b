#include "egh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace egh {

namespace {

// Runs fn(i) for i in [0, count) on `jobs` threads, interleaved by index,
// and returns the results in index order.
template <class Result, class Fn>
std::vector<Result> run_indexed(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Result> out(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += jobs) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Outcome of one table: nullopt when it passed.
struct TableOutcome {
  std::optional<VerificationFailure> failure;
};

std::optional<VerificationFailure> check_table(const RingContext& ring, const DegreeSequence& d, const HilbertTable& t) {
  const auto r = egh_check(ring, d, t);
  bool all_j = true;
  for (int j = 0; j < t.jmax() && all_j; ++j) all_j = egh_j_check(ring, d, j, t.at(j), t.at(j + 1)).holds;
  if (!r.holds) {
    VerificationFailure f{"egh", std::nullopt, "", {}, t.values()};
    if (r.failure) {
      f.degree = r.failure->degree;
      f.detail = std::string(to_string(r.failure->reason)) + ": " + r.failure->detail;
    }
    if (all_j) f.detail += " (egh_j_check holds at every degree)";
    return f;
  }
  if (!all_j) return VerificationFailure{"egh-j-mismatch", std::nullopt, "egh_check holds but some EGH(j) fails", {}, t.values()};
  return std::nullopt;
}

nlohmann::json generators_json(const MonomialIdeal& I) {
  auto out = nlohmann::json::array();
  for (const auto& g : I.generators()) out.push_back(to_string(g));
  return out;
}

nlohmann::json forms_json(const std::vector<Form>& forms) {
  auto out = nlohmann::json::array();
  for (const auto& f : forms) out.push_back({{"degree", f.degree}, {"coeffs", f.coeffs}});
  return out;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void for_each_containing_ideal(const DegreeSequence& d, const std::function<void(const MonomialIdeal&)>& visit,
                               Count budget) {
  const int n = d.h();
  Count cells = 1;
  for (int v : d.entries()) cells *= v;
  if (cells > budget)
    throw Error(Errc::budget_exceeded, "box of " + to_string(d) + " has " + std::to_string(cells) +
                                           " cells; the budget is " + std::to_string(budget));
  const RingContext ring(n);

  // Box cells by degree, lex-descending within a degree, so divisors come first.
  std::vector<Monomial> box;
  for (int j = 0; j <= socle_degree(d); ++j)
    for (auto& m : monomials_of_degree(ring, j)) {
      bool inside = true;
      for (int i = 0; i < n; ++i) inside = inside && m[i] < d[i];
      if (inside) box.push_back(std::move(m));
    }
  auto code = [&](const Monomial& m) {
    Count c = 0;
    for (int i = 0; i < n; ++i) c = c * d[i] + m[i];
    return static_cast<std::size_t>(c);
  };
  std::vector<std::size_t> position(static_cast<std::size_t>(cells));
  for (std::size_t k = 0; k < box.size(); ++k) position[code(box[k])] = k;
  std::vector<std::vector<std::size_t>> below(box.size());
  for (std::size_t k = 0; k < box.size(); ++k)
    for (int i = 0; i < n; ++i)
      if (box[k][i] > 0) below[k].push_back(position[code(box[k] / Monomial::power(n, i, 1))]);

  std::vector<Monomial> powers;
  for (int i = 0; i < n; ++i) powers.push_back(Monomial::power(n, i, d[i]));

  const std::size_t size = box.size();
  std::vector<signed char> state(size, -1);  // 0 outside the downset, 1 inside
  auto can_include = [&](std::size_t k) {
    return std::all_of(below[k].begin(), below[k].end(), [&](std::size_t b) { return state[b] == 1; });
  };
  auto emit = [&] {
    std::vector<Monomial> gens = powers;
    for (std::size_t k = 0; k < size; ++k)
      if (state[k] == 0 && can_include(k)) gens.push_back(box[k]);
    visit(MonomialIdeal(ring, std::move(gens)));
  };
  std::size_t k = 0;
  for (;;) {
    while (k < size) state[k++] = 0;
    emit();
    bool advanced = false;
    while (k > 0) {
      --k;
      if (state[k] == 0 && can_include(k)) {
        state[k++] = 1;
        advanced = true;
        break;
      }
      state[k] = -1;
    }
    if (!advanced) return;
  }
}

std::vector<MonomialIdeal> enumerate_containing_ideals(const DegreeSequence& d, Count budget) {
  std::vector<MonomialIdeal> out;
  for_each_containing_ideal(d, [&](const MonomialIdeal& I) { out.push_back(I); }, budget);
  return out;
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing) {
  auto failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json e{{"kind", f.kind}, {"detail", f.detail}, {"ideal", f.ideal}, {"table", f.table}};
    e["degree"] = f.degree ? nlohmann::json(*f.degree) : nlohmann::json(nullptr);
    failures.push_back(std::move(e));
  }
  nlohmann::json j{{"scope", report.scope},
                   {"checked", report.checked},
                   {"passed", report.passed},
                   {"resampled", report.resampled},
                   {"failures", failures}};
  if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

VerificationReport verify_egh_monomial(const DegreeSequence& d, unsigned jobs, Count budget) {
  const auto start = std::chrono::steady_clock::now();
  const RingContext ring(d.h());
  const int jmax = socle_degree(d) + 1;
  const auto ideals = enumerate_containing_ideals(d, budget);
  const auto outcomes = run_indexed<TableOutcome>(ideals.size(), jobs, [&](std::size_t i) {
    return TableOutcome{check_table(ring, d, hilbert_table(ideals[i], jmax))};
  });

  VerificationReport report;
  report.scope = {{"mode", "monomial"}, {"d", d.entries()}, {"n", d.h()}, {"range", {0, jmax}}, {"budget", budget}};
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    ++report.checked;
    if (!outcomes[i].failure) {
      ++report.passed;
      continue;
    }
    auto f = *outcomes[i].failure;
    f.ideal = {{"index", i}, {"generators", generators_json(ideals[i])}};
    report.failures.push_back(std::move(f));
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

RandomSample sample_random_ideal_table(const RingContext& ring, const DegreeSequence& d,
                                       const std::vector<int>& extra_degrees, Residue p, std::uint64_t seed) {
  require_prime(p);
  const int n = ring.n();
  const int h = d.h();
  if (h > n) throw Error(Errc::precondition, "a regular sequence of length " + std::to_string(h) +
                                                 " does not fit in " + std::to_string(n) + " variables");
  for (int e : extra_degrees)
    if (e < 1) throw Error(Errc::invalid_input, "extra degrees must be positive");

  RandomSample s;
  s.seed = seed;
  std::mt19937_64 rng(seed);
  for (int e : d.entries()) s.forms.push_back(random_form(ring, e, p, rng));
  for (int e : extra_degrees) s.forms.push_back(random_form(ring, e, p, rng));

  const RingContext reduced_ring(h);
  std::vector<Form> reduced(s.forms.begin(), s.forms.begin() + h);
  if (h < n) {
    for (int i = 0; i < n; ++i) {
      if (i < h) {
        Form x{1, std::vector<Residue>(static_cast<std::size_t>(h), 0)};
        x.coeffs[static_cast<std::size_t>(i)] = 1;
        s.reduction.push_back(std::move(x));
      } else {
        s.reduction.push_back(random_form(reduced_ring, 1, p, rng));
      }
    }
    for (auto& f : reduced) f = substitute_linear(ring, f, reduced_ring, s.reduction, p);
  }

  const int top = socle_degree(d) + 1;
  const auto quotient = hilbert_table_mod_p(reduced_ring, reduced, top, p).to_side(Side::quotient);
  s.regular = quotient == ci_hilbert_table(reduced_ring, d, top);
  if (s.regular) s.table = hilbert_table_mod_p(ring, s.forms, top, p);
  return s;
}

std::uint64_t sample_seed(std::uint64_t seed, Count index, int attempt) {
  return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index)) ^ static_cast<std::uint64_t>(attempt));
}

std::vector<std::vector<int>> default_extra_degree_sets(const DegreeSequence& d) {
  std::vector<std::vector<int>> out;
  const int top = d.back() - 1;
  if (top >= 1) {
    out.push_back({top});
    out.push_back({top, top});
  }
  out.push_back({d[0]});
  out.push_back({d[0] + 1});
  return out;
}

VerificationReport verify_egh_random(const RingContext& ring, const RandomCampaign& c, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  require_prime(c.p);
  if (c.samples < 0) throw Error(Errc::invalid_input, "sample count must be non-negative");
  if (c.max_attempts < 1) throw Error(Errc::invalid_input, "at least one attempt per sample is required");

  struct Outcome {
    Count resampled = 0;
    std::optional<VerificationFailure> failure;
  };
  const auto outcomes = run_indexed<Outcome>(static_cast<std::size_t>(c.samples), jobs, [&](std::size_t i) {
    const std::vector<int> extra =
        c.extra_degree_sets.empty() ? std::vector<int>{} : c.extra_degree_sets[i % c.extra_degree_sets.size()];
    Outcome o;
    for (int attempt = 0; attempt < c.max_attempts; ++attempt) {
      const auto s = sample_random_ideal_table(ring, c.d, extra, c.p, sample_seed(c.seed, static_cast<Count>(i), attempt));
      nlohmann::json ideal{{"sample", i},   {"attempt", attempt},          {"seed", s.seed},
                           {"prime", c.p},  {"forms", forms_json(s.forms)}, {"reduction", forms_json(s.reduction)}};
      if (!s.regular) {
        if (attempt + 1 < c.max_attempts) {
          ++o.resampled;
          continue;
        }
        o.failure = VerificationFailure{"regularity", std::nullopt, "no regular draw within the attempt limit", ideal, {}};
        return o;
      }
      o.failure = check_table(ring, c.d, *s.table);
      if (o.failure) o.failure->ideal = std::move(ideal);
      return o;
    }
    return o;
  });

  VerificationReport report;
  report.scope = {{"mode", "random"},  {"d", c.d.entries()},  {"n", ring.n()},
                  {"prime", c.p},      {"seed", c.seed},      {"samples", c.samples},
                  {"extra", c.extra_degree_sets}, {"range", {0, socle_degree(c.d) + 1}}, {"max_attempts", c.max_attempts}};
  for (const auto& o : outcomes) {
    ++report.checked;
    report.resampled += o.resampled;
    if (o.failure)
      report.failures.push_back(*o.failure);
    else
      ++report.passed;
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

CoverageRecord coverage_classify(const DegreeSequence& d) {
  const int h = d.h();
  if (h <= 2) return {{"h≤2"}, "h≤2"};

  bool cm_strict = true, theorem_a = true;
  int sum = 0;
  for (int i = 0; i < h; ++i) {
    if (i >= 2) {
      cm_strict = cm_strict && d[i] > sum;
      theorem_a = theorem_a && d[i] >= sum;
    }
    sum += d[i] - 1;
  }
  const bool all_two = std::all_of(d.entries().begin(), d.entries().end(), [](int v) { return v == 2; });
  const bool cooper_3dd = h == 3 && d[0] == 3 && d[1] == d[2];

  // Priority order: the most general result first.
  const std::vector<std::pair<std::string, bool>> table{
      {"TheoremA", theorem_a},
      {"CM-strict", cm_strict},
      {"PropCooper-(3,d,d)", cooper_3dd},
      {"PropCooper-(2,2,d,d)", h == 4 && d[0] == 2 && d[1] == 2 && d[2] == d[3]},
      {"Cooper-(2,d2,d3)", h == 3 && d[0] == 2},
      {"Cooper-(3,d,d)", cooper_3dd},
      {"FiveQuadrics", all_two && h <= 5},
  };
  CoverageRecord r;
  for (const auto& [label, applies] : table)
    if (applies) r.labels.push_back(label);
  if (r.labels.empty()) r.labels.push_back("unknown");
  r.strongest = r.labels.front();
  return r;
}

nlohmann::json to_json(const CoverageRecord& record) {
  return {{"labels", record.labels}, {"strongest", record.strongest}};
}

}  // namespace egh
