#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "egh/lpp.hpp"

namespace egh {

/// Quotient-side tables of S/g (g a Gorenstein CI with socle degree s) and of
/// S/Q for some Q containing g.
struct LinkageQuery {
  HilbertTable ci;
  HilbertTable q;
  int s = 0;
};

/// HF(S/J; j) = HF(S/g; s-j) - HF(S/Q; s-j) on [0, s] for J = g : Q.
/// Throws insufficient_range when a table stops before s and
/// inconsistent_link when an entry would be negative.
HilbertTable linked_table(const LinkageQuery& query);

struct LinkCheck {
  bool holds = false;
  std::optional<int> failed_degree;
  HilbertTable linked;  // J = (x^d) : Q by monomial colon, quotient side
};

/// Computes J = (x^d) : Q and compares its table with linked_table on [0, s].
/// Requires h = n and every x_i^{d_i} in Q (precondition otherwise).
LinkCheck monomial_link_check(const RingContext& ring, const DegreeSequence& d, const MonomialIdeal& Q);

struct PipelineCheck {
  std::string id;        // "a".."e" for the core checks
  std::string identity;  // the relation being instantiated
  bool passed = false;
  std::string detail;
};

struct PipelineStep {
  std::string name;
  std::vector<Count> table;  // ideal side on [0, window]
  std::vector<Monomial> generators;
};

enum class PipelineBranch { early_exit, equality, ell_small, ell_large, aborted };

std::string_view to_string(PipelineBranch branch);

/// Everything the construction chain produced for one L1, stored by value so
/// each check can be re-derived from the trace.
struct PipelineTrace {
  int n = 0;
  int window = 0;
  std::vector<int> d;
  std::vector<int> d_prime;
  std::vector<int> d_second;         // (d_1..d_{n-1}, d_n - 1), left unsorted
  std::vector<int> d_second_sorted;
  std::vector<int> permutation;      // d_second_sorted[i] = d_second[permutation[i]]
  std::vector<Count> l1_table;
  std::vector<Count> q_table;        // ideal side, recovered by linkage from L1
  std::vector<PipelineStep> steps;   // L2, L2+(x_n^{d_n-1}), L3, L4, L5, L(d)
  std::vector<Monomial> w;
  std::optional<Monomial> u;
  int growth = -1;                   // HF((u, x_n^{d_n}, L5)/L5; d_n)
  int ell = 0;
  PipelineBranch branch = PipelineBranch::aborted;
  std::vector<PipelineCheck> checks;

  bool passed() const;
  /// Checks (a)..(e) only.
  bool core_passed() const;
  const PipelineCheck* find(std::string_view id) const;
};

/// The construction chain of the socle-degree argument on monomial data.
/// Requires n = h, d_n = sum_{i<n}(d_i - 1), L1 over d' = (d_1..d_{n-1}) known
/// through degree 2 d_n - 2 with HF(L1; d_n - 2) >= HF((x^{d'}); d_n - 2), and
/// L1's table linkable against (x^{d''}). Violations throw; failing checks are
/// recorded in the trace.
PipelineTrace socle_pipeline(const RingContext& ring, const DegreeSequence& d, const LppIdeal& L1);

/// Monomial model of the proof's setting: Q = (x^{d'}) + (M) with M a set of
/// degree-(d_n - 1) monomials containing x_n^{d_n - 1}, g = (x^{d''}),
/// J = g : Q and L1 the d'-LPP ideal with the Hilbert function of J.
struct PipelineInput {
  MonomialIdeal q;
  LppIdeal l1;
};

/// All admissible inputs for d, one per distinct L1, in a fixed order.
/// Throws budget_exceeded when more than `budget` choices of M would be
/// examined, and hard_failure when some J has no d'-LPP ideal.
std::vector<PipelineInput> admissible_pipeline_inputs(const RingContext& ring, const DegreeSequence& d,
                                                      std::size_t budget = 1u << 16);

/// True when d_n = sum_{i<n}(d_i - 1) with n = h >= 2.
bool pipeline_gate(const DegreeSequence& d);

nlohmann::json to_json(const PipelineTrace& trace);

}  // namespace egh
