#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "egh/gfp.hpp"
#include "egh/lpp.hpp"

namespace egh {

inline constexpr Count default_box_budget = Count{1} << 20;
inline constexpr Residue default_prime = 32003;

/// Calls `visit` once per monomial ideal containing (x^d), with h = n, as
/// (x^d) + (box monomials outside a divisor-closed subset). The first ideal
/// is S, the last is (x^d). Throws budget_exceeded when prod d_i > budget.
void for_each_containing_ideal(const DegreeSequence& d, const std::function<void(const MonomialIdeal&)>& visit,
                               Count budget = default_box_budget);

std::vector<MonomialIdeal> enumerate_containing_ideals(const DegreeSequence& d, Count budget = default_box_budget);

struct VerificationFailure {
  std::string kind;  // "egh", "egh-j-mismatch" or "regularity"
  std::optional<int> degree;
  std::string detail;
  nlohmann::json ideal;  // generators, or seed and coefficients
  std::vector<Count> table;
};

struct VerificationReport {
  nlohmann::json scope;
  Count checked = 0;
  Count passed = 0;
  Count resampled = 0;  // regularity rejections that were redrawn
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0;
};

nlohmann::json to_json(const VerificationReport& report, bool with_timing = true);

/// egh_check on every ideal of the enumeration, over [0, socle_degree + 1],
/// plus agreement with egh_j_check at every degree of the range.
VerificationReport verify_egh_monomial(const DegreeSequence& d, unsigned jobs = 1, Count budget = default_box_budget);

/// d forms of the regular sequence, then the extra forms.
struct RandomSample {
  std::uint64_t seed = 0;
  std::vector<Form> forms;
  std::vector<Form> reduction;  // linear images used for the regularity certificate when h < n
  bool regular = false;
  std::optional<HilbertTable> table;  // ideal side on [0, socle_degree + 1] when regular
};

/// Draws h forms of degrees d and one form per extra degree over GF(p).
/// Regularity is certified in the Artinian reduction: the last n - h
/// variables are replaced by random linear forms in the first h, and the
/// reduced quotient must match the complete intersection through the socle
/// degree + 1. `regular` is false when the certificate fails.
RandomSample sample_random_ideal_table(const RingContext& ring, const DegreeSequence& d,
                                       const std::vector<int>& extra_degrees, Residue p, std::uint64_t seed);

struct RandomCampaign {
  DegreeSequence d;
  std::vector<std::vector<int>> extra_degree_sets;  // sample i uses set i mod size
  Residue p = default_prime;
  Count samples = 0;
  std::uint64_t seed = 0;
  int max_attempts = 16;
};

/// Seed of sample `index`, attempt `attempt`; independent of the worker count.
std::uint64_t sample_seed(std::uint64_t seed, Count index, int attempt);

/// Extra-degree sets in the spirit of Q = f' + (v_1..v_c): degree d_h - 1,
/// two forms of that degree, degree d_1 and degree d_1 + 1.
std::vector<std::vector<int>> default_extra_degree_sets(const DegreeSequence& d);

VerificationReport verify_egh_random(const RingContext& ring, const RandomCampaign& campaign, unsigned jobs = 1);

struct CoverageRecord {
  std::vector<std::string> labels;
  std::string strongest;
};

/// Known cases covering d. For h <= 2 the record is {"h≤2"} alone.
CoverageRecord coverage_classify(const DegreeSequence& d);

nlohmann::json to_json(const CoverageRecord& record);

}  // namespace egh
