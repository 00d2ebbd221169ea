// Copyright 2026 The ghzlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Common-cause (locality-condition) models, their conditional correlators,
// the sign-assignment contradiction for the four GHZ relations, the
// Heisenberg-Robertson constrained version, the two-party contrast and local
// polytope membership.
//
// Local quantities are ordered (i_x, i_y, j_x, j_y, k_x, k_y): party-major,
// x before y.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ghzlab/json.hpp"
#include "ghzlab/mermin.hpp"
#include "ghzlab/qcore.hpp"
#include "ghzlab/rng.hpp"

namespace ghzlab {

inline constexpr int kLocalQuantities = 6;
inline constexpr int kStrategyCount = 64;
inline constexpr int kRelationCount = 4;

/// Right-hand sides of the four GHZ relations for patterns xxx, xyy, yxy, yyx.
inline constexpr std::array<int, kRelationCount> kGhzTargets{+1, -1, -1, -1};

inline constexpr int quantity_index(int party, Setting s) {
  return 2 * party + (s == Setting::Y ? 1 : 0);
}

/// One common cause mu: weight p_mu and, per party and setting, the
/// probability of outcome +1.
struct Cause {
  double weight = 1.0;
  std::array<std::array<double, 2>, kQubits> p_plus{};  // [party][x=0 / y=1]
};

class LocalModel {
 public:
  /// Throws InputError unless weights are >= 0 and sum to 1 within 1e-12 and
  /// every response probability lies in [0, 1].
  explicit LocalModel(std::vector<Cause> causes);

  const std::vector<Cause>& causes() const { return causes_; }

 private:
  std::vector<Cause> causes_;
};

/// Six values in [-1, 1], ordered as quantity_index.
struct CorrelatorVector {
  std::array<double, kLocalQuantities> values{};

  double at(int party, Setting s) const { return values[quantity_index(party, s)]; }
};

/// Six values in {+1, -1}; also serves as a deterministic strategy.
struct SignAssignment {
  std::array<int, kLocalQuantities> signs{1, 1, 1, 1, 1, 1};

  int at(int party, Setting s) const { return signs[quantity_index(party, s)]; }
  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

using DeterministicStrategy = SignAssignment;

/// Joint outcome probabilities for the four GHZ patterns (kGhzPatterns order),
/// each block indexed by outcome_index.
struct CorrelationTable {
  std::array<std::array<double, kDim>, kRelationCount> blocks{};

  /// Throws MalformedTable unless every block is nonnegative and sums to 1
  /// within 1e-12.
  void validate() const;
};

double model_joint_probability(const LocalModel& model,
                               const SettingsPattern& settings,
                               const std::array<int, kQubits>& outcomes);

/// Correlators of cause mu: 2 p(+1) - 1 per party and setting.
CorrelatorVector correlators(const LocalModel& model, std::size_t mu);

/// sum_mu p_mu * a * b * c for an arbitrary pattern.
double model_triple_correlation(const LocalModel& model,
                                const SettingsPattern& settings);

/// The four mixture sums for xxx, xyy, yxy, yyx.
std::array<double, kRelationCount> model_triple_correlations(const LocalModel& model);

/// (<M>, <M'>) predicted by a common-cause model.
MerminPoint model_mermin_point(const LocalModel& model);

/// Random finite mixture with `causes` causes; weights are normalized
/// uniforms, responses uniform in [0, 1].
LocalModel random_local_model(Rng& rng, int causes);

// ---------------------------------------------------------------------------
// Strategies and the sign-level contradiction.

/// All 64 strategies; strategy s has quantity q equal to -1 iff bit (5 - q)
/// of s is set, so index 0 is all +1.
std::vector<DeterministicStrategy> enumerate_strategies();
DeterministicStrategy strategy_at(int index);

/// Point-mass model realizing a deterministic strategy.
LocalModel strategy_model(const DeterministicStrategy& s);

/// Left-hand side a*b*c of GHZ relation r (0..3) under a sign assignment.
int relation_product(const SignAssignment& s, int relation);
double relation_product(const CorrelatorVector& c, int relation);

struct InfeasibilityReport {
  int assignments_checked = 0;
  int satisfying = 0;       // assignments meeting all four relations
  int max_subset = 0;       // most relations any single assignment meets
  int parity_lhs = 0;       // product of the four left-hand sides (same for all)
  int parity_rhs = 0;       // product of the four right-hand sides
  bool parity_uniform = false;  // parity_lhs held for every assignment
  /// For each 3-subset (the one omitting relation r), the first assignment
  /// that satisfies it.
  std::array<std::optional<int>, kRelationCount> triple_witness{};
};

InfeasibilityReport ghz_sign_feasibility();
nlohmann::json infeasibility_to_json(const InfeasibilityReport& r);

struct HrSatisfiability {
  int max_satisfied = 0;
  unsigned relations_mask = 0;  // bit r set when relation r is met by witness
  CorrelatorVector witness;
};

/// Largest number of the four relations that hold within `tolerance` for
/// correlators obeying x^2 + y^2 <= 1 per party (or only |x|, |y| <= 1 when
/// `heisenberg_robertson` is false). Exact case analysis over subsets of
/// relations. Throws ToleranceOutOfRange unless 0 < tolerance < 1.
HrSatisfiability hr_constrained_satisfiability(double tolerance,
                                               bool heisenberg_robertson = true);

/// Relations among the four met within tolerance by the given correlators.
int count_satisfied(const CorrelatorVector& c, double tolerance, unsigned* mask = nullptr);

struct HrCrosscheck {
  int max_satisfied = 0;
  /// Best min over relations of target * product, per relation subset mask
  /// (index 0 unused).
  std::array<double, 16> best_margin{};
};

/// Random-restart maximization of the worst relation in each subset over
/// the boundary of the Heisenberg-Robertson disc.
HrCrosscheck hr_numeric_crosscheck(double tolerance, std::uint64_t seed,
                                   int restarts);

struct TwoPartyAssignment {
  int i_x = 1, i_y = 1, j_x = 1, j_y = 1;
};

/// First assignment (i_x, i_y, j_x, j_y), +1 before -1, with i_x j_x = c1 and
/// i_y j_y = c2.
std::optional<TwoPartyAssignment> epr_contrast(int c1, int c2);

// ---------------------------------------------------------------------------
// Tables and polytope membership.

CorrelationTable model_to_table(const LocalModel& model);
CorrelationTable state_table(const State& state);

/// <M> implied by the four blocks.
double table_mermin_value(const CorrelationTable& table);

struct MembershipResult {
  bool inside = false;
  std::vector<double> weights;  // over enumerate_strategies(), when inside
  double max_residual = 0.0;
};

inline constexpr double kMembershipTol = 1e-9;

/// Decides whether some mixture of the 64 strategies reproduces all 32 table
/// entries within 1e-9. Throws MalformedTable for invalid tables.
MembershipResult polytope_membership(const CorrelationTable& table);

/// {"blocks": {"xxx": [8], "xyy": [8], "yxy": [8], "yyx": [8]}}.
CorrelationTable table_from_json(const nlohmann::json& doc);
nlohmann::json table_to_json(const CorrelationTable& table);

}  // namespace ghzlab
