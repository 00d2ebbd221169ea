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


// Maxima of the Mermin pair over the model classes, eigensolve oracles for
// the quantum maxima, and white-noise visibility thresholds.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "ghzlab/json.hpp"
#include "ghzlab/locality.hpp"
#include "ghzlab/mermin.hpp"
#include "ghzlab/qcore.hpp"

namespace ghzlab {

enum class ModelClass { kLocal, kRealistic, kQuantumLocal, kBiseparable, kQuantum };

std::string_view class_tag(ModelClass c);
/// Throws InputError for unknown tags.
ModelClass parse_model_class(std::string_view tag);

enum class MerminOperator { kM, kMPrime };

inline constexpr int kDefaultRestarts = 32;

struct StrategyArgmax {
  int index = 0;
  SignAssignment signs;
  double signed_value = 0.0;
};

/// Values chosen for the four triple products of the operator's terms.
struct TermValuesArgmax {
  std::array<int, 4> products{};
  double signed_value = 0.0;
};

struct ProductArgmax {
  std::array<BlochAngles, kQubits> qubits{};
  MerminPoint point;
};

struct BiseparableArgmax {
  int lone_qubit = 0;  // cut lone_qubit | other two
  BlochAngles lone;
  std::array<Complex, 4> pair{};
  MerminPoint point;
};

struct StateArgmax {
  Vector8 amplitudes = Vector8::Zero();
  MerminPoint point;
};

using Argmax = std::variant<StrategyArgmax, TermValuesArgmax, ProductArgmax,
                            BiseparableArgmax, StateArgmax>;

struct OptimizationResult {
  ModelClass model_class = ModelClass::kLocal;
  MerminOperator op = MerminOperator::kM;  // local and realistic only
  double best_value = 0.0;
  Argmax argmax;
  int restarts_used = 0;
  std::uint64_t seed = 0;
  /// Independent value the ascent is checked against (closed form or
  /// eigensolve), for the ascent-based classes.
  std::optional<double> reference_value;
};

/// {"class", "value", "argmax": {...}, "restarts", "seed"}.
nlohmann::json result_to_json(const OptimizationResult& r);

/// Exact max of |<M>| (or |<M'>|) over the 64 deterministic strategies.
OptimizationResult max_local_mermin(MerminOperator op = MerminOperator::kM);

/// Exact max when the four triple products are free values in [-1, 1]
/// (attained at a vertex of the box).
OptimizationResult max_realistic_mermin(MerminOperator op = MerminOperator::kM);

/// Closed-form radius^2 of a product state: prod_k (x_k^2 + y_k^2).
double product_radius2_closed_form(const std::array<BlochAngles, kQubits>& qubits);

/// Max of <M>^2 + <M'>^2 over pure product states by random-restart ascent
/// over Bloch angles, checked against the closed-form maximum 1.
/// Throws RestartBudgetExhausted if the ascent misses it by more than 1e-4.
OptimizationResult max_quantum_local_radius(int restarts, std::uint64_t seed);

/// Same over states separable across the cut lone_qubit | rest.
OptimizationResult max_biseparable_radius_for_cut(int lone_qubit, int restarts,
                                                  std::uint64_t seed);

/// Best over the three cuts, checked against biseparable_radius2_oracle().
OptimizationResult max_biseparable_radius(int restarts, std::uint64_t seed);

/// Max over all pure states, checked against pencil_radius2_oracle(). A warm
/// start that already attains the oracle value is returned without ascent
/// (restarts_used = 0).
OptimizationResult max_quantum_radius(int restarts, std::uint64_t seed,
                                      const std::optional<StateVector>& warm_start = {});

/// Largest eigenvalue of the matrix M^2 + M'^2.
double top_eigenvalue_m2_plus_mprime2();

/// max over theta of lambda_max(cos(theta) M + sin(theta) M')^2, which
/// equals max over states of <M>^2 + <M'>^2. Scanned on `grid` angles.
double pencil_radius2_oracle(int grid = 1024);

/// Same construction for the lone-qubit cut: the lone qubit's Bloch vector
/// is scanned on the unit circle of its x-y plane together with the pencil
/// angle, with a 4x4 eigensolve for the pair at each grid point.
double biseparable_radius2_oracle(int lone_qubit, int grid = 128);

enum class NoiseBound { kLocality, kQuantumLocality };

std::string_view bound_tag(NoiseBound b);
NoiseBound parse_noise_bound(std::string_view tag);

/// Smallest v such that v GHZ + (1 - v) I/8 violates the bound, by bisection
/// to within tol/2. Throws ToleranceOutOfRange for tol <= 0 and NoViolation
/// if v = 1 satisfies the bound.
double noise_threshold(NoiseBound bound, double tol);

}  // namespace ghzlab
