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


#include "ghzlab/locality.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ghzlab/ascent.hpp"
#include "ghzlab/errors.hpp"
#include "ghzlab/simplex.hpp"

namespace ghzlab {
namespace {

int setting_slot(Setting s) { return s == Setting::X ? 0 : 1; }

double response(const Cause& c, int party, Setting s, int outcome) {
  const double p = c.p_plus[party][setting_slot(s)];
  return outcome > 0 ? p : 1.0 - p;
}

SettingsPattern term_pattern(const PauliTerm& t) {
  SettingsPattern p{};
  for (int q = 0; q < kQubits; ++q) {
    if (t.factors[q] == Pauli::X) {
      p[q] = Setting::X;
    } else if (t.factors[q] == Pauli::Y) {
      p[q] = Setting::Y;
    } else {
      throw std::logic_error("Mermin terms use only X and Y factors");
    }
  }
  return p;
}

int ghz_pattern_index(const SettingsPattern& p) {
  for (int r = 0; r < kRelationCount; ++r) {
    if (kGhzPatterns[r] == p) return r;
  }
  return -1;
}

const std::array<const char*, kRelationCount> kPatternKeys{"xxx", "xyy", "yxy", "yyx"};

}  // namespace

LocalModel::LocalModel(std::vector<Cause> causes) : causes_(std::move(causes)) {
  if (causes_.empty()) throw InputError("local model needs at least one cause");
  double total = 0.0;
  for (const auto& c : causes_) {
    if (!(c.weight >= 0.0)) throw InputError("cause weights must be nonnegative");
    total += c.weight;
    for (const auto& party : c.p_plus) {
      for (double p : party) {
        if (!(p >= 0.0 && p <= 1.0)) {
          throw InputError("response probabilities must lie in [0, 1]");
        }
      }
    }
  }
  if (std::abs(total - 1.0) > kIdentityTol) {
    std::ostringstream msg;
    msg << "cause weights sum to " << total << ", expected 1";
    throw InputError(msg.str());
  }
}

void CorrelationTable::validate() const {
  for (int r = 0; r < kRelationCount; ++r) {
    double sum = 0.0;
    for (double p : blocks[r]) {
      if (!(p >= -kIdentityTol) || !std::isfinite(p)) {
        throw MalformedTable(std::string("block ") + kPatternKeys[r] +
                             " has a negative or non-finite entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kIdentityTol) {
      std::ostringstream msg;
      msg << "block " << kPatternKeys[r] << " sums to " << sum << ", expected 1";
      throw MalformedTable(msg.str());
    }
  }
}

double model_joint_probability(const LocalModel& model,
                               const SettingsPattern& settings,
                               const std::array<int, kQubits>& outcomes) {
  double total = 0.0;
  for (const auto& c : model.causes()) {
    double term = c.weight;
    for (int q = 0; q < kQubits; ++q) term *= response(c, q, settings[q], outcomes[q]);
    total += term;
  }
  return total;
}

CorrelatorVector correlators(const LocalModel& model, std::size_t mu) {
  if (mu >= model.causes().size()) throw InputError("cause index out of range");
  const Cause& c = model.causes()[mu];
  CorrelatorVector out;
  for (int q = 0; q < kQubits; ++q) {
    for (Setting s : {Setting::X, Setting::Y}) {
      // sum over outcomes o = +-1 of o * p_o.
      out.values[quantity_index(q, s)] = response(c, q, s, +1) - response(c, q, s, -1);
    }
  }
  return out;
}

double model_triple_correlation(const LocalModel& model,
                                const SettingsPattern& settings) {
  double total = 0.0;
  for (std::size_t mu = 0; mu < model.causes().size(); ++mu) {
    const CorrelatorVector c = correlators(model, mu);
    total += model.causes()[mu].weight * c.at(0, settings[0]) * c.at(1, settings[1]) *
             c.at(2, settings[2]);
  }
  return total;
}

std::array<double, kRelationCount> model_triple_correlations(const LocalModel& model) {
  std::array<double, kRelationCount> out{};
  for (int r = 0; r < kRelationCount; ++r) {
    out[r] = model_triple_correlation(model, kGhzPatterns[r]);
  }
  return out;
}

MerminPoint model_mermin_point(const LocalModel& model) {
  const MerminPair pair = make_mermin_pair();
  auto value = [&](const Observable& obs) {
    double v = 0.0;
    for (const auto& t : obs.terms()) {
      v += t.coefficient * model_triple_correlation(model, term_pattern(t));
    }
    return v;
  };
  return {value(pair.m), value(pair.mprime)};
}

LocalModel random_local_model(Rng& rng, int causes) {
  if (causes < 1) throw InputError("local model needs at least one cause");
  std::vector<Cause> cs(causes);
  double total = 0.0;
  for (auto& c : cs) {
    c.weight = rng.uniform() + 1e-3;
    total += c.weight;
    for (auto& party : c.p_plus) {
      for (double& p : party) p = rng.uniform();
    }
  }
  for (auto& c : cs) c.weight /= total;
  return LocalModel(std::move(cs));
}

DeterministicStrategy strategy_at(int index) {
  if (index < 0 || index >= kStrategyCount) throw InputError("strategy index out of range");
  DeterministicStrategy s;
  for (int q = 0; q < kLocalQuantities; ++q) {
    s.signs[q] = ((index >> (kLocalQuantities - 1 - q)) & 1) ? -1 : 1;
  }
  return s;
}

std::vector<DeterministicStrategy> enumerate_strategies() {
  std::vector<DeterministicStrategy> out;
  out.reserve(kStrategyCount);
  for (int i = 0; i < kStrategyCount; ++i) out.push_back(strategy_at(i));
  return out;
}

LocalModel strategy_model(const DeterministicStrategy& s) {
  Cause c;
  c.weight = 1.0;
  for (int q = 0; q < kQubits; ++q) {
    for (Setting st : {Setting::X, Setting::Y}) {
      c.p_plus[q][setting_slot(st)] = s.at(q, st) > 0 ? 1.0 : 0.0;
    }
  }
  return LocalModel({c});
}

int relation_product(const SignAssignment& s, int relation) {
  const SettingsPattern& p = kGhzPatterns[relation];
  return s.at(0, p[0]) * s.at(1, p[1]) * s.at(2, p[2]);
}

double relation_product(const CorrelatorVector& c, int relation) {
  const SettingsPattern& p = kGhzPatterns[relation];
  return c.at(0, p[0]) * c.at(1, p[1]) * c.at(2, p[2]);
}

InfeasibilityReport ghz_sign_feasibility() {
  InfeasibilityReport rep;
  rep.parity_rhs = 1;
  for (int t : kGhzTargets) rep.parity_rhs *= t;
  rep.parity_uniform = true;
  for (const auto& s : enumerate_strategies()) {
    ++rep.assignments_checked;
    int lhs = 1;
    unsigned met = 0;
    for (int r = 0; r < kRelationCount; ++r) {
      const int v = relation_product(s, r);
      lhs *= v;
      if (v == kGhzTargets[r]) met |= 1u << r;
    }
    if (rep.assignments_checked == 1) rep.parity_lhs = lhs;
    if (lhs != rep.parity_lhs) rep.parity_uniform = false;
    const int count = std::popcount(met);
    rep.max_subset = std::max(rep.max_subset, count);
    if (count == kRelationCount) ++rep.satisfying;
    for (int omit = 0; omit < kRelationCount; ++omit) {
      const unsigned want = 0xFu & ~(1u << omit);
      if ((met & want) == want && !rep.triple_witness[omit]) {
        rep.triple_witness[omit] = rep.assignments_checked - 1;
      }
    }
  }
  return rep;
}

nlohmann::json infeasibility_to_json(const InfeasibilityReport& r) {
  return {
      {"assignments_checked", r.assignments_checked},
      {"satisfying", r.satisfying},
      {"max_subset", r.max_subset},
      {"parity_lhs", r.parity_lhs},
      {"parity_rhs", r.parity_rhs},
  };
}

int count_satisfied(const CorrelatorVector& c, double tolerance, unsigned* mask) {
  unsigned met = 0;
  for (int r = 0; r < kRelationCount; ++r) {
    if (std::abs(relation_product(c, r) - kGhzTargets[r]) <= tolerance) met |= 1u << r;
  }
  if (mask) *mask = met;
  return std::popcount(met);
}

HrSatisfiability hr_constrained_satisfiability(double tolerance,
                                               bool heisenberg_robertson) {
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    std::ostringstream msg;
    msg << "tolerance " << tolerance << " outside (0, 1)";
    throw ToleranceOutOfRange(msg.str());
  }
  // A relation within tolerance < 1 needs the right sign and |a b c| >= 1 - tol.
  // Signs: decided by enumeration. Magnitudes: per party with nx relations
  // reading x and ny reading y, |x|^nx |y|^ny on x^2 + y^2 <= 1 peaks at
  // tan^2 t = ny / nx, so the product of the subset's magnitudes is bounded
  // by the value at those angles. If all magnitudes are equal there, the
  // bound on the smallest one is tight.
  const auto strategies = enumerate_strategies();
  HrSatisfiability best;
  for (unsigned mask = 1; mask < (1u << kRelationCount); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best.max_satisfied) continue;

    const DeterministicStrategy* signs = nullptr;
    for (const auto& s : strategies) {
      bool ok = true;
      for (int r = 0; r < kRelationCount && ok; ++r) {
        if ((mask >> r & 1u) && relation_product(s, r) != kGhzTargets[r]) ok = false;
      }
      if (ok) {
        signs = &s;
        break;
      }
    }
    if (!signs) continue;

    CorrelatorVector w;
    for (int q = 0; q < kQubits; ++q) {
      int nx = 0, ny = 0;
      for (int r = 0; r < kRelationCount; ++r) {
        if (!(mask >> r & 1u)) continue;
        (kGhzPatterns[r][q] == Setting::X ? nx : ny) += 1;
      }
      double mx = 1.0, my = 1.0;
      if (heisenberg_robertson) {
        if (ny == 0) {
          my = 0.0;
        } else if (nx == 0) {
          mx = 0.0;
        } else {
          const double t = std::atan(std::sqrt(static_cast<double>(ny) / nx));
          mx = std::cos(t);
          my = std::sin(t);
        }
      }
      w.values[quantity_index(q, Setting::X)] = signs->at(q, Setting::X) * mx;
      w.values[quantity_index(q, Setting::Y)] = signs->at(q, Setting::Y) * my;
    }

    double lower = 1.0, log_product = 0.0;
    for (int r = 0; r < kRelationCount; ++r) {
      if (!(mask >> r & 1u)) continue;
      const double m = std::abs(relation_product(w, r));
      lower = std::min(lower, m);
      log_product += std::log(m);
    }
    const double upper = std::exp(log_product / size);
    if (lower >= 1.0 - tolerance) {
      unsigned met = 0;
      count_satisfied(w, tolerance, &met);
      if ((met & mask) != mask) throw std::logic_error("constructed witness misses its relations");
      best.max_satisfied = size;
      best.relations_mask = mask;
      best.witness = w;
    } else if (!(upper < 1.0 - tolerance)) {
      throw std::logic_error("case analysis bound is not tight for this subset");
    }
  }
  return best;
}

HrCrosscheck hr_numeric_crosscheck(double tolerance, std::uint64_t seed, int restarts) {
  if (!(tolerance > 0.0 && tolerance < 1.0)) throw ToleranceOutOfRange("tolerance outside (0, 1)");
  HrCrosscheck out;
  for (unsigned mask = 1; mask < (1u << kRelationCount); ++mask) {
    // One angle per party on the circle x^2 + y^2 = 1; interior points only
    // shrink every product.
    auto f = [mask](std::span<const double> phi) {
      CorrelatorVector c;
      for (int q = 0; q < kQubits; ++q) {
        c.values[quantity_index(q, Setting::X)] = std::cos(phi[q]);
        c.values[quantity_index(q, Setting::Y)] = std::sin(phi[q]);
      }
      double worst = 1.0;
      for (int r = 0; r < kRelationCount; ++r) {
        if (mask >> r & 1u) worst = std::min(worst, kGhzTargets[r] * relation_product(c, r));
      }
      return worst;
    };
    auto start = [](Rng& rng) {
      return std::vector<double>{rng.azimuth(), rng.azimuth(), rng.azimuth()};
    };
    const auto res = random_restart_maximize(f, start, restarts, seed + mask);
    out.best_margin[mask] = res.best.value;
    if (res.best.value >= 1.0 - tolerance) {
      out.max_satisfied = std::max(out.max_satisfied, std::popcount(mask));
    }
  }
  return out;
}

std::optional<TwoPartyAssignment> epr_contrast(int c1, int c2) {
  for (int idx = 0; idx < 16; ++idx) {
    auto sign = [idx](int bit) { return (idx >> bit) & 1 ? -1 : 1; };
    const TwoPartyAssignment a{sign(3), sign(2), sign(1), sign(0)};
    if (a.i_x * a.j_x == c1 && a.i_y * a.j_y == c2) return a;
  }
  return std::nullopt;
}

CorrelationTable model_to_table(const LocalModel& model) {
  CorrelationTable t;
  for (int r = 0; r < kRelationCount; ++r) {
    for (int idx = 0; idx < kDim; ++idx) {
      t.blocks[r][idx] = model_joint_probability(model, kGhzPatterns[r], outcome_signs(idx));
    }
  }
  return t;
}

CorrelationTable state_table(const State& state) {
  CorrelationTable t;
  for (int r = 0; r < kRelationCount; ++r) {
    t.blocks[r] = outcome_probabilities(state, kGhzPatterns[r]);
  }
  return t;
}

double table_mermin_value(const CorrelationTable& table) {
  double v = 0.0;
  const Observable m = make_mermin_pair().m;
  for (const auto& term : m.terms()) {
    const int r = ghz_pattern_index(term_pattern(term));
    if (r < 0) throw std::logic_error("M uses a pattern outside the table");
    v += term.coefficient * signed_probability_sum(table.blocks[r]);
  }
  return v;
}

MembershipResult polytope_membership(const CorrelationTable& table) {
  table.validate();
  constexpr int kRows = kRelationCount * kDim + 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(kRows, kStrategyCount);
  Eigen::VectorXd b(kRows);
  const auto strategies = enumerate_strategies();
  for (int s = 0; s < kStrategyCount; ++s) {
    for (int r = 0; r < kRelationCount; ++r) {
      const SettingsPattern& p = kGhzPatterns[r];
      const int idx = outcome_index(strategies[s].at(0, p[0]), strategies[s].at(1, p[1]),
                                    strategies[s].at(2, p[2]));
      a(r * kDim + idx, s) = 1.0;
    }
    a(kRows - 1, s) = 1.0;
  }
  for (int r = 0; r < kRelationCount; ++r) {
    for (int idx = 0; idx < kDim; ++idx) b(r * kDim + idx) = table.blocks[r][idx];
  }
  b(kRows - 1) = 1.0;

  const FeasibilityResult lp = find_nonnegative_solution(a, b, kMembershipTol);
  MembershipResult out;
  out.inside = lp.feasible;
  out.max_residual = lp.max_residual;
  if (out.inside) out.weights = lp.x;
  return out;
}

CorrelationTable table_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_object()) {
    throw MalformedTable("correlation table needs a \"blocks\" object");
  }
  CorrelationTable t;
  const auto& blocks = doc["blocks"];
  for (int r = 0; r < kRelationCount; ++r) {
    if (!blocks.contains(kPatternKeys[r])) {
      throw MalformedTable(std::string("missing block ") + kPatternKeys[r]);
    }
    const auto& arr = blocks[kPatternKeys[r]];
    if (!arr.is_array() || arr.size() != kDim) {
      throw MalformedTable(std::string("block ") + kPatternKeys[r] + " must have 8 entries");
    }
    for (int idx = 0; idx < kDim; ++idx) {
      if (!arr[idx].is_number()) throw MalformedTable("table entries must be numbers");
      t.blocks[r][idx] = arr[idx].get<double>();
    }
  }
  t.validate();
  return t;
}

nlohmann::json table_to_json(const CorrelationTable& table) {
  nlohmann::json blocks = nlohmann::json::object();
  for (int r = 0; r < kRelationCount; ++r) blocks[kPatternKeys[r]] = table.blocks[r];
  return {{"blocks", blocks}};
}

}  // namespace ghzlab
