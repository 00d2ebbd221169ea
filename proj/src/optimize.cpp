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


#include "ghzlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ghzlab/ascent.hpp"
#include "ghzlab/errors.hpp"

namespace ghzlab {
namespace {

constexpr double kAscentSlack = 1e-4;

const Observable& pick(const MerminPair& pair, MerminOperator op) {
  return op == MerminOperator::kM ? pair.m : pair.mprime;
}

double radius2(const StateVector& psi) { return evaluate_point(psi).radius2(); }

// Spectral radius of a Hermitian matrix.
template <typename Mat>
double spectral_radius(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::EigenvaluesOnly);
  return std::max(std::abs(solver.eigenvalues()(0)),
                  std::abs(solver.eigenvalues()(solver.eigenvalues().size() - 1)));
}

void check_ascent(const char* what, double found, double reference) {
  if (found < reference - kAscentSlack) {
    std::ostringstream msg;
    msg << what << ": ascent reached " << found << ", reference value is " << reference;
    throw RestartBudgetExhausted(msg.str());
  }
}

void check_restarts(int restarts) {
  if (restarts < 1) throw InputError("restarts must be at least 1");
}

Vector4 pair_from_params(std::span<const double> x) {
  Vector4 p;
  p << Complex(x[0], 0.0), Complex(x[1], x[2]), Complex(x[3], x[4]), Complex(x[5], x[6]);
  return p;
}

Vector8 state_from_params(std::span<const double> x) {
  Vector8 v;
  v(0) = Complex(x[0], 0.0);
  for (int i = 1; i < kDim; ++i) v(i) = Complex(x[2 * i - 1], x[2 * i]);
  return v;
}

// First amplitude with modulus above 1e-12 made real and positive.
template <typename Vec>
Vec fix_phase(Vec v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

}  // namespace

std::string_view class_tag(ModelClass c) {
  switch (c) {
    case ModelClass::kLocal: return "local";
    case ModelClass::kRealistic: return "realistic";
    case ModelClass::kQuantumLocal: return "quantum_local";
    case ModelClass::kBiseparable: return "biseparable";
    case ModelClass::kQuantum: return "quantum";
  }
  return "unknown";
}

ModelClass parse_model_class(std::string_view tag) {
  for (ModelClass c : {ModelClass::kLocal, ModelClass::kRealistic, ModelClass::kQuantumLocal,
                       ModelClass::kBiseparable, ModelClass::kQuantum}) {
    if (class_tag(c) == tag) return c;
  }
  throw InputError("unknown model class '" + std::string(tag) + "'");
}

nlohmann::json result_to_json(const OptimizationResult& r) {
  using nlohmann::json;
  auto point_json = [](const MerminPoint& p) { return json{{"m", p.m}, {"mprime", p.mprime}}; };
  auto bloch_json = [](const BlochAngles& b) { return json{{"theta", b.theta}, {"phi", b.phi}}; };
  const char* op_name = r.op == MerminOperator::kM ? "M" : "Mprime";

  json argmax = std::visit(
      [&](const auto& a) -> json {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, StrategyArgmax>) {
          return {{"operator", op_name},
                  {"strategy", a.index},
                  {"signs", a.signs.signs},
                  {"signed_value", a.signed_value}};
        } else if constexpr (std::is_same_v<T, TermValuesArgmax>) {
          return {{"operator", op_name},
                  {"term_products", a.products},
                  {"signed_value", a.signed_value}};
        } else if constexpr (std::is_same_v<T, ProductArgmax>) {
          json qs = json::array();
          for (const auto& b : a.qubits) qs.push_back(bloch_json(b));
          return {{"bloch", qs}, {"point", point_json(a.point)}};
        } else if constexpr (std::is_same_v<T, BiseparableArgmax>) {
          json re = json::array(), im = json::array();
          for (const auto& c : a.pair) {
            re.push_back(c.real());
            im.push_back(c.imag());
          }
          return {{"lone_qubit", a.lone_qubit + 1},
                  {"lone_bloch", bloch_json(a.lone)},
                  {"pair", {{"re", re}, {"im", im}}},
                  {"point", point_json(a.point)}};
        } else {
          json re = json::array(), im = json::array();
          for (int i = 0; i < kDim; ++i) {
            re.push_back(a.amplitudes(i).real());
            im.push_back(a.amplitudes(i).imag());
          }
          return {{"state", {{"dim", kDim}, {"re", re}, {"im", im}}},
                  {"point", point_json(a.point)}};
        }
      },
      r.argmax);
  if (r.reference_value) argmax["reference"] = *r.reference_value;

  return {{"class", std::string(class_tag(r.model_class))},
          {"value", r.best_value},
          {"argmax", argmax},
          {"restarts", r.restarts_used},
          {"seed", r.seed}};
}

OptimizationResult max_local_mermin(MerminOperator op) {
  const Observable obs = pick(make_mermin_pair(), op);
  OptimizationResult res;
  res.model_class = ModelClass::kLocal;
  res.op = op;
  StrategyArgmax best;
  bool have = false;
  for (int idx = 0; idx < kStrategyCount; ++idx) {
    const DeterministicStrategy s = strategy_at(idx);
    double v = 0.0;
    for (const auto& t : obs.terms()) {
      int prod = 1;
      for (int q = 0; q < kQubits; ++q) {
        prod *= s.at(q, t.factors[q] == Pauli::X ? Setting::X : Setting::Y);
      }
      v += t.coefficient * prod;
    }
    if (!have || std::abs(v) > std::abs(best.signed_value)) {
      best = {idx, s, v};
      have = true;
    }
  }
  res.best_value = std::abs(best.signed_value);
  res.argmax = best;
  return res;
}

OptimizationResult max_realistic_mermin(MerminOperator op) {
  const Observable obs = pick(make_mermin_pair(), op);
  const std::size_t n = obs.terms().size();
  OptimizationResult res;
  res.model_class = ModelClass::kRealistic;
  res.op = op;
  TermValuesArgmax best;
  bool have = false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    TermValuesArgmax cand;
    for (std::size_t t = 0; t < n; ++t) {
      cand.products[t] = (mask >> (n - 1 - t)) & 1u ? -1 : 1;
      cand.signed_value += obs.terms()[t].coefficient * cand.products[t];
    }
    if (!have || std::abs(cand.signed_value) > std::abs(best.signed_value)) {
      best = cand;
      have = true;
    }
  }
  res.best_value = std::abs(best.signed_value);
  res.argmax = best;
  return res;
}

double product_radius2_closed_form(const std::array<BlochAngles, kQubits>& qubits) {
  // x^2 + y^2 = sin^2(theta) for each qubit.
  double r2 = 1.0;
  for (const auto& b : qubits) r2 *= std::sin(b.theta) * std::sin(b.theta);
  return r2;
}

OptimizationResult max_quantum_local_radius(int restarts, std::uint64_t seed) {
  check_restarts(restarts);
  auto angles = [](std::span<const double> x) {
    return std::array<BlochAngles, kQubits>{
        BlochAngles{x[0], x[1]}, BlochAngles{x[2], x[3]}, BlochAngles{x[4], x[5]}};
  };
  auto f = [&](std::span<const double> x) { return radius2(product_state(angles(x))); };
  auto start = [](Rng& rng) {
    std::vector<double> x;
    for (int q = 0; q < kQubits; ++q) {
      x.push_back(rng.polar_angle());
      x.push_back(rng.azimuth());
    }
    return x;
  };
  const RestartResult rr = random_restart_maximize(f, start, restarts, seed);

  // Equatorial Bloch vectors maximize every factor of the closed form.
  const double analytic = product_radius2_closed_form(
      {BlochAngles{std::numbers::pi / 2, 0}, BlochAngles{std::numbers::pi / 2, 0},
       BlochAngles{std::numbers::pi / 2, 0}});
  check_ascent("quantum_local", rr.best.value, analytic);

  OptimizationResult res;
  res.model_class = ModelClass::kQuantumLocal;
  res.best_value = rr.best.value;
  const auto a = angles(rr.best.x);
  res.argmax = ProductArgmax{a, evaluate_point(product_state(a))};
  res.restarts_used = rr.restarts;
  res.seed = seed;
  res.reference_value = analytic;
  return res;
}

OptimizationResult max_biseparable_radius_for_cut(int lone_qubit, int restarts,
                                                  std::uint64_t seed) {
  check_restarts(restarts);
  if (lone_qubit < 0 || lone_qubit >= kQubits) throw InputError("cut qubit out of range");
  // x[0..6]: pair amplitudes (first one real), x[7], x[8]: lone Bloch angles.
  auto build = [lone_qubit](std::span<const double> x) {
    return embed_cut(lone_qubit, qubit_state({x[7], x[8]}), pair_from_params(x));
  };
  auto f = [&](std::span<const double> x) -> double {
    const Vector8 v = build(x);
    const double n = v.norm();
    if (!(n > 1e-150)) return 0.0;
    return radius2(StateVector::normalized(v));
  };
  auto start = [](Rng& rng) {
    Vector4 p;
    for (int i = 0; i < 4; ++i) p(i) = Complex(rng.normal(), rng.normal());
    p = fix_phase(p);
    std::vector<double> x{p(0).real(), p(1).real(), p(1).imag(), p(2).real(),
                          p(2).imag(), p(3).real(), p(3).imag()};
    x.push_back(rng.polar_angle());
    x.push_back(rng.azimuth());
    return x;
  };
  const RestartResult rr =
      random_restart_maximize(f, start, restarts, seed + 1000003ULL * (lone_qubit + 1));

  Vector4 pair = pair_from_params(rr.best.x);
  pair = fix_phase(Vector4(pair / pair.norm()));
  const BlochAngles lone{rr.best.x[7], rr.best.x[8]};
  const StateVector psi(embed_cut(lone_qubit, qubit_state(lone), pair));

  OptimizationResult res;
  res.model_class = ModelClass::kBiseparable;
  res.best_value = rr.best.value;
  res.argmax = BiseparableArgmax{lone_qubit, lone, {pair(0), pair(1), pair(2), pair(3)},
                                 evaluate_point(psi)};
  res.restarts_used = rr.restarts;
  res.seed = seed;
  return res;
}

OptimizationResult max_biseparable_radius(int restarts, std::uint64_t seed) {
  check_restarts(restarts);
  OptimizationResult best;
  double reference = 0.0;
  for (int cut = 0; cut < kQubits; ++cut) {
    OptimizationResult r = max_biseparable_radius_for_cut(cut, restarts, seed);
    reference = std::max(reference, biseparable_radius2_oracle(cut));
    if (cut == 0 || r.best_value > best.best_value) best = r;
  }
  check_ascent("biseparable", best.best_value, reference);
  best.restarts_used = restarts * kQubits;
  best.reference_value = reference;
  return best;
}

OptimizationResult max_quantum_radius(int restarts, std::uint64_t seed,
                                      const std::optional<StateVector>& warm_start) {
  check_restarts(restarts);
  const double reference = pencil_radius2_oracle();
  OptimizationResult res;
  res.model_class = ModelClass::kQuantum;
  res.seed = seed;
  res.reference_value = reference;

  if (warm_start) {
    const double v = radius2(*warm_start);
    if (v >= reference - kIdentityTol) {
      res.best_value = v;
      res.argmax = StateArgmax{fix_phase(warm_start->amplitudes()), evaluate_point(*warm_start)};
      res.restarts_used = 0;
      return res;
    }
  }

  auto f = [](std::span<const double> x) -> double {
    const Vector8 v = state_from_params(x);
    if (!(v.norm() > 1e-150)) return 0.0;
    return radius2(StateVector::normalized(v));
  };
  auto start = [](Rng& rng) {
    Vector8 v;
    for (int i = 0; i < kDim; ++i) v(i) = Complex(rng.normal(), rng.normal());
    v = fix_phase(v);
    std::vector<double> x{v(0).real()};
    for (int i = 1; i < kDim; ++i) {
      x.push_back(v(i).real());
      x.push_back(v(i).imag());
    }
    return x;
  };
  const RestartResult rr = random_restart_maximize(f, start, restarts, seed);
  check_ascent("quantum", rr.best.value, reference);

  const StateVector psi = StateVector::normalized(state_from_params(rr.best.x));
  res.best_value = rr.best.value;
  res.argmax = StateArgmax{fix_phase(psi.amplitudes()), evaluate_point(psi)};
  res.restarts_used = rr.restarts;
  return res;
}

double top_eigenvalue_m2_plus_mprime2() {
  const Matrix8 m = mermin_matrix();
  const Matrix8 mp = mermin_prime_matrix();
  const Matrix8 sum = m * m + mp * mp;
  Eigen::SelfAdjointEigenSolver<Matrix8> solver(0.5 * (sum + sum.adjoint()),
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(kDim - 1);
}

double pencil_radius2_oracle(int grid) {
  if (grid < 1) throw InputError("oracle grid must be positive");
  double best = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = 2.0 * std::numbers::pi * k / grid;
    const Matrix8 h = std::cos(t) * mermin_matrix() + std::sin(t) * mermin_prime_matrix();
    const double r = spectral_radius(h);
    best = std::max(best, r * r);
  }
  return best;
}

double biseparable_radius2_oracle(int lone_qubit, int grid) {
  if (lone_qubit < 0 || lone_qubit >= kQubits) throw InputError("cut qubit out of range");
  if (grid < 1) throw InputError("oracle grid must be positive");
  using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
  // Pair operators multiplying the lone qubit's <X> and <Y>, for M and M'.
  auto split = [lone_qubit](const Observable& obs) {
    std::array<Matrix4, 2> k{Matrix4::Zero(), Matrix4::Zero()};
    for (const auto& t : obs.terms()) {
      std::array<Pauli, 2> rest{};
      int n = 0;
      for (int q = 0; q < kQubits; ++q) {
        if (q != lone_qubit) rest[n++] = t.factors[q];
      }
      const Matrix2 a = pauli_matrix(rest[0]);
      const Matrix2 b = pauli_matrix(rest[1]);
      Matrix4 kr;
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) kr(r, c) = a(r >> 1, c >> 1) * b(r & 1, c & 1);
      }
      k[t.factors[lone_qubit] == Pauli::X ? 0 : 1] += t.coefficient * kr;
    }
    return k;
  };
  const MerminPair pair = make_mermin_pair();
  const auto km = split(pair.m);
  const auto kp = split(pair.mprime);

  double best = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double alpha = 2.0 * std::numbers::pi * i / grid;
    const Matrix4 a = std::cos(alpha) * km[0] + std::sin(alpha) * km[1];
    const Matrix4 b = std::cos(alpha) * kp[0] + std::sin(alpha) * kp[1];
    for (int j = 0; j < grid; ++j) {
      const double t = 2.0 * std::numbers::pi * j / grid;
      const double r = spectral_radius(Matrix4(std::cos(t) * a + std::sin(t) * b));
      best = std::max(best, r * r);
    }
  }
  return best;
}

std::string_view bound_tag(NoiseBound b) {
  return b == NoiseBound::kLocality ? "locality" : "quantum_locality";
}

NoiseBound parse_noise_bound(std::string_view tag) {
  if (tag == "locality") return NoiseBound::kLocality;
  if (tag == "quantum_locality") return NoiseBound::kQuantumLocality;
  throw InputError("unknown bound '" + std::string(tag) +
                   "' (expected locality or quantum_locality)");
}

double noise_threshold(NoiseBound bound, double tol) {
  if (!(tol > 0.0)) throw ToleranceOutOfRange("bisection tolerance must be positive");
  const StateVector ghz = make_ghz();
  auto violated = [&](double v) {
    const MerminPoint p = evaluate_point(mix_with_white_noise(ghz, v));
    return bound == NoiseBound::kLocality ? !satisfies_locality(p)
                                          : !satisfies_quantum_locality(p);
  };
  if (!violated(1.0)) {
    throw NoViolation(std::string("the ") + std::string(bound_tag(bound)) +
                      " bound holds even at visibility 1");
  }
  double lo = 0.0, hi = 1.0;
  if (violated(lo)) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (violated(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ghzlab
