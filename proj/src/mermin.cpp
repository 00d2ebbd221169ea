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


#include "ghzlab/mermin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ghzlab/errors.hpp"

namespace ghzlab {

MerminPair make_mermin_pair() {
  const Observable m = Observable::term(1.0, "XXX") + Observable::term(-1.0, "XYY") +
                       Observable::term(-1.0, "YXY") + Observable::term(-1.0, "YYX");
  const Observable mp = Observable::term(1.0, "XYX") + Observable::term(1.0, "YXX") +
                        Observable::term(-1.0, "YYY") + Observable::term(1.0, "XXY");
  return {m, mp};
}

const Matrix8& mermin_matrix() {
  static const Matrix8 m = observable_matrix(make_mermin_pair().m);
  return m;
}

const Matrix8& mermin_prime_matrix() {
  static const Matrix8 m = observable_matrix(make_mermin_pair().mprime);
  return m;
}

MerminPoint evaluate_point(const StateVector& psi) {
  return {expectation(psi, mermin_matrix()), expectation(psi, mermin_prime_matrix())};
}

MerminPoint evaluate_point(const DensityMatrix& rho) {
  return {expectation(rho, mermin_matrix()), expectation(rho, mermin_prime_matrix())};
}

MerminPoint evaluate_point(const State& state) {
  return std::visit([](const auto& s) { return evaluate_point(s); }, state);
}

std::string_view class_name(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::kSeparableCompatible: return "separable-compatible";
    case EntanglementClass::kTwoEntangledCompatible: return "two-entangled-compatible";
    case EntanglementClass::kThreeEntangled: return "three-entangled";
  }
  return "unknown";
}

bool satisfies_locality(const MerminPoint& p) {
  return std::max(std::abs(p.m), std::abs(p.mprime)) <= kLocalityBound + kBoundSlack;
}

bool satisfies_quantum_locality(const MerminPoint& p) {
  return p.radius2() <= kQuantumLocalityRadius2 + kBoundSlack;
}

bool satisfies_realism(const MerminPoint& p) {
  return std::max(std::abs(p.m), std::abs(p.mprime)) <= kRealismBound + kBoundSlack;
}

bool satisfies_quantum(const MerminPoint& p) {
  return p.radius2() <= kQuantumRadius2 + kBoundSlack;
}

InequalityReport report(const MerminPoint& point) {
  const double r2 = point.radius2();
  if (!std::isfinite(r2) || r2 > kQuantumRadius2 + kBoundSlack) {
    std::ostringstream msg;
    msg << "point (" << point.m << ", " << point.mprime << ") has radius^2 " << r2
        << " > 16";
    throw PointOutsideQuantumRegion(msg.str());
  }
  InequalityReport r;
  r.point = point;
  r.satisfies_locality_bound = satisfies_locality(point);
  r.satisfies_quantum_locality_bound = satisfies_quantum_locality(point);
  r.satisfies_realism_bound = satisfies_realism(point);
  r.satisfies_quantum_bound = satisfies_quantum(point);
  if (r2 <= kQuantumLocalityRadius2 + kBoundSlack) {
    r.entanglement_class = EntanglementClass::kSeparableCompatible;
  } else if (r2 <= kBiseparableRadius2 + kBoundSlack) {
    r.entanglement_class = EntanglementClass::kTwoEntangledCompatible;
  } else {
    r.entanglement_class = EntanglementClass::kThreeEntangled;
  }
  return r;
}

nlohmann::json report_to_json(const InequalityReport& r) {
  return {
      {"m", r.point.m},
      {"mprime", r.point.mprime},
      {"bounds",
       {{"locality", r.satisfies_locality_bound},
        {"quantum_locality", r.satisfies_quantum_locality_bound},
        {"realism", r.satisfies_realism_bound},
        {"quantum", r.satisfies_quantum_bound}}},
      {"class", std::string(class_name(r.entanglement_class))},
  };
}

namespace {

// Exact zeros at multiples of pi/2 keep exported curves free of 1e-17 noise.
double snap(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

Curve circle(std::string name, double radius, int samples) {
  Curve c{std::move(name), {}};
  c.vertices.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * std::numbers::pi * k / samples;
    c.vertices.push_back({snap(radius * std::cos(a)), snap(radius * std::sin(a))});
  }
  return c;
}

Curve square(std::string name, double half_side) {
  const double h = half_side;
  return {std::move(name), {{h, h}, {-h, h}, {-h, -h}, {h, -h}}};
}

}  // namespace

std::vector<Curve> figure1_regions(int samples) {
  if (samples < 3) throw InputError("figure curves need at least 3 samples");
  return {
      circle("quantum_locality", std::sqrt(kQuantumLocalityRadius2), samples),
      square("locality", kLocalityBound),
      square("realism", kRealismBound),
      circle("quantum", std::sqrt(kQuantumRadius2), samples),
  };
}

}  // namespace ghzlab
