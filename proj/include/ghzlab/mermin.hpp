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


// GHZ-Mermin operator pair and the four bounds on (<M>, <M'>).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ghzlab/json.hpp"
#include "ghzlab/qcore.hpp"

namespace ghzlab {

struct MerminPair {
  Observable m;
  Observable mprime;
};

/// M  = XXX - XYY - YXY - YYX, with <M> = +4 on the GHZ state;
/// M' = XYX + YXX - YYY + XXY.
MerminPair make_mermin_pair();

/// Expanded matrices of make_mermin_pair(), computed once.
const Matrix8& mermin_matrix();
const Matrix8& mermin_prime_matrix();

struct MerminPoint {
  double m = 0.0;
  double mprime = 0.0;

  double radius2() const { return m * m + mprime * mprime; }
};

MerminPoint evaluate_point(const StateVector& psi);
MerminPoint evaluate_point(const DensityMatrix& rho);
MerminPoint evaluate_point(const State& state);

enum class EntanglementClass {
  kSeparableCompatible,
  kTwoEntangledCompatible,
  kThreeEntangled,
};

std::string_view class_name(EntanglementClass c);

// Bound values.
inline constexpr double kLocalityBound = 2.0;          // max(|M|, |M'|)
inline constexpr double kRealismBound = 4.0;           // max(|M|, |M'|)
inline constexpr double kQuantumLocalityRadius2 = 1.0; // M^2 + M'^2
inline constexpr double kBiseparableRadius2 = 8.0;     // M^2 + M'^2
inline constexpr double kQuantumRadius2 = 16.0;        // M^2 + M'^2

/// Points within this distance of a bound count as on it, and boundary
/// points satisfy the (non-strict) bounds.
inline constexpr double kBoundSlack = 1e-9;

struct InequalityReport {
  MerminPoint point;
  bool satisfies_locality_bound = false;
  bool satisfies_quantum_locality_bound = false;
  bool satisfies_realism_bound = false;
  bool satisfies_quantum_bound = false;
  EntanglementClass entanglement_class = EntanglementClass::kSeparableCompatible;
};

bool satisfies_locality(const MerminPoint& p);
bool satisfies_quantum_locality(const MerminPoint& p);
bool satisfies_realism(const MerminPoint& p);
bool satisfies_quantum(const MerminPoint& p);

/// Radius^2 thresholds 1 and 8 split the three classes. The class is
/// witness-style: "compatible" labels do not certify entanglement.
/// Throws PointOutsideQuantumRegion when radius^2 > 16 + 1e-9.
InequalityReport report(const MerminPoint& point);

nlohmann::json report_to_json(const InequalityReport& r);

struct Curve {
  std::string name;
  std::vector<MerminPoint> vertices;  // closed; last vertex joins the first
};

/// Boundary curves: circle of radius 1, square of half-side 2, square of
/// half-side 4 and circle of radius 4. Circles get `samples` vertices
/// starting at angle 0 counterclockwise; squares start at their (+,+) corner.
/// Throws InputError for samples < 3.
std::vector<Curve> figure1_regions(int samples);

}  // namespace ghzlab
