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


// Three-qubit states, Pauli tensor observables and the x/y eigenbasis
// expansions used throughout the library.
//
// Basis order is qubit-1 major with |up> before |down>: basis index
// b1 b2 b3 (b1 the most significant bit), bit value 0 <-> |up> <-> outcome +1.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace ghzlab {

using Complex = std::complex<double>;

inline constexpr int kQubits = 3;
inline constexpr int kDim = 8;

using Vector2 = Eigen::Matrix<Complex, 2, 1>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Vector8 = Eigen::Matrix<Complex, kDim, 1>;
using Matrix8 = Eigen::Matrix<Complex, kDim, kDim>;

// Tolerance ladder.
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;
inline constexpr double kImaginaryTol = 1e-10;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kOptimizerTol = 1e-6;

/// Normalized pure state of three qubits.
class StateVector {
 public:
  /// Throws InputError unless sum |a|^2 == 1 within 1e-12.
  explicit StateVector(const Vector8& amplitudes);

  /// Rescales to unit norm; throws InputError on the zero vector.
  static StateVector normalized(const Vector8& v);

  const Vector8& amplitudes() const { return amps_; }
  Complex operator[](int index) const { return amps_(index); }
  double norm() const { return amps_.norm(); }

 private:
  Vector8 amps_;
};

/// Mixed state of three qubits.
class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace within 1e-12 and the eigenvalue
  /// floor -1e-10; throws InputError otherwise.
  explicit DensityMatrix(const Matrix8& entries);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed();

  const Matrix8& matrix() const { return rho_; }

 private:
  Matrix8 rho_;
};

using State = std::variant<StateVector, DensityMatrix>;

enum class Pauli : std::uint8_t { I, X, Y, Z };

struct PauliTerm {
  double coefficient = 1.0;
  std::array<Pauli, kQubits> factors{Pauli::I, Pauli::I, Pauli::I};

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real linear combination of Pauli tensor products; Hermitian by
/// construction.
class Observable {
 public:
  Observable() = default;
  explicit Observable(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {}

  /// Parses a single term such as "XYY", "-XXX" or "ZZI" (qubit 1 first).
  static Observable parse(std::string_view text);
  static Observable term(double coefficient, std::string_view factors);

  const std::vector<PauliTerm>& terms() const { return terms_; }

  Observable operator-() const;
  Observable operator*(double scale) const;
  Observable operator+(const Observable& other) const;
  Observable operator-(const Observable& other) const { return *this + (-other); }

  std::string to_string() const;

 private:
  std::vector<PauliTerm> terms_;
};

Matrix2 pauli_matrix(Pauli p);

/// Kronecker expansion, qubit 1 the leftmost factor.
Matrix8 observable_matrix(const Observable& obs);

/// <psi|O|psi> or Tr(rho O). Throws ImaginaryResidual when the discarded
/// imaginary part reaches 1e-10.
double expectation(const StateVector& psi, const Observable& obs);
double expectation(const DensityMatrix& rho, const Observable& obs);
double expectation(const State& state, const Observable& obs);
double expectation(const StateVector& psi, const Matrix8& op);
double expectation(const DensityMatrix& rho, const Matrix8& op);

/// || O|psi> - lambda|psi> ||.
double eigen_residual(const StateVector& psi, const Observable& obs,
                      double eigenvalue);
bool eigencheck(const StateVector& psi, const Observable& obs,
                double eigenvalue);

/// (|up up up> + |down down down>)/sqrt(2).
StateVector make_ghz();

// ---------------------------------------------------------------------------
// Local measurement settings and eigenbasis expansions.

enum class Setting : std::uint8_t { X, Y };
using SettingsPattern = std::array<Setting, kQubits>;

/// The four patterns with definite GHZ predictions, in the order
/// xxx, xyy, yxy, yyx.
inline constexpr std::array<SettingsPattern, 4> kGhzPatterns{{
    {Setting::X, Setting::X, Setting::X},
    {Setting::X, Setting::Y, Setting::Y},
    {Setting::Y, Setting::X, Setting::Y},
    {Setting::Y, Setting::Y, Setting::X},
}};

/// Parses "xyy" (case-insensitive). Throws InputError.
SettingsPattern parse_pattern(std::string_view text);
std::string pattern_name(const SettingsPattern& pattern);
Pauli to_pauli(Setting s);

/// Outcome triples are indexed like basis states: index bit 0 <-> +1, first
/// party most significant, i.e. +++, ++-, +-+, +--, -++, -+-, --+, ---.
std::array<int, kQubits> outcome_signs(int index);
int outcome_index(int i, int j, int k);

/// Eigenvector of sigma_x / sigma_y with eigenvalue `outcome` (+1 or -1):
/// (|up> + outcome|down>)/sqrt(2) and (|up> + i*outcome|down>)/sqrt(2).
Vector2 setting_eigenvector(Setting s, int outcome);

struct AmplitudeTable {
  SettingsPattern settings{};
  std::array<Complex, kDim> entries{};  // indexed by outcome_index

  Complex at(int i, int j, int k) const { return entries[outcome_index(i, j, k)]; }
  double probability(int index) const { return std::norm(entries[index]); }
};

/// Psi_{ijk} = <i, j, k | psi> in the per-party x or y eigenbasis.
AmplitudeTable amplitude_table(const StateVector& psi,
                               const SettingsPattern& settings);

/// sum over outcomes of i*j*k*|Psi_{ijk}|^2.
double signed_probability_sum(const AmplitudeTable& table);
double signed_probability_sum(const std::array<double, kDim>& probabilities);

/// Joint outcome probabilities for the given pattern; works for pure and
/// mixed states.
std::array<double, kDim> outcome_probabilities(const State& state,
                                               const SettingsPattern& settings);

/// v |psi><psi| + (1 - v) I/8. Throws VisibilityOutOfRange unless 0 <= v <= 1.
DensityMatrix mix_with_white_noise(const StateVector& psi, double visibility);

// ---------------------------------------------------------------------------
// Product-state helpers.

struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>.
Vector2 qubit_state(const BlochAngles& angles);

StateVector product_state(const std::array<BlochAngles, kQubits>& qubits);

Vector8 kron(const Vector2& a, const Vector2& b, const Vector2& c);

/// lone (x) pair with the lone state on qubit `lone_qubit` and the pair on
/// the other two, in ascending qubit order.
Vector8 embed_cut(int lone_qubit, const Vector2& lone, const Vector4& pair);

}  // namespace ghzlab
