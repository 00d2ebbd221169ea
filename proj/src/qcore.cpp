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


#include "ghzlab/qcore.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ghzlab/errors.hpp"

namespace ghzlab {
namespace {

constexpr Complex kI{0.0, 1.0};

double real_checked(Complex value) {
  if (std::abs(value.imag()) >= kImaginaryTol) {
    std::ostringstream msg;
    msg << "expectation has imaginary part " << value.imag();
    throw ImaginaryResidual(msg.str());
  }
  return value.real();
}

Pauli parse_pauli(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw InputError(std::string("unknown Pauli factor '") + c + "'");
  }
}

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

}  // namespace

StateVector::StateVector(const Vector8& amplitudes) : amps_(amplitudes) {
  const double n2 = amps_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kIdentityTol) {
    std::ostringstream msg;
    msg << "state vector is not normalized (sum |a|^2 = " << n2 << ")";
    throw InputError(msg.str());
  }
}

StateVector StateVector::normalized(const Vector8& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InputError("cannot normalize zero vector");
  return StateVector(v / n);
}

DensityMatrix::DensityMatrix(const Matrix8& entries) : rho_(entries) {
  if (!rho_.allFinite()) throw InputError("density matrix has non-finite entries");
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kIdentityTol) {
    throw InputError("density matrix is not Hermitian");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > kIdentityTol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << ", expected 1";
    throw InputError(msg.str());
  }
  const Matrix8 sym = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix8> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kPsdFloor) {
    throw InputError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Matrix8::Identity() / static_cast<double>(kDim));
}

Observable Observable::parse(std::string_view text) {
  double coefficient = 1.0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    if (text.front() == '-') coefficient = -1.0;
    text.remove_prefix(1);
  }
  return term(coefficient, text);
}

Observable Observable::term(double coefficient, std::string_view factors) {
  if (factors.size() != kQubits) {
    throw InputError("Pauli string must have exactly 3 factors: '" +
                     std::string(factors) + "'");
  }
  PauliTerm t;
  t.coefficient = coefficient;
  for (int q = 0; q < kQubits; ++q) t.factors[q] = parse_pauli(factors[q]);
  return Observable({t});
}

Observable Observable::operator-() const { return *this * -1.0; }

Observable Observable::operator*(double scale) const {
  Observable out = *this;
  for (auto& t : out.terms_) t.coefficient *= scale;
  return out;
}

Observable Observable::operator+(const Observable& other) const {
  Observable out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  return out;
}

std::string Observable::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (t.coefficient < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    if (std::abs(t.coefficient) != 1.0) os << std::abs(t.coefficient) << "*";
    for (Pauli p : t.factors) os << pauli_char(p);
    first = false;
  }
  return os.str();
}

Matrix2 pauli_matrix(Pauli p) {
  Matrix2 m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix8 observable_matrix(const Observable& obs) {
  Matrix8 out = Matrix8::Zero();
  for (const auto& t : obs.terms()) {
    const Matrix2 a = pauli_matrix(t.factors[0]);
    const Matrix2 b = pauli_matrix(t.factors[1]);
    const Matrix2 c = pauli_matrix(t.factors[2]);
    for (int r = 0; r < kDim; ++r) {
      for (int col = 0; col < kDim; ++col) {
        out(r, col) += t.coefficient * a(r >> 2, col >> 2) *
                       b((r >> 1) & 1, (col >> 1) & 1) * c(r & 1, col & 1);
      }
    }
  }
  return out;
}

double expectation(const StateVector& psi, const Matrix8& op) {
  return real_checked(psi.amplitudes().dot(op * psi.amplitudes()));
}

double expectation(const DensityMatrix& rho, const Matrix8& op) {
  return real_checked((rho.matrix() * op).trace());
}

double expectation(const StateVector& psi, const Observable& obs) {
  return expectation(psi, observable_matrix(obs));
}

double expectation(const DensityMatrix& rho, const Observable& obs) {
  return expectation(rho, observable_matrix(obs));
}

double expectation(const State& state, const Observable& obs) {
  return std::visit([&](const auto& s) { return expectation(s, obs); }, state);
}

double eigen_residual(const StateVector& psi, const Observable& obs,
                      double eigenvalue) {
  const Vector8& v = psi.amplitudes();
  return (observable_matrix(obs) * v - eigenvalue * v).norm();
}

bool eigencheck(const StateVector& psi, const Observable& obs,
                double eigenvalue) {
  return eigen_residual(psi, obs, eigenvalue) < kEigenTol;
}

StateVector make_ghz() {
  Vector8 v = Vector8::Zero();
  v(0) = v(kDim - 1) = 1.0 / std::numbers::sqrt2;
  return StateVector(v);
}

SettingsPattern parse_pattern(std::string_view text) {
  if (text.size() != kQubits) {
    throw InputError("settings pattern must have 3 letters: '" + std::string(text) + "'");
  }
  SettingsPattern p{};
  for (int q = 0; q < kQubits; ++q) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[q])));
    if (c == 'x') {
      p[q] = Setting::X;
    } else if (c == 'y') {
      p[q] = Setting::Y;
    } else {
      throw InputError("settings pattern letters must be x or y: '" + std::string(text) + "'");
    }
  }
  return p;
}

std::string pattern_name(const SettingsPattern& pattern) {
  std::string out;
  for (Setting s : pattern) out += (s == Setting::X ? 'x' : 'y');
  return out;
}

Pauli to_pauli(Setting s) { return s == Setting::X ? Pauli::X : Pauli::Y; }

std::array<int, kQubits> outcome_signs(int index) {
  return {(index & 4) ? -1 : 1, (index & 2) ? -1 : 1, (index & 1) ? -1 : 1};
}

int outcome_index(int i, int j, int k) {
  return (i < 0 ? 4 : 0) | (j < 0 ? 2 : 0) | (k < 0 ? 1 : 0);
}

Vector2 setting_eigenvector(Setting s, int outcome) {
  const double h = 1.0 / std::numbers::sqrt2;
  Vector2 v;
  if (s == Setting::X) {
    v << h, h * outcome;
  } else {
    v << h, kI * (h * outcome);
  }
  return v;
}

AmplitudeTable amplitude_table(const StateVector& psi,
                               const SettingsPattern& settings) {
  AmplitudeTable table;
  table.settings = settings;
  for (int idx = 0; idx < kDim; ++idx) {
    const auto sg = outcome_signs(idx);
    const Vector8 bra = kron(setting_eigenvector(settings[0], sg[0]),
                             setting_eigenvector(settings[1], sg[1]),
                             setting_eigenvector(settings[2], sg[2]));
    table.entries[idx] = bra.dot(psi.amplitudes());
  }
  return table;
}

double signed_probability_sum(const std::array<double, kDim>& probabilities) {
  double sum = 0.0;
  for (int idx = 0; idx < kDim; ++idx) {
    const auto sg = outcome_signs(idx);
    sum += sg[0] * sg[1] * sg[2] * probabilities[idx];
  }
  return sum;
}

double signed_probability_sum(const AmplitudeTable& table) {
  std::array<double, kDim> p{};
  for (int idx = 0; idx < kDim; ++idx) p[idx] = table.probability(idx);
  return signed_probability_sum(p);
}

std::array<double, kDim> outcome_probabilities(const State& state,
                                               const SettingsPattern& settings) {
  std::array<double, kDim> p{};
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    const AmplitudeTable t = amplitude_table(*psi, settings);
    for (int idx = 0; idx < kDim; ++idx) p[idx] = t.probability(idx);
    return p;
  }
  const Matrix8& rho = std::get<DensityMatrix>(state).matrix();
  for (int idx = 0; idx < kDim; ++idx) {
    const auto sg = outcome_signs(idx);
    const Vector8 e = kron(setting_eigenvector(settings[0], sg[0]),
                           setting_eigenvector(settings[1], sg[1]),
                           setting_eigenvector(settings[2], sg[2]));
    p[idx] = real_checked(e.dot(rho * e));
  }
  return p;
}

DensityMatrix mix_with_white_noise(const StateVector& psi, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    std::ostringstream msg;
    msg << "visibility " << visibility << " outside [0, 1]";
    throw VisibilityOutOfRange(msg.str());
  }
  const Matrix8 proj = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(visibility * proj +
                       (1.0 - visibility) * Matrix8::Identity() / static_cast<double>(kDim));
}

Vector2 qubit_state(const BlochAngles& angles) {
  Vector2 v;
  v << std::cos(angles.theta / 2.0),
      std::polar(1.0, angles.phi) * std::sin(angles.theta / 2.0);
  return v;
}

StateVector product_state(const std::array<BlochAngles, kQubits>& qubits) {
  return StateVector::normalized(
      kron(qubit_state(qubits[0]), qubit_state(qubits[1]), qubit_state(qubits[2])));
}

Vector8 kron(const Vector2& a, const Vector2& b, const Vector2& c) {
  Vector8 out;
  for (int idx = 0; idx < kDim; ++idx) {
    out(idx) = a((idx >> 2) & 1) * b((idx >> 1) & 1) * c(idx & 1);
  }
  return out;
}

Vector8 embed_cut(int lone_qubit, const Vector2& lone, const Vector4& pair) {
  Vector8 v;
  for (int idx = 0; idx < kDim; ++idx) {
    int pair_idx = 0;
    int lone_bit = 0;
    for (int q = 0; q < kQubits; ++q) {
      const int bit = (idx >> (kQubits - 1 - q)) & 1;
      if (q == lone_qubit) {
        lone_bit = bit;
      } else {
        pair_idx = (pair_idx << 1) | bit;
      }
    }
    v(idx) = lone(lone_bit) * pair(pair_idx);
  }
  return v;
}

}  // namespace ghzlab
