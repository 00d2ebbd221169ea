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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ghzlab/errors.hpp"
#include "ghzlab/qcore.hpp"
#include "ghzlab/rng.hpp"
#include "ghzlab/state_io.hpp"
#include "oracles.hpp"

using namespace ghzlab;

namespace {

Vector8 random_vector(Rng& rng) {
  Vector8 v;
  for (int i = 0; i < kDim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v;
}

oracle::Vec to_oracle(const StateVector& psi) {
  oracle::Vec v;
  for (int i = 0; i < kDim; ++i) v.push_back(psi[i]);
  return v;
}

}  // namespace

TEST_CASE("make_ghz has equal weight on |000> and |111> only") {
  const StateVector ghz = make_ghz();
  const double h = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < kDim; ++i) {
    const double expected = (i == 0 || i == 7) ? h : 0.0;
    CHECK(std::abs(ghz[i] - expected) < 1e-15);
  }
  CHECK(std::abs(ghz.norm() - 1.0) < 1e-12);
  CHECK(expectation(ghz, Observable::parse("ZZI")) == doctest::Approx(1.0));
}

TEST_CASE("observable_matrix matches an explicit Kronecker expansion") {
  for (const char* s : {"XXX", "XYY", "YXY", "YYX", "ZZI", "IXZ", "YYY"}) {
    const Matrix8 m = observable_matrix(Observable::parse(s));
    const auto ref = oracle::string_matrix(s);
    double diff = 0.0;
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c) diff = std::max(diff, std::abs(m(r, c) - ref[r][c]));
    CHECK_MESSAGE(diff == 0.0, s);
  }

  SUBCASE("XXX flips every bit") {
    const Matrix8 m = observable_matrix(Observable::parse("XXX"));
    CHECK(m.isApprox(Matrix8::Identity().rowwise().reverse()));
  }
  SUBCASE("XYY is Hermitian and squares to identity") {
    const Matrix8 m = observable_matrix(Observable::parse("XYY"));
    CHECK((m - m.adjoint()).norm() < 1e-15);
    CHECK((m * m - Matrix8::Identity()).norm() < 1e-15);
  }
  SUBCASE("coefficient -1 negates") {
    CHECK(observable_matrix(Observable::parse("-XXX")) ==
          -observable_matrix(Observable::parse("XXX")));
  }
}

TEST_CASE("expectation values") {
  const StateVector ghz = make_ghz();
  CHECK(expectation(ghz, Observable::parse("XXX")) == doctest::Approx(1.0));
  CHECK(expectation(ghz, Observable::parse("XYY")) == doctest::Approx(-1.0));
  CHECK(expectation(DensityMatrix::maximally_mixed(), Observable::parse("XXX")) ==
        doctest::Approx(0.0));
  CHECK(expectation(State{ghz}, Observable::parse("YXY")) == doctest::Approx(-1.0));
}

TEST_CASE("expectation rejects an imaginary residual") {
  // i*XYZ-like non-Hermitian operator: X*Y = iZ on the first qubit.
  const Matrix8 nonherm = observable_matrix(Observable::parse("XII")) *
                          observable_matrix(Observable::parse("YII"));
  Vector8 v = Vector8::Zero();
  v(0) = 1.0;
  CHECK_THROWS_AS(expectation(StateVector(v), nonherm), ImaginaryResidual);
}

TEST_CASE("expectation is linear in coefficients and in mixing weight") {
  Rng rng(11);
  const Observable a = Observable::parse("XYX");
  const Observable b = Observable::parse("YYZ");
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = StateVector::normalized(random_vector(rng));
    const double ca = rng.uniform(-2, 2), cb = rng.uniform(-2, 2);
    const double lhs = expectation(psi, a * ca + b * cb);
    const double rhs = ca * expectation(psi, a) + cb * expectation(psi, b);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    const double w = rng.uniform();
    const DensityMatrix mix = mix_with_white_noise(psi, w);
    CHECK(std::abs(expectation(mix, a) - w * expectation(psi, a)) < 1e-12);
  }
}

TEST_CASE("eigencheck on the four GHZ eigenvalue equations") {
  const StateVector ghz = make_ghz();
  const std::array<std::pair<const char*, double>, 4> eq{
      {{"XXX", 1.0}, {"XYY", -1.0}, {"YXY", -1.0}, {"YYX", -1.0}}};
  for (const auto& [s, lambda] : eq) {
    CHECK_MESSAGE(eigencheck(ghz, Observable::parse(s), lambda), s);
    CHECK_MESSAGE(!eigencheck(ghz, Observable::parse(s), -lambda), s);
    CHECK(eigen_residual(ghz, Observable::parse(s), lambda) < 1e-15);
  }
}

TEST_CASE("setting eigenvectors follow the fixed phase convention") {
  for (Setting s : {Setting::X, Setting::Y}) {
    const Matrix2 p = pauli_matrix(to_pauli(s));
    for (int o : {1, -1}) {
      const Vector2 v = setting_eigenvector(s, o);
      CHECK((p * v - static_cast<double>(o) * v).norm() < 1e-15);
      CHECK(v(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
      CHECK(v(0).imag() == 0.0);
    }
  }
  const Vector2 yminus = setting_eigenvector(Setting::Y, -1);
  CHECK(std::abs(yminus(1) - Complex(0, -1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("amplitude tables of the GHZ state") {
  const StateVector ghz = make_ghz();
  SUBCASE("xxx: Psi = (1 + ijk)/4") {
    const AmplitudeTable t = amplitude_table(ghz, parse_pattern("xxx"));
    for (int idx = 0; idx < kDim; ++idx) {
      const auto sg = outcome_signs(idx);
      const double ijk = sg[0] * sg[1] * sg[2];
      CHECK(std::abs(t.entries[idx] - Complex((1 + ijk) / 4.0, 0)) < 1e-15);
      CHECK(t.probability(idx) == doctest::Approx(ijk > 0 ? 0.25 : 0.0));
    }
  }
  SUBCASE("xyy: weight only on ijk = -1") {
    const AmplitudeTable t = amplitude_table(ghz, parse_pattern("xyy"));
    for (int idx = 0; idx < kDim; ++idx) {
      const auto sg = outcome_signs(idx);
      CHECK(t.probability(idx) == doctest::Approx(sg[0] * sg[1] * sg[2] < 0 ? 0.25 : 0.0));
    }
  }
  SUBCASE("signed sums are +1, -1, -1, -1") {
    const std::array<double, 4> expected{1, -1, -1, -1};
    for (int r = 0; r < 4; ++r) {
      const double s = signed_probability_sum(amplitude_table(ghz, kGhzPatterns[r]));
      CHECK(std::abs(s - expected[r]) < 1e-12);
    }
  }
}

TEST_CASE("signed sum of a uniform distribution is zero") {
  std::array<double, kDim> uniform{};
  uniform.fill(1.0 / 8.0);
  CHECK(signed_probability_sum(uniform) == 0.0);
  const auto p = outcome_probabilities(DensityMatrix::maximally_mixed(), parse_pattern("yyx"));
  for (double x : p) CHECK(x == doctest::Approx(0.125));
}

TEST_CASE("amplitude tables agree with explicit inner products for random states") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector psi = StateVector::normalized(random_vector(rng));
    const auto ov = to_oracle(psi);
    for (const auto& pattern : kGhzPatterns) {
      const AmplitudeTable t = amplitude_table(psi, pattern);
      double total = 0.0;
      for (int idx = 0; idx < kDim; ++idx) {
        const Complex ref = oracle::amplitude(ov, pattern_name(pattern), idx);
        CHECK(std::abs(t.entries[idx] - ref) < 1e-12);
        total += t.probability(idx);
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("mix_with_white_noise endpoints and range") {
  const StateVector ghz = make_ghz();
  const DensityMatrix pure = mix_with_white_noise(ghz, 1.0);
  CHECK((pure.matrix() - ghz.amplitudes() * ghz.amplitudes().adjoint()).norm() < 1e-15);
  const DensityMatrix mixed = mix_with_white_noise(ghz, 0.0);
  CHECK((mixed.matrix() - Matrix8::Identity() / 8.0).norm() < 1e-15);
  CHECK_THROWS_AS(mix_with_white_noise(ghz, -0.1), VisibilityOutOfRange);
  CHECK_THROWS_AS(mix_with_white_noise(ghz, 1.0001), VisibilityOutOfRange);
  CHECK_THROWS_AS(mix_with_white_noise(ghz, std::nan("")), VisibilityOutOfRange);
}

TEST_CASE("state validation") {
  Vector8 v = Vector8::Zero();
  v(0) = 1.0 + 1e-9;
  CHECK_THROWS_AS(StateVector{v}, InputError);
  CHECK_THROWS_AS(StateVector::normalized(Vector8::Zero()), InputError);

  Matrix8 rho = Matrix8::Identity() / 8.0;
  rho(0, 1) = 0.01;  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix{rho}, InputError);

  Matrix8 neg = Matrix8::Zero();
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, InputError);

  CHECK_THROWS_AS(Observable::parse("XQ"), InputError);
  CHECK_THROWS_AS(parse_pattern("xz"), InputError);
  CHECK_THROWS_AS(parse_pattern("xzy"), InputError);
}

TEST_CASE("product states carry their Bloch expectations") {
  const double t = 0.7, p = 1.9;
  const StateVector psi = product_state({BlochAngles{t, p}, BlochAngles{0, 0}, BlochAngles{0, 0}});
  CHECK(expectation(psi, Observable::parse("XII")) == doctest::Approx(std::sin(t) * std::cos(p)));
  CHECK(expectation(psi, Observable::parse("YII")) == doctest::Approx(std::sin(t) * std::sin(p)));
  CHECK(expectation(psi, Observable::parse("ZII")) == doctest::Approx(std::cos(t)));
}

TEST_CASE("state JSON round trip preserves amplitudes") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = StateVector::normalized(random_vector(rng));
    const State back = state_from_json(state_to_json(psi));
    CHECK((std::get<StateVector>(back).amplitudes() - psi.amplitudes()).norm() == 0.0);

    const DensityMatrix rho = mix_with_white_noise(psi, rng.uniform());
    const State back_rho = state_from_json(state_to_json(rho));
    CHECK((std::get<DensityMatrix>(back_rho).matrix() - rho.matrix()).norm() == 0.0);
  }
}

TEST_CASE("state JSON schema errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"re": [1,0,0,0,0,0,0,0], "im": [0,0,0,0,0,0,0,0]})")),
                  InputError);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"dim": 4, "re": [1,0,0,0], "im": [0,0,0,0]})")),
                  InputError);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"dim": 8, "re": [1,0,0], "im": [0,0,0]})")),
                  InputError);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"dim": 8, "re": [1,0,0,0,0,0,0,"a"], "im": [0,0,0,0,0,0,0,0]})")),
                  InputError);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"dim": 8, "re": [2,0,0,0,0,0,0,0], "im": [0,0,0,0,0,0,0,0]})")),
                  InputError);
  CHECK_NOTHROW(state_from_json(json::parse(R"({"dim": 8, "re": [0,0,0,0,0,0,0,1], "im": [0,0,0,0,0,0,0,0]})")));
}
