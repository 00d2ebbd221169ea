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

#include <bit>
#include <cmath>
#include <numbers>

#include "ghzlab/errors.hpp"
#include "ghzlab/locality.hpp"

using namespace ghzlab;

namespace {

Cause uniform_cause(double weight) {
  Cause c;
  c.weight = weight;
  for (auto& party : c.p_plus) party = {0.5, 0.5};
  return c;
}

Cause deterministic_cause(double weight, double p) {
  Cause c;
  c.weight = weight;
  for (auto& party : c.p_plus) party = {p, p};
  return c;
}

// Independent relation evaluation over raw (i_x, i_y, j_x, j_y, k_x, k_y).
std::array<int, 4> products(const std::array<int, 6>& s) {
  return {s[0] * s[2] * s[4], s[0] * s[3] * s[5], s[1] * s[2] * s[5], s[1] * s[3] * s[4]};
}

}  // namespace

TEST_CASE("joint probabilities of simple models") {
  const LocalModel uniform({uniform_cause(1.0)});
  for (int idx = 0; idx < kDim; ++idx) {
    CHECK(model_joint_probability(uniform, parse_pattern("xyx"), outcome_signs(idx)) ==
          doctest::Approx(0.125));
  }
  const LocalModel plus({deterministic_cause(1.0, 1.0)});
  CHECK(model_joint_probability(plus, parse_pattern("xxx"), {1, 1, 1}) == 1.0);
  CHECK(model_joint_probability(plus, parse_pattern("xxx"), {1, -1, 1}) == 0.0);

  const LocalModel mix({deterministic_cause(0.5, 1.0), deterministic_cause(0.5, 0.0)});
  CHECK(model_joint_probability(mix, parse_pattern("xxx"), {1, 1, 1}) == doctest::Approx(0.5));
  CHECK(model_joint_probability(mix, parse_pattern("xxx"), {-1, -1, -1}) == doctest::Approx(0.5));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(LocalModel({}), InputError);
  CHECK_THROWS_AS(LocalModel({uniform_cause(0.7)}), InputError);
  CHECK_THROWS_AS(LocalModel({uniform_cause(1.2), uniform_cause(-0.2)}), InputError);
  CHECK_THROWS_AS(LocalModel({deterministic_cause(1.0, 1.5)}), InputError);
}

TEST_CASE("conditional correlators") {
  const LocalModel uniform({uniform_cause(1.0)});
  for (double v : correlators(uniform, 0).values) CHECK(v == 0.0);

  const LocalModel plus({deterministic_cause(1.0, 1.0)});
  for (double v : correlators(plus, 0).values) CHECK(v == 1.0);

  Cause c = uniform_cause(1.0);
  c.p_plus[0][0] = 0.75;
  const LocalModel m({c});
  CHECK(correlators(m, 0).at(0, Setting::X) == doctest::Approx(0.5));
  CHECK_THROWS_AS(correlators(m, 1), InputError);
}

TEST_CASE("mixture triple correlations") {
  const auto u = model_triple_correlations(LocalModel({uniform_cause(1.0)}));
  for (double v : u) CHECK(v == 0.0);
  const auto p = model_triple_correlations(LocalModel({deterministic_cause(1.0, 1.0)}));
  for (double v : p) CHECK(v == 1.0);
  const auto mix = model_triple_correlations(
      LocalModel({deterministic_cause(0.5, 1.0), deterministic_cause(0.5, 0.0)}));
  for (double v : mix) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("triple correlations of any model stay in [-1, 1]") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const LocalModel m = random_local_model(rng, 1 + trial % 5);
    for (double v : model_triple_correlations(m)) {
      CHECK(v >= -1.0);
      CHECK(v <= 1.0);
    }
    const MerminPoint pt = model_mermin_point(m);
    CHECK(std::abs(pt.m) <= 2.0 + 1e-12);
    CHECK(std::abs(pt.mprime) <= 2.0 + 1e-12);
  }
}

TEST_CASE("strategy enumeration order") {
  const auto all = enumerate_strategies();
  REQUIRE(all.size() == 64);
  for (int s : all.front().signs) CHECK(s == 1);
  for (int s : all.back().signs) CHECK(s == -1);
  // Last quantity (k_y) varies fastest, first (i_x) slowest.
  CHECK(all[1].signs == std::array<int, 6>{1, 1, 1, 1, 1, -1});
  CHECK(all[32].signs == std::array<int, 6>{-1, 1, 1, 1, 1, 1});
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) CHECK(!(all[a] == all[b]));
}

TEST_CASE("deterministic strategies give 0/1 tables") {
  for (const auto& s : enumerate_strategies()) {
    const CorrelationTable t = model_to_table(strategy_model(s));
    for (const auto& block : t.blocks) {
      int ones = 0;
      for (double p : block) {
        CHECK((p == 0.0 || p == 1.0));
        ones += p == 1.0;
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("sign-level contradiction") {
  const InfeasibilityReport rep = ghz_sign_feasibility();
  CHECK(rep.assignments_checked == 64);
  CHECK(rep.satisfying == 0);
  CHECK(rep.max_subset == 3);
  CHECK(rep.parity_lhs == 1);
  CHECK(rep.parity_rhs == -1);
  CHECK(rep.parity_uniform);
  for (int omit = 0; omit < 4; ++omit) {
    REQUIRE(rep.triple_witness[omit].has_value());
    const auto prod = products(strategy_at(*rep.triple_witness[omit]).signs);
    for (int r = 0; r < 4; ++r) {
      if (r != omit) CHECK(prod[r] == kGhzTargets[r]);
    }
  }
}

TEST_CASE("brute-force parity identity and subset counts") {
  const std::array<int, 4> target{1, -1, -1, -1};
  int max_met = 0;
  std::array<int, 16> subset_witnesses{};
  for (int bits = 0; bits < 64; ++bits) {
    std::array<int, 6> s{};
    for (int q = 0; q < 6; ++q) s[q] = (bits >> q) & 1 ? -1 : 1;
    const auto p = products(s);
    CHECK(p[0] * p[1] * p[2] * p[3] == 1);
    unsigned met = 0;
    for (int r = 0; r < 4; ++r) met |= (p[r] == target[r] ? 1u : 0u) << r;
    max_met = std::max(max_met, std::popcount(met));
    for (unsigned sub = 1; sub < 16; ++sub) {
      if ((met & sub) == sub) ++subset_witnesses[sub];
    }
  }
  CHECK(max_met == 3);
  CHECK(subset_witnesses[15] == 0);
  for (unsigned sub : {7u, 11u, 13u, 14u}) CHECK(subset_witnesses[sub] > 0);
  CHECK(ghz_sign_feasibility().max_subset == max_met);
}

TEST_CASE("Heisenberg-Robertson constrained satisfiability") {
  SUBCASE("small tolerances allow exactly one relation") {
    for (double tol : {1e-9, 1e-8, 1e-6, 1e-4, 1e-3}) {
      const HrSatisfiability r = hr_constrained_satisfiability(tol);
      CHECK(r.max_satisfied == 1);
    }
    const HrSatisfiability r = hr_constrained_satisfiability(1e-6);
    CHECK(r.witness.values == std::array<double, 6>{1, 0, 1, 0, 1, 0});
    CHECK(r.relations_mask == 1u);
  }
  SUBCASE("witness respects the constraint") {
    for (double tol : {1e-6, 0.55, 0.7}) {
      const HrSatisfiability r = hr_constrained_satisfiability(tol);
      for (int q = 0; q < 3; ++q) {
        const double x = r.witness.at(q, Setting::X), y = r.witness.at(q, Setting::Y);
        CHECK(x * x + y * y <= 1.0 + 1e-15);
      }
      CHECK(count_satisfied(r.witness, tol) >= r.max_satisfied);
    }
  }
  SUBCASE("without the constraint three relations fit") {
    CHECK(hr_constrained_satisfiability(1e-6, false).max_satisfied == 3);
  }
  SUBCASE("loose tolerances") {
    // Pairs need every product >= 1/2, triples >= 2/(3 sqrt 3).
    CHECK(hr_constrained_satisfiability(0.49).max_satisfied == 1);
    CHECK(hr_constrained_satisfiability(0.51).max_satisfied == 2);
    CHECK(hr_constrained_satisfiability(0.61).max_satisfied == 2);
    CHECK(hr_constrained_satisfiability(0.62).max_satisfied == 3);
    CHECK(hr_constrained_satisfiability(0.99).max_satisfied == 3);
  }
  SUBCASE("range errors") {
    CHECK_THROWS_AS(hr_constrained_satisfiability(0.0), ToleranceOutOfRange);
    CHECK_THROWS_AS(hr_constrained_satisfiability(1.0), ToleranceOutOfRange);
    CHECK_THROWS_AS(hr_constrained_satisfiability(-1e-6), ToleranceOutOfRange);
  }
  SUBCASE("all-zero correlators meet nothing") {
    CHECK(count_satisfied(CorrelatorVector{}, 1e-6) == 0);
  }
}

TEST_CASE("grid oracle for the worst relation in a pair and a triple") {
  // Exhaustive angle grid; each party sits on x^2 + y^2 = 1.
  auto best_margin = [](unsigned mask) {
    const int n = 120;
    double best = -2.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const double pa = 2 * std::numbers::pi * a / n, pb = 2 * std::numbers::pi * b / n,
                       pc = 2 * std::numbers::pi * c / n;
          const std::array<double, 6> v{std::cos(pa), std::sin(pa), std::cos(pb),
                                        std::sin(pb), std::cos(pc), std::sin(pc)};
          const std::array<double, 4> p{v[0] * v[2] * v[4], v[0] * v[3] * v[5],
                                        v[1] * v[2] * v[5], v[1] * v[3] * v[4]};
          double worst = 2.0;
          for (int r = 0; r < 4; ++r)
            if (mask >> r & 1u) worst = std::min(worst, kGhzTargets[r] * p[r]);
          best = std::max(best, worst);
        }
    return best;
  };
  const double pair = best_margin(0b0011);
  const double triple = best_margin(0b1110);
  CHECK(pair <= 0.5 + 1e-12);
  CHECK(pair == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(triple <= 2.0 / (3.0 * std::sqrt(3.0)) + 1e-12);
  CHECK(triple == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(5e-3));

  const HrCrosscheck num = hr_numeric_crosscheck(1e-6, 42, 8);
  CHECK(num.max_satisfied == 1);
  CHECK(num.best_margin[0b0001] == doctest::Approx(1.0));
  CHECK(num.best_margin[0b0011] <= 0.5 + 1e-9);
  CHECK(num.best_margin[0b1110] <= 2.0 / (3.0 * std::sqrt(3.0)) + 1e-9);
  CHECK(num.best_margin[0b1111] < 1.0 - 1e-6);
}

TEST_CASE("two-party perfect correlations have local assignments") {
  const auto a = epr_contrast(-1, -1);
  REQUIRE(a);
  CHECK(a->i_x == 1);
  CHECK(a->i_y == 1);
  CHECK(a->j_x == -1);
  CHECK(a->j_y == -1);
  const auto b = epr_contrast(1, 1);
  REQUIRE(b);
  CHECK((b->i_x == 1 && b->i_y == 1 && b->j_x == 1 && b->j_y == 1));
  for (int c1 : {1, -1})
    for (int c2 : {1, -1}) {
      const auto s = epr_contrast(c1, c2);
      REQUIRE(s);
      CHECK(s->i_x * s->j_x == c1);
      CHECK(s->i_y * s->j_y == c2);
    }
  CHECK(!epr_contrast(0, 1));
}

TEST_CASE("polytope membership") {
  SUBCASE("uniform table is inside") {
    CorrelationTable t;
    for (auto& b : t.blocks) b.fill(0.125);
    const MembershipResult r = polytope_membership(t);
    CHECK(r.inside);
    CHECK(r.max_residual <= 1e-9);
  }
  SUBCASE("GHZ table is outside") {
    const CorrelationTable t = state_table(make_ghz());
    CHECK(table_mermin_value(t) == doctest::Approx(4.0));
    CHECK(!polytope_membership(t).inside);
  }
  SUBCASE("a deterministic table is its own strategy") {
    for (int idx : {0, 17, 42, 63}) {
      const MembershipResult r =
          polytope_membership(model_to_table(strategy_model(strategy_at(idx))));
      REQUIRE(r.inside);
      CHECK(r.weights[idx] == doctest::Approx(1.0));
    }
  }
  SUBCASE("random common-cause models round trip") {
    Rng rng(200);
    for (int trial = 0; trial < 200; ++trial) {
      const LocalModel m = random_local_model(rng, 1 + trial % 6);
      const MembershipResult r = polytope_membership(model_to_table(m));
      CHECK(r.inside);
      double total = 0.0;
      for (double w : r.weights) {
        CHECK(w >= 0.0);
        total += w;
      }
      CHECK(total == doctest::Approx(1.0));
    }
  }
  SUBCASE("tables with Mermin value above 2 are outside") {
    for (double v : {0.55, 0.7, 0.9, 1.0}) {
      const CorrelationTable t = state_table(mix_with_white_noise(make_ghz(), v));
      CHECK(table_mermin_value(t) > 2.0);
      CHECK(!polytope_membership(t).inside);
    }
  }
  SUBCASE("malformed tables") {
    CorrelationTable t;
    for (auto& b : t.blocks) b.fill(0.125);
    t.blocks[2][0] = 0.2;
    CHECK_THROWS_AS(polytope_membership(t), MalformedTable);
    t.blocks[2][0] = -0.125;
    t.blocks[2][1] = 0.375;
    CHECK_THROWS_AS(polytope_membership(t), MalformedTable);
  }
}

TEST_CASE("correlation table JSON") {
  const CorrelationTable t = state_table(make_ghz());
  const auto j = table_to_json(t);
  CHECK(j.at("blocks").size() == 4);
  CHECK(j.at("blocks").at("xyy").size() == 8);
  const CorrelationTable back = table_from_json(j);
  CHECK(back.blocks == t.blocks);
  CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"blocks": {"xxx": [1]}})")),
                  MalformedTable);
  CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"rows": []})")), MalformedTable);
}
