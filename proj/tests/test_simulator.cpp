// Copyright 2026 The socnorm Authors.
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

#include <cmath>

#include "doctest.h"
#include "socnorm/equilibrium.hpp"
#include "socnorm/simulator.hpp"

namespace socnorm {
namespace {

SimConfig Config(double gamma, double beta, double alpha, int m, double rho0,
                 std::uint64_t seed, int agents = 10000, int periods = 500) {
  SimConfig c;
  c.params = SystemParams::FromRatio(gamma, beta, alpha, m);
  c.agents = agents;
  c.periods = periods;
  c.initial_good = rho0;
  c.seed = seed;
  return c;
}

bool SameTrace(const SimTrace& a, const SimTrace& b) {
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.good_start != y.good_start || x.inflow != y.inflow ||
        x.outflow != y.outflow || x.services != y.services || x.welfare != y.welfare) {
      return false;
    }
  }
  return true;
}

TEST_CASE("determinism and seeds") {
  const auto c = Config(5.0, 0.5, 0.8, 2, 0.4, 99, 500, 50);
  CHECK(SameTrace(RunSimulation(c), RunSimulation(c)));
  auto d = c;
  d.seed = 100;
  CHECK_FALSE(SameTrace(RunSimulation(c), RunSimulation(d)));
}

TEST_CASE("initial state and conservation") {
  const auto c = Config(8.0, 0.25, 0.9, 3, 0.337, 5, 1001, 80);
  const auto t = RunSimulation(c);
  REQUIRE(t.records.size() == 80);
  CHECK(t.records[0].good_start == 337);
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const auto& r = t.records[i];
    CHECK(r.inflow <= c.agents - r.good_start);
    CHECK(r.outflow <= r.good_start);
    CHECK(r.good_end() >= 0);
    CHECK(r.good_end() <= c.agents);
    CHECK(r.services <= c.agents);
    if (i > 0) CHECK(r.good_start == t.records[i - 1].good_end());
  }
}

TEST_CASE("welfare uses raw benefit and cost") {
  SimConfig c;
  c.params = SystemParams::FromBenefitCost(10.0, 2.0, 0.5, 1.0, 1);
  c.agents = 200;
  c.periods = 5;
  const auto t = RunSimulation(c);
  for (const auto& r : t.records) CHECK(r.welfare == doctest::Approx(8.0 * r.services));
}

TEST_CASE("config validation") {
  auto c = Config(5.0, 0.5, 1.0, 0, 0.5, 1, 1, 10);
  CHECK_THROWS_AS(RunSimulation(c), Error);
  c.agents = 10;
  c.periods = 0;
  CHECK_THROWS_AS(RunSimulation(c), Error);
  c.periods = 5;
  c.initial_good = 1.5;
  CHECK_THROWS_AS(RunSimulation(c), Error);
  c.initial_good = 0.5;
  c.window = 0;
  CHECK_THROWS_AS(RunSimulation(c), Error);
}

TEST_CASE("agreement with mean-field roots") {
  const auto m0 = RunSimulation(Config(10.0, 0.25, 0.9, 0, 0.5, 2024));
  CHECK(std::abs(m0.WindowAverage() - 0.6322) < 0.03);
  const auto p1 = SystemParams::FromRatio(5.0, 0.5, 1.0, 1);
  const auto m1 = RunSimulation(Config(5.0, 0.5, 1.0, 1, 0.5, 2025));
  const auto cmp = CompareToMeanField(m1, p1);
  CHECK(cmp.nearest_stable_root == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(cmp.gap < 0.03);
  CHECK(cmp.mean_abs_inflow_rate_gap < 0.01);
  CHECK(cmp.mean_abs_outflow_rate_gap < 0.01);
}

TEST_CASE("zero punishment decays") {
  const auto t = RunSimulation(Config(5.0, 0.5, 0.0, 1, 0.5, 8, 5000, 200));
  CHECK(t.FinalGoodFraction() < 0.05);
  for (const auto& r : t.records) CHECK(r.inflow == 0);
}

TEST_CASE("bistable regime from two starting points") {
  const auto p = SystemParams::FromRatio(8.0, 0.25, 0.9, 6);
  const auto roots = FindEquilibria(p).StableRoots();
  REQUIRE(roots.size() == 2);
  const auto lo = CompareToMeanField(RunSimulation(Config(8.0, 0.25, 0.9, 6, 0.1, 31, 10000, 300)), p);
  const auto hi = CompareToMeanField(RunSimulation(Config(8.0, 0.25, 0.9, 6, 0.9, 32, 10000, 300)), p);
  CHECK(lo.nearest_stable_root == roots[0]);
  CHECK(hi.nearest_stable_root == roots[1]);
  CHECK(lo.gap < 0.03);
  CHECK(hi.gap < 0.03);
}

TEST_CASE("one-period flow rates at a held state") {
  for (auto [m, rho0] : {std::pair{0, 0.5}, {1, 0.4}, {4, 0.7}}) {
    const auto p = SystemParams::FromRatio(5.0, 0.5, 0.8, m);
    auto c = Config(5.0, 0.5, 0.8, m, rho0, 77 + m, 100000, 1);
    const auto cmp = CompareToMeanField(RunSimulation(c), p);
    CHECK(std::abs(cmp.first_inflow_z) < 3.0);
    CHECK(std::abs(cmp.first_outflow_z) < 3.0);
  }
}

}  // namespace
}  // namespace socnorm
