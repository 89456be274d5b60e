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
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "socnorm/dynamics.hpp"
#include "socnorm/equilibrium.hpp"

namespace socnorm {
namespace {

SystemParams P(double gamma, double beta, double alpha, int m) {
  return SystemParams::FromRatio(gamma, beta, alpha, m);
}

double HandM0(double gamma, double beta, double alpha) {
  const double rg = (1 - beta) / (beta * (gamma - alpha));
  const double rb = (1 - beta) / (beta * alpha * (gamma - 1));
  return alpha * (1 - rb) / (alpha * (1 - rb) + rg);
}

TEST_CASE("M=0 reference case") {
  const auto rep = FindEquilibria(P(10.0, 0.25, 0.9, 0));
  REQUIRE(rep.roots.size() == 2);
  CHECK(rep.roots[0].social_reputation == 0.0);
  CHECK(rep.roots[0].stability == Stability::kUnstable);
  CHECK(rep.roots[1].stable());
  CHECK(std::abs(rep.roots[1].social_reputation - HandM0(10, 0.25, 0.9)) < 1e-10);
  CHECK(std::abs(rep.roots[1].social_reputation - 0.6322) < 1e-4);
  REQUIRE(rep.closed_form);
  CHECK(std::abs(*rep.closed_form - HandM0(10, 0.25, 0.9)) < 1e-15);
  REQUIRE(rep.general_bounds);
  CHECK(rep.general_bounds->lower == doctest::Approx(*rep.closed_form).epsilon(1e-14));
  CHECK(rep.general_bounds->upper == doctest::Approx(*rep.closed_form).epsilon(1e-14));
  CHECK(rep.large_gamma_bound == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(*ClosedFormM0(P(5.0, 0.5, 1.0, 0)) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_FALSE(ClosedFormM0(P(5.0, 0.5, 0.1, 0)));
  CHECK_THROWS_AS(ClosedFormM0(P(5.0, 0.5, 1.0, 1)), Error);
}

TEST_CASE("M=1 reference case") {
  const auto p = P(5.0, 0.5, 1.0, 1);
  const auto rep = FindEquilibria(p);
  CHECK(std::abs(rep.MaxStableRoot() - 0.9) < 1e-10);
  const auto cf = ClosedFormM1(p);
  CHECK(std::abs(cf.quadratic) < 1e-15);
  CHECK(cf.linear == doctest::Approx(-0.625));
  CHECK(cf.constant == doctest::Approx(0.5625));
  REQUIRE(cf.MaxStableRoot());
  CHECK(*cf.MaxStableRoot() == doctest::Approx(0.9).epsilon(1e-15));
  REQUIRE(cf.exact_threshold_bounds);
  CHECK(cf.exact_threshold_bounds->lower == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(cf.exact_threshold_bounds->upper == doctest::Approx(0.9).epsilon(1e-14));
  const auto cf10 = ClosedFormM1(P(10.0, 0.5, 1.0, 1));
  REQUIRE(cf10.approximate_threshold_bounds);
  CHECK(cf10.approximate_threshold_bounds->upper ==
        doctest::Approx(0.81 / 0.82).epsilon(1e-14));
  REQUIRE(rep.general_bounds);
  CHECK(rep.general_bounds->lower <= 0.9);
  CHECK(rep.general_bounds->upper >= 0.9);
  CHECK_THROWS_AS(ClosedFormM1(P(5.0, 0.5, 1.0, 2)), Error);
}

TEST_CASE("M=1 quadratic coefficient identity") {
  for (double alpha : {0.3, 0.6, 0.9, 1.0}) {
    const auto p = P(8.0, 0.5, alpha, 1);
    const auto t = ComputeThresholds(p);
    const auto cf = ClosedFormM1(p);
    const double expected =
        2.0 * (t.good * (1 - t.good) - alpha * t.bad * (1 - t.bad));
    CHECK(cf.quadratic == doctest::Approx(expected).epsilon(1e-13));
    const auto g = BuildDeltaPolynomial(p).reduced.MonomialCoefficients();
    CHECK(g[0] == doctest::Approx(cf.constant).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(cf.linear).epsilon(1e-12));
    CHECK(g[2] == doctest::Approx(cf.quadratic).epsilon(1e-12));
  }
}

TEST_CASE("zero punishment strength") {
  for (int m = 0; m <= 6; ++m) {
    const auto rep = FindEquilibria(P(5.0, 0.5, 0.0, m));
    const auto stable = rep.StableRoots();
    REQUIRE(stable.size() == 1);
    CHECK(stable[0] == 0.0);
  }
}

TEST_CASE("large-gamma bound values") {
  for (int m = 0; m <= 5; ++m) {
    CHECK(LargeGammaBound(P(6.0, 0.5, 1.0, m)) ==
          doctest::Approx(1.0 - std::pow(0.2, m + 1)).epsilon(1e-14));
  }
  CHECK(LargeGammaBound(P(6.0, 0.5, 1.0, 60)) == doctest::Approx(1.0));
  CHECK_FALSE(GeneralBounds(P(1.2, 0.3, 0.5, 2)));
}

TEST_CASE("grid sweep properties") {
  for (double beta : {0.25, 0.5, 0.75}) {
    for (double gamma : {3.0, 5.0, 8.0, 10.0}) {
      for (double alpha : {0.3, 0.6, 0.9, 1.0}) {
        for (int m = 0; m <= 6; ++m) {
          const auto p = P(gamma, beta, alpha, m);
          const auto rep = FindEquilibria(p);
          const auto t = rep.thresholds;
          const auto stable = rep.StableRoots();
          CAPTURE(beta);
          CAPTURE(gamma);
          CAPTURE(alpha);
          CAPTURE(m);
          if (t.bad > 1.0) {
            REQUIRE(stable.size() == 1);
            CHECK(stable[0] == 0.0);
            continue;
          }
          CHECK(rep.roots[0].stability == Stability::kUnstable);
          CHECK(rep.MaxStableRoot() > 0.0);
          REQUIRE(rep.general_bounds);
          CHECK(rep.general_bounds->lower <= rep.general_bounds->upper + 1e-12);
          for (double r : stable) {
            CHECK(r >= rep.general_bounds->lower - 1e-9);
            CHECK(r <= rep.general_bounds->upper + 1e-9);
            if (alpha == 1.0 && gamma >= 4.0) CHECK(r <= rep.large_gamma_bound + 1e-9);
          }
          for (std::size_t i = 1; i < rep.roots.size(); ++i) {
            CHECK(rep.roots[i].stability != rep.roots[i - 1].stability);
          }
          if (m <= 1) {
            REQUIRE(rep.closed_form);
            CHECK(std::abs(rep.MaxStableRoot() - *rep.closed_form) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("roots agree with an independent scan of Delta") {
  for (int m : {2, 4, 6}) {
    for (double alpha : {0.5, 0.9}) {
      const auto p = P(8.0, 0.25, alpha, m);
      const auto rep = FindEquilibria(p);
      const auto scan = oracle::ScanRoots(
          [&](double x) { return Delta(x, p) / x; }, 1e-9, 1.0, 5000);
      REQUIRE(rep.roots.size() == scan.size() + 1);
      for (std::size_t i = 0; i < scan.size(); ++i) {
        CHECK(std::abs(rep.roots[i + 1].social_reputation - scan[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("bistable regime") {
  const auto rep = FindEquilibria(P(8.0, 0.25, 0.9, 6));
  const auto stable = rep.StableRoots();
  REQUIRE(stable.size() == 2);
  CHECK(stable[0] > 0.0);
  CHECK(stable[1] - stable[0] > 0.5);
}

TEST_CASE("higher-order classification at zero") {
  // alpha = 0 at M = 0: Delta = -rho_G rho^2, double root at zero.
  const auto rep = FindEquilibria(P(5.0, 0.5, 0.0, 0));
  REQUIRE(rep.roots.size() == 1);
  CHECK(rep.roots[0].stability == Stability::kStable);
}

TEST_CASE("solver option validation") {
  CHECK_THROWS_AS(FindEquilibria(P(5, 0.5, 1, 0), {32, 1e-12, 1e-12}), Error);
  CHECK_THROWS_AS(FindEquilibria(P(5, 0.5, 1, 0), {128, 0.0, 1e-12}), Error);
}

}  // namespace
}  // namespace socnorm
