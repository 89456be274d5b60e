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

#ifndef SOCNORM_EQUILIBRIUM_HPP_
#define SOCNORM_EQUILIBRIUM_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "socnorm/norm.hpp"
#include "socnorm/params.hpp"

namespace socnorm {

enum class Stability { kStable, kUnstable, kMarginal };

std::string_view ToString(Stability s);

struct EquilibriumRoot {
  double social_reputation = 0.0;
  Stability stability = Stability::kMarginal;
  double derivative = 0.0;  // Delta'(rho_s)

  bool stable() const { return stability == Stability::kStable; }
};

struct Bounds {
  double lower = 0.0;
  double upper = 1.0;
};

struct SolverOptions {
  int grid_n = 4096;
  double tol = 1e-12;
  double derivative_tol = 1e-12;
};

struct EquilibriumReport {
  SystemParams params;
  Thresholds thresholds;
  // Ascending; rho_s = 0 is always first.
  std::vector<EquilibriumRoot> roots;
  std::optional<Bounds> general_bounds;
  double large_gamma_bound = 1.0;
  std::optional<double> closed_form;
  SolverOptions options;

  std::vector<double> StableRoots() const;
  // Largest stable root, or 0 when none exists.
  double MaxStableRoot() const;
};

// Roots of Delta on [0, 1]: sign changes of Delta(rho)/rho on a uniform
// grid, refined by bisection. A root whose first derivative is within
// derivative_tol of zero is classified by its first non-vanishing
// higher derivative: at rho_s = 0 (a boundary point) a negative sign is
// stable, in the interior an even order is reported as marginal.
// Throws Error(kInvalidArgument) if grid_n < 64 or tol <= 0.
EquilibriumReport FindEquilibria(const SystemParams& params,
                                 SolverOptions options = {});

// Range containing every stable equilibrium when both thresholds are at
// most one; nullopt otherwise.
std::optional<Bounds> GeneralBounds(const SystemParams& params);

// 1 - ((1 - beta) / (beta (gamma - 1)))^(M + 1), the alpha = 1 value of
// the general upper bound. Evaluated unconditionally.
double LargeGammaBound(const SystemParams& params);

// Unique stable equilibrium for M = 0; nullopt when rho_B > 1.
// Throws Error(kInvalidArgument) unless M == 0.
std::optional<double> ClosedFormM0(const SystemParams& params);

// M = 1: Delta(rho)/rho is the quadratic
//   g(rho) = quadratic rho^2 + linear rho + constant.
struct ClosedFormM1Result {
  double quadratic = 0.0;
  double linear = 0.0;
  double constant = 0.0;
  // Roots of g in (0, 1), ascending, with stability from g'.
  std::vector<EquilibriumRoot> roots;
  // Chord/tangent bounds under exact thresholds and under the large-gamma
  // threshold approximations rho_G ~ (1-beta)/(beta gamma),
  // rho_B ~ (1-beta)/(alpha beta gamma). Valid when g is convex.
  std::optional<Bounds> exact_threshold_bounds;
  std::optional<Bounds> approximate_threshold_bounds;

  std::optional<double> MaxStableRoot() const;
};

// Throws Error(kInvalidArgument) unless M == 1.
ClosedFormM1Result ClosedFormM1(const SystemParams& params);

}  // namespace socnorm

#endif  // SOCNORM_EQUILIBRIUM_HPP_
