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

// Choice of the punishment severity alpha that maximizes the stable
// good fraction, plus grid sweeps over environment parameters.

#ifndef SOCNORM_DESIGN_HPP_
#define SOCNORM_DESIGN_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "socnorm/equilibrium.hpp"

namespace socnorm {

enum class DesignMethod { kClosedFormM0, kClosedFormM1, kGridSearch };

std::string_view ToString(DesignMethod m);

struct AlphaInterval {
  double lower = 0.0;
  double upper = 1.0;
};

struct AlphaProfilePoint {
  double alpha = 0.0;
  std::vector<double> stable_roots;
};

struct DesignResult {
  double beta = 0.5;
  double gamma = 2.0;
  int observations = 0;
  bool feasible = false;
  std::optional<double> alpha_star;
  double rho_star = 0.0;
  DesignMethod method = DesignMethod::kGridSearch;
  // Alphas with rho_B(alpha) <= 1.
  std::optional<AlphaInterval> feasible_alpha_range;
  // |closed form - grid search| for rho_star when both were computed.
  std::optional<double> cross_check_gap;
  // Stable roots at every grid alpha; filled when requested.
  std::vector<AlphaProfilePoint> profile;
  int grid_n = 0;
};

struct DesignOptions {
  int grid_n = 512;
  double refine_tol = 1e-10;
  bool keep_profile = false;
  SolverOptions solver;
};

// Smallest alpha with rho_B <= 1: (1 - beta) / (beta (gamma - 1)).
double MinimumFeasibleAlpha(double beta, double gamma);

// Grid over the feasible alpha range, golden-section refinement in the
// winning bracket. For M in {0, 1} the closed-form design is returned
// when it is at least as good as the grid optimum.
DesignResult OptimizeAlpha(double beta, double gamma, int observations,
                           DesignOptions options = {});

// alpha* = min{(gamma beta (gamma - 1) + 1 - beta) / (2 beta (gamma - 1)), 1}
// with the induced M = 0 equilibrium.
DesignResult OptimalAlphaM0(double beta, double gamma);

// alpha* = 1 and the large-gamma M = 1 value (1-x)^2 / ((1-x)^2 + x^2),
// x = (1 - beta) / (beta gamma). An approximation: the exact equilibrium
// at alpha = 1 comes from ClosedFormM1.
DesignResult OptimalAlphaM1(double beta, double gamma);

struct SweepAxes {
  std::vector<double> betas;
  std::vector<double> gammas;
  std::vector<int> observations;
  // Empty: optimize alpha per cell instead of sweeping it.
  std::vector<double> alphas;
};

struct SweepCell {
  double beta = 0.0;
  double gamma = 0.0;
  int observations = 0;
  // Swept alpha, or alpha* when alpha is optimized; nullopt if infeasible.
  std::optional<double> alpha;
  double max_stable_rho = 0.0;
  bool feasible = false;
  std::vector<double> stable_roots;
};

struct SweepTable {
  SweepAxes axes;
  bool alpha_optimized = false;
  int grid_n = 0;
  // Row-major over (beta, gamma, M, alpha).
  std::vector<SweepCell> cells;
};

SweepTable Sweep(const SweepAxes& axes, DesignOptions options = {});

}  // namespace socnorm

#endif  // SOCNORM_DESIGN_HPP_
