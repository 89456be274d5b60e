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

// Mean-field dynamics of the good fraction rho_s:
//
//   Delta(rho_s) = alpha (1 - rho_s) rho_s F(rho >= rho_B | rho_s)
//                  - rho_s^2 F(rho <= rho_G | rho_s)
//
// The first term is the bad-to-good flow, the second the good-to-bad flow.

#ifndef SOCNORM_DYNAMICS_HPP_
#define SOCNORM_DYNAMICS_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "socnorm/norm.hpp"
#include "socnorm/params.hpp"
#include "socnorm/polynomial.hpp"

namespace socnorm {

struct DynamicsState {
  double social_reputation = 0.0;
  std::int64_t period = 0;
};

struct ReputationFlows {
  double inflow = 0.0;   // bad to good
  double outflow = 0.0;  // good to bad
};

// Both flows evaluated through the belief mixture tails. A threshold
// above one makes the inflow vanish (rho_B) or truncates the head
// integral at one (rho_G).
ReputationFlows ComputeFlows(double social_reputation, const SystemParams& params);

double Delta(double social_reputation, const SystemParams& params);

// Exact derivative of the Delta polynomial.
double DeltaDerivative(double social_reputation, const SystemParams& params);

DynamicsState Step(const DynamicsState& state, const SystemParams& params);

// Delta as a degree-(M + 2) polynomial in rho_s. Each mixture tail is a
// degree-M Bernstein polynomial whose coefficients are the per-m beta
// tails, so Delta has an exact Bernstein representation.
struct DeltaPolynomial {
  Thresholds thresholds;
  // Pr[Beta(m+1, M-m+1) >= rho_B] and Pr[Beta(m+1, M-m+1) <= rho_G].
  std::vector<double> tail_constants;
  std::vector<double> head_constants;
  BernsteinPolynomial delta;
  BernsteinPolynomial derivative;
  // Delta(rho_s) / rho_s, degree M + 1. Its roots are the nonzero
  // equilibria and its value at zero is Delta'(0).
  BernsteinPolynomial reduced;

  int degree() const { return delta.degree(); }
  std::vector<double> MonomialCoefficients() const {
    return delta.MonomialCoefficients();
  }
};

DeltaPolynomial BuildDeltaPolynomial(const SystemParams& params);

enum class TrajectoryStop { kConverged, kMaxPeriods };

std::string_view ToString(TrajectoryStop stop);

struct TrajectoryOptions {
  std::int64_t max_periods = 100000;
  double tolerance = 1e-10;
};

struct TrajectoryRecord {
  std::int64_t period = 0;
  double social_reputation = 0.0;
  ReputationFlows flows;
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  TrajectoryStop stop = TrajectoryStop::kMaxPeriods;
  TrajectoryOptions options;

  double final_value() const { return records.back().social_reputation; }
};

// Iterates rho <- rho + Delta(rho) from `initial` until |Delta| drops
// below the tolerance or the period budget runs out. Records carry the
// flows evaluated at the start of each period.
Trajectory IterateDynamics(double initial, const SystemParams& params,
                           TrajectoryOptions options = {});

// Long-run state when beliefs equal the true good fraction.
double UnlimitedObservationsLimit(double initial, const SystemParams& params);

}  // namespace socnorm

#endif  // SOCNORM_DYNAMICS_HPP_
