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

#include "socnorm/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "socnorm/belief.hpp"

namespace socnorm {

ReputationFlows ComputeFlows(double social_reputation, const SystemParams& params) {
  RequireProbability(social_reputation, "social reputation");
  const Thresholds t = ComputeThresholds(params);
  const BeliefDistribution dist{social_reputation, params.observations()};
  const double rho = social_reputation;

  ReputationFlows flows;
  if (t.bad <= 1.0) {
    const double complying = BeliefTail({t.bad, TailDirection::kAtLeast}, dist);
    flows.inflow = params.alpha() * (1.0 - rho) * rho * complying;
  }
  const double deviating =
      BeliefTail({std::min(t.good, 1.0), TailDirection::kAtMost}, dist);
  flows.outflow = rho * rho * deviating;
  return flows;
}

double Delta(double social_reputation, const SystemParams& params) {
  const ReputationFlows f = ComputeFlows(social_reputation, params);
  return f.inflow - f.outflow;
}

double DeltaDerivative(double social_reputation, const SystemParams& params) {
  RequireProbability(social_reputation, "social reputation");
  return BuildDeltaPolynomial(params).derivative(social_reputation);
}

DynamicsState Step(const DynamicsState& state, const SystemParams& params) {
  const double next =
      state.social_reputation + Delta(state.social_reputation, params);
  return {std::clamp(next, 0.0, 1.0), state.period + 1};
}

DeltaPolynomial BuildDeltaPolynomial(const SystemParams& params) {
  const int m_total = params.observations();
  const int n = m_total + 2;
  DeltaPolynomial poly;
  poly.thresholds = ComputeThresholds(params);
  const double rho_b = poly.thresholds.bad;
  const double rho_g = std::min(poly.thresholds.good, 1.0);

  poly.tail_constants.resize(static_cast<std::size_t>(m_total) + 1);
  poly.head_constants.resize(static_cast<std::size_t>(m_total) + 1);
  for (int m = 0; m <= m_total; ++m) {
    poly.tail_constants[m] = rho_b <= 1.0 ? BetaTailInt(m, m_total, rho_b) : 0.0;
    poly.head_constants[m] = 1.0 - BetaTailInt(m, m_total, rho_g);
  }

  // Degree elevation of the two flow terms:
  //   x (1 - x) B_{m,M} = (k (n - k) / ((M + 1) n)) B_{k,n},  k = m + 1
  //   x^2       B_{m,M} = (k (k - 1) / ((M + 1) n)) B_{k,n},  k = m + 2
  const double norm = static_cast<double>(m_total + 1) * n;
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 0; m <= m_total; ++m) {
    const int k_in = m + 1;
    coeffs[k_in] += params.alpha() * poly.tail_constants[m] *
                    (static_cast<double>(k_in) * (n - k_in) / norm);
    const int k_out = m + 2;
    coeffs[k_out] -= poly.head_constants[m] *
                     (static_cast<double>(k_out) * (k_out - 1) / norm);
  }
  // x B_{j,n-1} = ((j + 1) / n) B_{j+1,n}; coeffs[0] is zero.
  std::vector<double> reduced(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    reduced[j] = coeffs[j + 1] * n / (j + 1.0);
  }
  poly.delta = BernsteinPolynomial(std::move(coeffs));
  poly.derivative = poly.delta.Derivative();
  poly.reduced = BernsteinPolynomial(std::move(reduced));
  return poly;
}

std::string_view ToString(TrajectoryStop stop) {
  return stop == TrajectoryStop::kConverged ? "converged" : "max_periods";
}

Trajectory IterateDynamics(double initial, const SystemParams& params,
                           TrajectoryOptions options) {
  RequireProbability(initial, "initial social reputation");
  Trajectory traj;
  traj.options = options;
  DynamicsState state{initial, 0};
  for (;;) {
    const ReputationFlows flows = ComputeFlows(state.social_reputation, params);
    traj.records.push_back({state.period, state.social_reputation, flows});
    const double change = flows.inflow - flows.outflow;
    if (std::abs(change) < options.tolerance) {
      traj.stop = TrajectoryStop::kConverged;
      break;
    }
    if (state.period >= options.max_periods) {
      traj.stop = TrajectoryStop::kMaxPeriods;
      break;
    }
    state = {std::clamp(state.social_reputation + change, 0.0, 1.0),
             state.period + 1};
  }
  return traj;
}

double UnlimitedObservationsLimit(double initial, const SystemParams& params) {
  RequireProbability(initial, "initial social reputation");
  const Thresholds t = ComputeThresholds(params);
  if (initial >= t.bad) return 1.0;
  if (initial <= t.good) return 0.0;
  return initial;
}

}  // namespace socnorm
