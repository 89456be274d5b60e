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

// Gift-giving game, the prescribed social strategy, the randomized
// reputation update and the provider's incentive analysis.

#ifndef SOCNORM_NORM_HPP_
#define SOCNORM_NORM_HPP_

#include <array>

#include "socnorm/params.hpp"

namespace socnorm {

// Belief cutoffs above which a provider complies with the social
// strategy when facing a good requester. A cutoff with a nonpositive
// denominator is +inf.
struct Thresholds {
  double good = 0.0;  // rho_G
  double bad = 0.0;   // rho_B
};

// Serve good requesters, refuse bad ones.
Action SocialStrategy(Label requester);

// Probability that the provider holds a good label next period.
double ReputationTransition(Label provider, Label requester, Action action,
                            const SystemParams& params);

Thresholds ComputeThresholds(const SystemParams& params);

// Per-period loss, in units of the cost, of holding a bad rather than a
// good label for a user with belief `rho`:
//   X = rho * gamma / (1 - beta * (1 - rho * alpha)).
double UtilityLoss(double rho, const SystemParams& params);

// Comparisons are non-strict: a provider whose belief equals its
// threshold complies.
Action BestResponse(Label provider, Label requester, double rho,
                    const SystemParams& params);
Action BestResponse(Label provider, Label requester, double rho,
                    const Thresholds& thresholds);

// False iff rho_G > 1, in which case no belief sustains cooperation.
bool CooperationFeasible(const SystemParams& params);

// Long-run values V(theta, theta') at the decision point of a provider
// with label theta facing a requester with label theta', for a user who
// believes a fraction `rho` of the population is good and that good
// users follow the social strategy while bad users defect. Obtained by
// solving the 4x4 linear Bellman system directly, so it is independent
// of the closed-form thresholds.
struct ValueTable {
  double rho = 0.0;
  // values[provider][requester]
  std::array<std::array<double, 2>, 2> values{};
  // V(follow) - V(one-shot deviation) against a good requester, indexed
  // by the provider's label. Zero exactly at the matching threshold.
  std::array<double, 2> follow_gain{};

  double value(Label provider, Label requester) const {
    return values[ToInt(provider)][ToInt(requester)];
  }
};

ValueTable LongRunValue(double rho, const SystemParams& params);

}  // namespace socnorm

#endif  // SOCNORM_NORM_HPP_
