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

#include "socnorm/norm.hpp"

#include <Eigen/Dense>

namespace socnorm {

Action SocialStrategy(Label requester) {
  return requester == Label::kGood ? Action::kServe : Action::kDefect;
}

double ReputationTransition(Label provider, Label requester, Action action,
                            const SystemParams& params) {
  if (requester == Label::kBad) return provider == Label::kGood ? 1.0 : 0.0;
  if (action != SocialStrategy(requester)) return 0.0;
  return provider == Label::kGood ? 1.0 : params.alpha();
}

Thresholds ComputeThresholds(const SystemParams& params) {
  const double beta = params.beta();
  const double gamma = params.gamma();
  const double alpha = params.alpha();
  const double num = 1.0 - beta;
  const double den_good = beta * (gamma - alpha);
  const double den_bad = beta * alpha * (gamma - 1.0);
  Thresholds t;
  t.good = den_good > 0.0 ? num / den_good : kInfinity;
  t.bad = den_bad > 0.0 ? num / den_bad : kInfinity;
  return t;
}

double UtilityLoss(double rho, const SystemParams& params) {
  RequireProbability(rho, "belief");
  return rho * params.gamma() /
         (1.0 - params.beta() * (1.0 - rho * params.alpha()));
}

Action BestResponse(Label provider, Label requester, double rho,
                    const SystemParams& params) {
  RequireProbability(rho, "belief");
  return BestResponse(provider, requester, rho, ComputeThresholds(params));
}

Action BestResponse(Label provider, Label requester, double rho,
                    const Thresholds& thresholds) {
  if (requester == Label::kBad) return Action::kDefect;
  const double cutoff =
      provider == Label::kGood ? thresholds.good : thresholds.bad;
  return rho >= cutoff ? Action::kServe : Action::kDefect;
}

bool CooperationFeasible(const SystemParams& params) {
  return !(ComputeThresholds(params).good > 1.0);
}

namespace {

int StateIndex(int provider, int requester) { return 2 * provider + requester; }

}  // namespace

ValueTable LongRunValue(double rho, const SystemParams& params) {
  RequireProbability(rho, "belief");
  const double benefit = params.gamma();
  const double cost = 1.0;
  const double beta = params.beta();

  // V = pi + beta * P * V, with P the transition matrix over
  // (provider label, next requester label) under the social strategy.
  Eigen::Matrix4d system = Eigen::Matrix4d::Identity();
  Eigen::Vector4d stage;
  for (int th = 0; th < 2; ++th) {
    for (int req = 0; req < 2; ++req) {
      const int row = StateIndex(th, req);
      const Action act = SocialStrategy(static_cast<Label>(req));
      // Served as a requester only when holding a good label and matched
      // with a good provider.
      stage(row) = th * rho * benefit - (act == Action::kServe ? cost : 0.0);
      const double p_good = ReputationTransition(
          static_cast<Label>(th), static_cast<Label>(req), act, params);
      for (int next = 0; next < 2; ++next) {
        const double p_label = next == 1 ? p_good : 1.0 - p_good;
        system(row, StateIndex(next, 1)) -= beta * p_label * rho;
        system(row, StateIndex(next, 0)) -= beta * p_label * (1.0 - rho);
      }
    }
  }
  const Eigen::Vector4d v = system.fullPivLu().solve(stage);

  ValueTable table;
  table.rho = rho;
  for (int th = 0; th < 2; ++th) {
    for (int req = 0; req < 2; ++req) table.values[th][req] = v(StateIndex(th, req));
  }
  // Deviation against a good requester: keep the stage benefit, skip the
  // cost, and drop to a bad label; compliance resumes afterwards.
  const auto continuation = [&](int label) {
    return rho * v(StateIndex(label, 1)) + (1.0 - rho) * v(StateIndex(label, 0));
  };
  for (int th = 0; th < 2; ++th) {
    const double deviate = th * rho * benefit + beta * continuation(0);
    table.follow_gain[th] = v(StateIndex(th, 1)) - deviate;
  }
  return table;
}

}  // namespace socnorm
