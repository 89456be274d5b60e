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

#include "socnorm/params.hpp"

#include <cmath>
#include <sstream>

#include "socnorm/format.hpp"

namespace socnorm {

SystemParams SystemParams::FromRatio(double gamma, double beta, double alpha,
                                     int observations) {
  SystemParams p;
  p.gamma_ = gamma;
  p.beta_ = beta;
  p.alpha_ = alpha;
  p.observations_ = observations;
  p.benefit_ = gamma;
  p.cost_ = 1.0;
  p.Validate();
  return p;
}

SystemParams SystemParams::FromBenefitCost(double benefit, double cost,
                                           double beta, double alpha,
                                           int observations) {
  if (!(cost > 0.0) || !(benefit > cost) || !std::isfinite(benefit)) {
    throw Error(ErrorCode::kInvalidArgument,
                "benefit and cost must satisfy b > c > 0");
  }
  SystemParams p = FromRatio(benefit / cost, beta, alpha, observations);
  p.benefit_ = benefit;
  p.cost_ = cost;
  p.raw_benefit_cost_ = true;
  return p;
}

SystemParams SystemParams::WithAlpha(double alpha) const {
  SystemParams p = *this;
  p.alpha_ = alpha;
  p.Validate();
  return p;
}

SystemParams SystemParams::WithObservations(int observations) const {
  SystemParams p = *this;
  p.observations_ = observations;
  p.Validate();
  return p;
}

void SystemParams::Validate() const {
  if (!(gamma_ > 1.0) || !std::isfinite(gamma_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "gamma must be a finite value > 1, got " + FormatDouble(gamma_));
  }
  if (!(beta_ > 0.0 && beta_ < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "beta must lie in (0, 1), got " + FormatDouble(beta_));
  }
  if (!(alpha_ >= 0.0 && alpha_ <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must lie in [0, 1], got " + FormatDouble(alpha_));
  }
  if (observations_ < 0 || observations_ > kMaxObservations) {
    throw Error(ErrorCode::kInvalidArgument,
                "M must lie in [0, " + std::to_string(kMaxObservations) +
                    "], got " + std::to_string(observations_));
  }
}

std::string SystemParams::Describe() const {
  std::ostringstream os;
  os << "gamma=" << FormatDouble(gamma_) << " beta=" << FormatDouble(beta_)
     << " alpha=" << FormatDouble(alpha_) << " M=" << observations_;
  if (raw_benefit_cost_) {
    os << " b=" << FormatDouble(benefit_) << " c=" << FormatDouble(cost_);
  }
  return os.str();
}

void RequireProbability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must lie in [0, 1], got " +
                    FormatDouble(value));
  }
}

}  // namespace socnorm
