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

// Beta-binomial belief model. A user who observes M labels, m of them
// good, holds a Beta(m + 1, M - m + 1) belief about the good fraction;
// with m ~ Binomial(M, rho_s) the population of beliefs has density
//
//   f(rho | rho_s) = sum_m C(M, m) rho_s^m (1 - rho_s)^(M - m)
//                    * (M + 1) C(M, m) rho^m (1 - rho)^(M - m).
//
// For M <= kExactObservationLimit all binomial coefficients are exact
// integers; larger M (up to kMaxObservations) is evaluated in log space.

#ifndef SOCNORM_BELIEF_HPP_
#define SOCNORM_BELIEF_HPP_

#include <cstdint>
#include <vector>

#include "socnorm/params.hpp"
#include "socnorm/rng.hpp"

namespace socnorm {

struct BeliefDistribution {
  double social_reputation = 0.5;  // rho_s
  int observations = 0;            // M
};

enum class TailDirection { kAtLeast, kAtMost };

struct TailQuery {
  double cutoff = 0.0;
  TailDirection direction = TailDirection::kAtLeast;
};

// C(n, k) as an exact integer; n <= kExactObservationLimit + 1.
std::uint64_t BinomialCoefficient(int n, int k);

// C(n, k) as a double for any n <= kMaxObservations + 2.
double BinomialCoefficientReal(int n, int k);

// Binomial(n, p) probability masses for k = 0..n.
std::vector<double> BinomialWeights(int n, double p);

double BeliefPdf(double rho, const BeliefDistribution& dist);

// Pr[Beta(m + 1, M - m + 1) >= x] = Pr[Binomial(M + 1, x) <= m].
double BetaTailInt(int m, int observations, double x);

// Mixture tail. The at-most direction is the complement of at-least at
// the same cutoff.
double BeliefTail(const TailQuery& query, const BeliefDistribution& dist);

// Draws beliefs by composition: m ~ Binomial(M, rho_s), then the
// (m + 1)-th smallest of M + 1 uniforms, which is Beta(m + 1, M - m + 1).
class BeliefSampler {
 public:
  BeliefSampler(BeliefDistribution dist, std::uint64_t seed);

  double Draw();

  // Belief of a user who saw `good` good labels among `observations`.
  static double DrawPosterior(int good, int observations, Rng& rng,
                              std::vector<double>& scratch);

 private:
  BeliefDistribution dist_;
  Rng rng_;
  std::vector<double> scratch_;
};

struct ConcentrationOptions {
  int cap = kMaxObservations;
};

// Belief mass on [rho_s - delta, rho_s + delta] clipped to [0, 1].
double BeliefMassNear(double social_reputation, double delta, int observations);

// Smallest M (doubling, then bisection) with mass >= 1 - epsilon on the
// delta-window around rho_s. Throws Error(kCapExceeded) if the cap is
// reached without meeting the target.
int ConcentrationObservations(double social_reputation, double delta,
                              double epsilon,
                              ConcentrationOptions options = {});

}  // namespace socnorm

#endif  // SOCNORM_BELIEF_HPP_
