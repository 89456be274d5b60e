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

#include "socnorm/belief.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace socnorm {
namespace {

constexpr int kPascalRows = kExactObservationLimit + 2;

const std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows>&
PascalTable() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows> t{};
    for (int n = 0; n < kPascalRows; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

void RequireObservations(int observations) {
  if (observations < 0 || observations > kMaxObservations) {
    throw Error(ErrorCode::kOutOfRange,
                "observation count " + std::to_string(observations) +
                    " outside supported range [0, " +
                    std::to_string(kMaxObservations) + "]");
  }
}

bool UseExact(int n) { return n <= kExactObservationLimit + 1; }

double LogBinomialCoefficient(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// p^k for k = 0..n by repeated multiplication.
std::vector<double> Powers(double p, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * p;
  return out;
}

}  // namespace

std::uint64_t BinomialCoefficient(int n, int k) {
  if (n < 0 || n >= kPascalRows) {
    throw Error(ErrorCode::kOutOfRange,
                "exact binomial coefficient requested for n=" +
                    std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  return PascalTable()[n][k];
}

double BinomialCoefficientReal(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (UseExact(n)) return static_cast<double>(BinomialCoefficient(n, k));
  return std::exp(LogBinomialCoefficient(n, k));
}

std::vector<double> BinomialWeights(int n, double p) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  if (p <= 0.0) {
    w[0] = 1.0;
    return w;
  }
  if (p >= 1.0) {
    w[n] = 1.0;
    return w;
  }
  if (UseExact(n)) {
    const auto pk = Powers(p, n);
    const auto qk = Powers(1.0 - p, n);
    for (int k = 0; k <= n; ++k) {
      w[k] = static_cast<double>(BinomialCoefficient(n, k)) * pk[k] * qk[n - k];
    }
    return w;
  }
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  for (int k = 0; k <= n; ++k) {
    w[k] = std::exp(LogBinomialCoefficient(n, k) + k * lp + (n - k) * lq);
  }
  return w;
}

double BeliefPdf(double rho, const BeliefDistribution& dist) {
  RequireProbability(rho, "belief");
  RequireProbability(dist.social_reputation, "social reputation");
  const int m_total = dist.observations;
  RequireObservations(m_total);
  if (m_total == 0) return 1.0;

  const auto weights = BinomialWeights(m_total, dist.social_reputation);
  // Each mixture component is (M + 1) * Binomial(M, rho) pmf at m.
  const auto component = BinomialWeights(m_total, rho);
  double sum = 0.0;
  for (int m = 0; m <= m_total; ++m) sum += weights[m] * component[m];
  return (m_total + 1) * sum;
}

double BetaTailInt(int m, int observations, double x) {
  RequireObservations(observations);
  if (m < 0 || m > observations) {
    throw Error(ErrorCode::kInvalidArgument,
                "success count must lie in [0, M]");
  }
  if (std::isnan(x)) throw Error(ErrorCode::kInvalidArgument, "cutoff is NaN");
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  const int n = observations + 1;
  if (UseExact(n)) {
    const auto xk = Powers(x, n);
    const auto yk = Powers(1.0 - x, n);
    double sum = 0.0;
    for (int j = 0; j <= m; ++j) {
      sum += static_cast<double>(BinomialCoefficient(n, j)) * xk[j] * yk[n - j];
    }
    return sum;
  }
  const auto w = BinomialWeights(n, x);
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) sum += w[j];
  return std::min(sum, 1.0);
}

double BeliefTail(const TailQuery& query, const BeliefDistribution& dist) {
  RequireProbability(query.cutoff, "cutoff");
  RequireProbability(dist.social_reputation, "social reputation");
  RequireObservations(dist.observations);
  const int m_total = dist.observations;
  const double x = query.cutoff;

  double at_least = 0.0;
  if (x <= 0.0) {
    at_least = 1.0;
  } else if (x < 1.0) {
    // Pr[Beta(m+1, M-m+1) >= x] is the CDF of Binomial(M + 1, x) at m.
    const auto weights = BinomialWeights(m_total, dist.social_reputation);
    const auto pmf = BinomialWeights(m_total + 1, x);
    double cdf = 0.0;
    for (int m = 0; m <= m_total; ++m) {
      cdf += pmf[m];
      at_least += weights[m] * cdf;
    }
    at_least = std::clamp(at_least, 0.0, 1.0);
  }
  return query.direction == TailDirection::kAtLeast ? at_least : 1.0 - at_least;
}

BeliefSampler::BeliefSampler(BeliefDistribution dist, std::uint64_t seed)
    : dist_(dist), rng_(seed) {
  RequireProbability(dist.social_reputation, "social reputation");
  RequireObservations(dist.observations);
}

double BeliefSampler::Draw() {
  int good = 0;
  for (int i = 0; i < dist_.observations; ++i) {
    if (rng_.Bernoulli(dist_.social_reputation)) ++good;
  }
  return DrawPosterior(good, dist_.observations, rng_, scratch_);
}

double BeliefSampler::DrawPosterior(int good, int observations, Rng& rng,
                                    std::vector<double>& scratch) {
  if (observations == 0) return rng.Uniform();
  scratch.resize(static_cast<std::size_t>(observations) + 1);
  for (double& u : scratch) u = rng.Uniform();
  auto nth = scratch.begin() + good;
  std::nth_element(scratch.begin(), nth, scratch.end());
  return *nth;
}

double BeliefMassNear(double social_reputation, double delta, int observations) {
  RequireProbability(social_reputation, "social reputation");
  const double lo = std::max(0.0, social_reputation - delta);
  const double hi = std::min(1.0, social_reputation + delta);
  const BeliefDistribution dist{social_reputation, observations};
  const double above_lo = BeliefTail({lo, TailDirection::kAtLeast}, dist);
  const double above_hi = BeliefTail({hi, TailDirection::kAtLeast}, dist);
  return std::max(0.0, above_lo - above_hi);
}

int ConcentrationObservations(double social_reputation, double delta,
                              double epsilon, ConcentrationOptions options) {
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1)");
  }
  const int cap = std::clamp(options.cap, 0, kMaxObservations);
  const auto passes = [&](int m) {
    return BeliefMassNear(social_reputation, delta, m) >= 1.0 - epsilon;
  };
  if (passes(0)) return 0;

  int fail = 0;
  int pass = -1;
  for (int m = 1;; m *= 2) {
    const int probe = std::min(m, cap);
    if (passes(probe)) {
      pass = probe;
      break;
    }
    fail = probe;
    if (probe == cap) break;
  }
  if (pass < 0) {
    throw Error(ErrorCode::kCapExceeded,
                "no M <= " + std::to_string(cap) +
                    " concentrates the belief mass as requested");
  }
  while (pass - fail > 1) {
    const int mid = fail + (pass - fail) / 2;
    (passes(mid) ? pass : fail) = mid;
  }
  return pass;
}

}  // namespace socnorm
