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

#include "socnorm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "socnorm/belief.hpp"
#include "socnorm/dynamics.hpp"
#include "socnorm/equilibrium.hpp"
#include "socnorm/norm.hpp"
#include "socnorm/rng.hpp"

namespace socnorm {
namespace {

void Validate(const SimConfig& c) {
  if (c.agents < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 agents");
  if (c.periods < 1) throw Error(ErrorCode::kInvalidArgument, "need at least 1 period");
  if (c.warmup < 0 || c.window < 1) {
    throw Error(ErrorCode::kInvalidArgument, "warmup must be >= 0 and window >= 1");
  }
  RequireProbability(c.initial_good, "initial good fraction");
}

template <typename T>
void Shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size() - 1; i > 0; --i) {
    std::swap(v[i], v[rng.Below(i + 1)]);
  }
}

// Uniform permutation without fixed points, by rejection.
void DrawDerangement(std::vector<int>& perm, Rng& rng) {
  for (;;) {
    std::iota(perm.begin(), perm.end(), 0);
    Shuffle(perm, rng);
    bool ok = true;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] == static_cast<int>(i)) {
        ok = false;
        break;
      }
    }
    if (ok) return;
  }
}

double ZScore(int count, double rate, int n) {
  const double var = n * rate * (1.0 - rate);
  const double diff = count - n * rate;
  if (var <= 0.0) return diff == 0.0 ? 0.0 : std::copysign(kInfinity, diff);
  return diff / std::sqrt(var);
}

}  // namespace

double SimTrace::FinalGoodFraction() const {
  return GoodFraction(records.back().good_end());
}

double SimTrace::WindowAverage() const {
  const int total = static_cast<int>(records.size());
  const int begin = std::max(config.warmup, total - config.window);
  if (begin >= total) return FinalGoodFraction();
  double sum = 0.0;
  for (int t = begin; t < total; ++t) sum += GoodFraction(records[t].good_end());
  return sum / (total - begin);
}

SimTrace RunSimulation(const SimConfig& config) {
  Validate(config);
  const SystemParams& params = config.params;
  const int n = config.agents;
  const int observations = params.observations();
  const Thresholds thresholds = ComputeThresholds(params);
  const double welfare_per_service = params.benefit() - params.cost();
  Rng rng(config.seed);

  std::vector<Label> labels(static_cast<std::size_t>(n), Label::kBad);
  const auto initial_good =
      static_cast<int>(std::llround(config.initial_good * n));
  std::fill_n(labels.begin(), initial_good, Label::kGood);
  Shuffle(labels, rng);

  SimTrace trace;
  trace.config = config;
  trace.records.reserve(static_cast<std::size_t>(config.periods));
  std::vector<int> requester_of(static_cast<std::size_t>(n));
  std::vector<Label> next(labels.size());
  std::vector<double> scratch;
  int good = initial_good;

  for (int period = 0; period < config.periods; ++period) {
    PeriodRecord rec;
    rec.period = period;
    rec.good_start = good;
    DrawDerangement(requester_of, rng);
    for (int provider = 0; provider < n; ++provider) {
      const Label own = labels[provider];
      const Label requester = labels[requester_of[provider]];
      Action action = Action::kDefect;
      if (requester == Label::kGood) {
        // Observations with replacement among the other agents, using
        // start-of-period labels. Beliefs only matter for good requesters.
        int seen_good = 0;
        for (int k = 0; k < observations; ++k) {
          auto other = static_cast<int>(rng.Below(static_cast<std::uint64_t>(n - 1)));
          if (other >= provider) ++other;
          if (labels[other] == Label::kGood) ++seen_good;
        }
        const double belief =
            BeliefSampler::DrawPosterior(seen_good, observations, rng, scratch);
        action = BestResponse(own, requester, belief, thresholds);
      }
      if (action == Action::kServe) ++rec.services;
      const double p_good = ReputationTransition(own, requester, action, params);
      Label after = Label::kBad;
      if (p_good >= 1.0) {
        after = Label::kGood;
      } else if (p_good > 0.0 && rng.Bernoulli(p_good)) {
        after = Label::kGood;
      }
      if (own == Label::kBad && after == Label::kGood) ++rec.inflow;
      if (own == Label::kGood && after == Label::kBad) ++rec.outflow;
      next[provider] = after;
    }
    labels.swap(next);
    good = rec.good_end();
    rec.welfare = welfare_per_service * rec.services;
    trace.records.push_back(rec);
  }
  return trace;
}

MeanFieldComparison CompareToMeanField(const SimTrace& trace,
                                       const SystemParams& params) {
  MeanFieldComparison out;
  out.window_average = trace.WindowAverage();
  const EquilibriumReport rep = FindEquilibria(params);
  double best = kInfinity;
  for (double r : rep.StableRoots()) {
    if (std::abs(r - out.window_average) < best) {
      best = std::abs(r - out.window_average);
      out.nearest_stable_root = r;
    }
  }
  out.gap = best;

  const int n = trace.config.agents;
  double in_gap = 0.0;
  double out_gap = 0.0;
  for (std::size_t t = 0; t < trace.records.size(); ++t) {
    const PeriodRecord& r = trace.records[t];
    const ReputationFlows f = ComputeFlows(trace.GoodFraction(r.good_start), params);
    in_gap += std::abs(static_cast<double>(r.inflow) / n - f.inflow);
    out_gap += std::abs(static_cast<double>(r.outflow) / n - f.outflow);
    const double zi = ZScore(r.inflow, f.inflow, n);
    const double zo = ZScore(r.outflow, f.outflow, n);
    out.max_abs_inflow_z = std::max(out.max_abs_inflow_z, std::abs(zi));
    out.max_abs_outflow_z = std::max(out.max_abs_outflow_z, std::abs(zo));
    if (t == 0) {
      out.first_inflow_z = zi;
      out.first_outflow_z = zo;
    }
  }
  const auto periods = static_cast<double>(trace.records.size());
  out.mean_abs_inflow_rate_gap = in_gap / periods;
  out.mean_abs_outflow_rate_gap = out_gap / periods;
  return out;
}

}  // namespace socnorm
