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

#include "socnorm/design.hpp"

#include <algorithm>
#include <cmath>

namespace socnorm {
namespace {

constexpr double kGoldenRatio = 0.6180339887498949;

double MaxStableAt(const SystemParams& base, double alpha,
                   const SolverOptions& solver) {
  return FindEquilibria(base.WithAlpha(alpha), solver).MaxStableRoot();
}

struct Candidate {
  double alpha;
  double rho;
};

// Golden-section search for a maximum on [lo, hi]; returns the best
// point evaluated, seeded with `incumbent`.
Candidate GoldenSection(const SystemParams& base, double lo, double hi,
                        Candidate incumbent, const DesignOptions& options) {
  Candidate best = incumbent;
  auto eval = [&](double a) {
    const double r = MaxStableAt(base, a, options.solver);
    if (r > best.rho) best = {a, r};
    return r;
  };
  double x1 = hi - kGoldenRatio * (hi - lo);
  double x2 = lo + kGoldenRatio * (hi - lo);
  double f1 = eval(x1);
  double f2 = eval(x2);
  while (hi - lo > options.refine_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGoldenRatio * (hi - lo);
      f2 = eval(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGoldenRatio * (hi - lo);
      f1 = eval(x1);
    }
  }
  return best;
}

void RequireEnvironment(double beta, double gamma) {
  // Reuses the parameter validation for a clear message.
  (void)SystemParams::FromRatio(gamma, beta, 1.0, 0);
}

}  // namespace

std::string_view ToString(DesignMethod m) {
  switch (m) {
    case DesignMethod::kClosedFormM0:
      return "closed-form-m0";
    case DesignMethod::kClosedFormM1:
      return "closed-form-m1";
    case DesignMethod::kGridSearch:
      break;
  }
  return "grid-search";
}

double MinimumFeasibleAlpha(double beta, double gamma) {
  return (1.0 - beta) / (beta * (gamma - 1.0));
}

DesignResult OptimalAlphaM0(double beta, double gamma) {
  RequireEnvironment(beta, gamma);
  DesignResult out;
  out.beta = beta;
  out.gamma = gamma;
  out.observations = 0;
  out.method = DesignMethod::kClosedFormM0;
  const double x = MinimumFeasibleAlpha(beta, gamma);
  if (x > 1.0) return out;
  out.feasible = true;
  out.feasible_alpha_range = AlphaInterval{x, 1.0};
  const double interior = (gamma * beta * (gamma - 1.0) + 1.0 - beta) /
                          (2.0 * beta * (gamma - 1.0));
  if (interior < 1.0) {
    const double lead = 0.25 * (gamma - x) * (gamma - x);
    out.alpha_star = interior;
    out.rho_star = lead / (lead + (1.0 - beta) / beta);
  } else {
    out.alpha_star = 1.0;
    out.rho_star = 1.0 - x;
  }
  return out;
}

DesignResult OptimalAlphaM1(double beta, double gamma) {
  RequireEnvironment(beta, gamma);
  DesignResult out;
  out.beta = beta;
  out.gamma = gamma;
  out.observations = 1;
  out.method = DesignMethod::kClosedFormM1;
  const double lo = MinimumFeasibleAlpha(beta, gamma);
  if (lo > 1.0) return out;
  out.feasible = true;
  out.feasible_alpha_range = AlphaInterval{lo, 1.0};
  const double x = (1.0 - beta) / (beta * gamma);
  const double keep = (1.0 - x) * (1.0 - x);
  out.alpha_star = 1.0;
  out.rho_star = keep / (keep + x * x);
  return out;
}

DesignResult OptimizeAlpha(double beta, double gamma, int observations,
                           DesignOptions options) {
  if (options.grid_n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "design grid needs >= 2 points");
  }
  const SystemParams base = SystemParams::FromRatio(gamma, beta, 1.0, observations);
  DesignResult out;
  out.beta = beta;
  out.gamma = gamma;
  out.observations = observations;
  out.method = DesignMethod::kGridSearch;
  out.grid_n = options.grid_n;
  const double lo = MinimumFeasibleAlpha(beta, gamma);
  if (lo > 1.0) return out;
  out.feasible = true;
  out.feasible_alpha_range = AlphaInterval{lo, 1.0};

  const int n = options.grid_n;
  std::vector<double> alphas(static_cast<std::size_t>(n));
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    alphas[i] = i + 1 == n ? 1.0 : lo + (1.0 - lo) * i / (n - 1);
    const EquilibriumReport rep =
        FindEquilibria(base.WithAlpha(alphas[i]), options.solver);
    values[i] = rep.MaxStableRoot();
    if (options.keep_profile) out.profile.push_back({alphas[i], rep.StableRoots()});
  }
  const auto best_it = std::max_element(values.begin(), values.end());
  const auto best_i = static_cast<int>(best_it - values.begin());
  Candidate best{alphas[best_i], values[best_i]};
  if (n > 2) {
    const double bracket_lo = alphas[std::max(best_i - 1, 0)];
    const double bracket_hi = alphas[std::min(best_i + 1, n - 1)];
    best = GoldenSection(base, bracket_lo, bracket_hi, best, options);
  }
  out.alpha_star = best.alpha;
  out.rho_star = best.rho;

  std::optional<Candidate> closed;
  DesignMethod closed_method = DesignMethod::kGridSearch;
  if (observations == 0) {
    const DesignResult cf = OptimalAlphaM0(beta, gamma);
    closed = Candidate{*cf.alpha_star, cf.rho_star};
    closed_method = DesignMethod::kClosedFormM0;
  } else if (observations == 1) {
    // Mildest punishment, evaluated with the exact quadratic root.
    const auto root = ClosedFormM1(base).MaxStableRoot();
    closed = Candidate{1.0, root.value_or(0.0)};
    closed_method = DesignMethod::kClosedFormM1;
  }
  if (closed) {
    out.cross_check_gap = std::abs(closed->rho - best.rho);
    if (closed->rho >= best.rho - 1e-9) {
      out.alpha_star = closed->alpha;
      out.rho_star = closed->rho;
      out.method = closed_method;
    }
  }
  return out;
}

SweepTable Sweep(const SweepAxes& axes, DesignOptions options) {
  if (axes.betas.empty() || axes.gammas.empty() || axes.observations.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sweep needs at least one beta, gamma and M");
  }
  for (double b : axes.betas) {
    for (double g : axes.gammas) RequireEnvironment(b, g);
  }
  for (double a : axes.alphas) RequireProbability(a, "alpha");

  SweepTable table;
  table.axes = axes;
  table.alpha_optimized = axes.alphas.empty();
  table.grid_n = options.grid_n;
  for (double beta : axes.betas) {
    for (double gamma : axes.gammas) {
      for (int m : axes.observations) {
        if (table.alpha_optimized) {
          const DesignResult d = OptimizeAlpha(beta, gamma, m, options);
          SweepCell cell{beta, gamma, m, d.alpha_star, d.rho_star, d.feasible, {}};
          if (d.alpha_star) {
            const auto p = SystemParams::FromRatio(gamma, beta, *d.alpha_star, m);
            cell.stable_roots = FindEquilibria(p, options.solver).StableRoots();
          }
          table.cells.push_back(std::move(cell));
          continue;
        }
        for (double alpha : axes.alphas) {
          const auto p = SystemParams::FromRatio(gamma, beta, alpha, m);
          const EquilibriumReport rep = FindEquilibria(p, options.solver);
          const bool feasible = rep.thresholds.bad <= 1.0;
          table.cells.push_back({beta, gamma, m, alpha,
                                 feasible ? rep.MaxStableRoot() : 0.0, feasible,
                                 rep.StableRoots()});
        }
      }
    }
  }
  return table;
}

}  // namespace socnorm
