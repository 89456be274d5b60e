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

#include "socnorm/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "socnorm/dynamics.hpp"

namespace socnorm {
namespace {

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

double Bisect(const BernsteinPolynomial& f, double lo, double hi, double tol) {
  int sign_lo = Sign(f(lo));
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const int s = Sign(f(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Stability Classify(const DeltaPolynomial& poly, double root, double dtol) {
  const double d1 = poly.derivative(root);
  if (d1 < -dtol) return Stability::kStable;
  if (d1 > dtol) return Stability::kUnstable;
  BernsteinPolynomial higher = poly.derivative;
  for (int order = 2; order <= poly.degree(); ++order) {
    higher = higher.Derivative();
    const double d = higher(root);
    if (std::abs(d) <= dtol) continue;
    if (root == 0.0) return d < 0.0 ? Stability::kStable : Stability::kUnstable;
    if (order % 2 == 0) return Stability::kMarginal;
    return d < 0.0 ? Stability::kStable : Stability::kUnstable;
  }
  return Stability::kMarginal;
}

std::optional<Bounds> ChordTangentBounds(double alpha, double rho_g, double rho_b) {
  if (!(rho_b <= 1.0) || !(rho_g <= 1.0)) return std::nullopt;
  const double g0 = alpha * (1.0 - rho_b) * (1.0 - rho_b);
  Bounds b;
  b.upper = g0 / (g0 + rho_g * rho_g);
  b.lower = g0 / (alpha * (1.0 - rho_b) * (1.0 - 3.0 * rho_b) +
                  rho_g * (2.0 - rho_g));
  return b;
}

}  // namespace

std::string_view ToString(Stability s) {
  switch (s) {
    case Stability::kStable:
      return "stable";
    case Stability::kUnstable:
      return "unstable";
    case Stability::kMarginal:
      break;
  }
  return "marginal";
}

std::vector<double> EquilibriumReport::StableRoots() const {
  std::vector<double> out;
  for (const auto& r : roots) {
    if (r.stable()) out.push_back(r.social_reputation);
  }
  return out;
}

double EquilibriumReport::MaxStableRoot() const {
  double best = 0.0;
  for (const auto& r : roots) {
    if (r.stable()) best = std::max(best, r.social_reputation);
  }
  return best;
}

EquilibriumReport FindEquilibria(const SystemParams& params,
                                 SolverOptions options) {
  if (options.grid_n < 64) {
    throw Error(ErrorCode::kInvalidArgument, "grid_n must be at least 64");
  }
  if (!(options.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  }
  const DeltaPolynomial poly = BuildDeltaPolynomial(params);
  const BernsteinPolynomial& g = poly.reduced;

  std::vector<double> found{0.0};
  const int n = options.grid_n;
  double x_prev = 0.0;
  double g_prev = g(0.0);
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    const double gx = g(x);
    if (gx == 0.0) {
      found.push_back(x);
    } else if (g_prev != 0.0 && Sign(gx) != Sign(g_prev)) {
      found.push_back(Bisect(g, x_prev, x, options.tol));
    }
    x_prev = x;
    g_prev = gx;
  }
  std::sort(found.begin(), found.end());

  EquilibriumReport report{params, poly.thresholds, {}, {}, 1.0, {}, options};
  for (double r : found) {
    if (!report.roots.empty() &&
        r - report.roots.back().social_reputation < 10.0 * options.tol) {
      continue;
    }
    report.roots.push_back(
        {r, Classify(poly, r, options.derivative_tol), poly.derivative(r)});
  }
  report.general_bounds = GeneralBounds(params);
  report.large_gamma_bound = LargeGammaBound(params);
  if (params.observations() == 0) {
    report.closed_form = ClosedFormM0(params);
  } else if (params.observations() == 1) {
    report.closed_form = ClosedFormM1(params).MaxStableRoot();
  }
  return report;
}

std::optional<Bounds> GeneralBounds(const SystemParams& params) {
  const Thresholds t = ComputeThresholds(params);
  if (!(t.good <= 1.0 && t.bad <= 1.0)) return std::nullopt;
  const double alpha = params.alpha();
  const int k = params.observations() + 1;
  const double low_in = alpha * std::pow(1.0 - t.bad, k);
  const double low_out = 1.0 - std::pow(1.0 - t.good, k);
  const double up_in = alpha * (1.0 - std::pow(t.bad, k));
  const double up_out = std::pow(t.good, k);
  Bounds b;
  b.lower = low_in > 0.0 ? low_in / (low_in + low_out) : 0.0;
  b.upper = up_in > 0.0 ? up_in / (up_in + up_out) : 0.0;
  return b;
}

double LargeGammaBound(const SystemParams& params) {
  const double x =
      (1.0 - params.beta()) / (params.beta() * (params.gamma() - 1.0));
  return 1.0 - std::pow(x, params.observations() + 1);
}

std::optional<double> ClosedFormM0(const SystemParams& params) {
  if (params.observations() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "closed form requires M = 0");
  }
  const Thresholds t = ComputeThresholds(params);
  if (t.bad > 1.0) return std::nullopt;
  const double in = params.alpha() * (1.0 - t.bad);
  return in / (in + t.good);
}

std::optional<double> ClosedFormM1Result::MaxStableRoot() const {
  std::optional<double> best;
  for (const auto& r : roots) {
    if (r.stable()) best = std::max(best.value_or(0.0), r.social_reputation);
  }
  return best;
}

ClosedFormM1Result ClosedFormM1(const SystemParams& params) {
  if (params.observations() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "closed form requires M = 1");
  }
  const Thresholds t = ComputeThresholds(params);
  const double alpha = params.alpha();
  const double rho_g = std::min(t.good, 1.0);
  // Inflow tail T(x) = t0 + t1 x, outflow head H(x) = h0 - h1 x.
  double t0 = 0.0;
  double t1 = 0.0;
  if (t.bad <= 1.0) {
    t0 = (1.0 - t.bad) * (1.0 - t.bad);
    t1 = 2.0 * t.bad * (1.0 - t.bad);
  }
  const double h0 = rho_g * (2.0 - rho_g);
  const double h1 = 2.0 * rho_g * (1.0 - rho_g);

  ClosedFormM1Result out;
  out.constant = alpha * t0;
  out.linear = alpha * (t1 - t0) - h0;
  out.quadratic = h1 - alpha * t1;

  std::vector<double> candidates;
  const double a = out.quadratic;
  const double b = out.linear;
  const double c = out.constant;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a) <= 1e-15 * scale) {
    if (b != 0.0) candidates.push_back(-c / b);
  } else {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (q != 0.0) {
        candidates.push_back(q / a);
        candidates.push_back(c / q);
      } else {
        candidates.push_back(0.0);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (double r : candidates) {
    if (!(r > 0.0 && r < 1.0)) continue;
    // Delta'(r) = g(r) + r g'(r) = r g'(r) at a root of g.
    const double slope = 2.0 * a * r + b;
    const double derivative = r * slope;
    Stability s = Stability::kMarginal;
    if (derivative < 0.0) s = Stability::kStable;
    if (derivative > 0.0) s = Stability::kUnstable;
    out.roots.push_back({r, s, derivative});
  }

  out.exact_threshold_bounds = ChordTangentBounds(alpha, t.good, t.bad);
  if (alpha > 0.0) {
    const double beta = params.beta();
    const double gamma = params.gamma();
    const double approx_g = (1.0 - beta) / (beta * gamma);
    const double approx_b = approx_g / alpha;
    out.approximate_threshold_bounds = ChordTangentBounds(alpha, approx_g, approx_b);
  }
  return out;
}

}  // namespace socnorm
