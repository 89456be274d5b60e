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

#include "socnorm/socnorm.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "socnorm/belief.hpp"
#include "socnorm/design.hpp"
#include "socnorm/dynamics.hpp"
#include "socnorm/equilibrium.hpp"
#include "socnorm/export.hpp"
#include "socnorm/figures.hpp"
#include "socnorm/norm.hpp"
#include "socnorm/simulator.hpp"

struct sn_params {
  socnorm::SystemParams value;
};

struct sn_artifact {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

sn_status Fail(sn_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

sn_status FromCode(socnorm::ErrorCode code) {
  using socnorm::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return SN_ERR_INVALID_ARGUMENT;
    case ErrorCode::kOutOfRange:
      return SN_ERR_OUT_OF_RANGE;
    case ErrorCode::kNotApplicable:
      return SN_ERR_NOT_APPLICABLE;
    case ErrorCode::kCapExceeded:
      return SN_ERR_CAP_EXCEEDED;
    case ErrorCode::kInfeasible:
      return SN_ERR_INFEASIBLE;
  }
  return SN_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
sn_status Guard(Body&& body) {
  try {
    return body();
  } catch (const socnorm::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SN_ERR_INTERNAL, e.what());
  }
}

template <typename... Ptrs>
bool AnyNull(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

sn_status NullError() { return Fail(SN_ERR_NULL_POINTER, "null pointer argument"); }

sn_status Emit(const socnorm::Json& json, const socnorm::CsvTable& csv,
               sn_format format, sn_artifact** out) {
  auto* a = new sn_artifact;
  a->text = format == SN_FORMAT_CSV ? csv.Render() : json.dump(2) + "\n";
  *out = a;
  return SN_OK;
}

socnorm::Label ToLabel(int v) {
  if (v != 0 && v != 1) {
    throw socnorm::Error(socnorm::ErrorCode::kInvalidArgument,
                         "labels must be 0 or 1");
  }
  return static_cast<socnorm::Label>(v);
}

socnorm::SolverOptions Solver(int grid, double tol) {
  socnorm::SolverOptions o;
  if (grid > 0) o.grid_n = grid;
  if (tol > 0.0) o.tol = tol;
  return o;
}

socnorm::SimConfig ToSimConfig(const socnorm::SystemParams& p,
                               const sn_sim_config& c) {
  socnorm::SimConfig cfg;
  cfg.params = p;
  cfg.agents = c.agents;
  cfg.periods = c.periods;
  cfg.initial_good = c.rho0;
  cfg.seed = c.seed;
  cfg.warmup = c.warmup;
  cfg.window = c.window;
  return cfg;
}

}  // namespace

extern "C" {

const char* sn_version(void) { return "1.0.0"; }

const char* sn_last_error(void) { return g_last_error.c_str(); }

const char* sn_status_string(sn_status status) {
  switch (status) {
    case SN_OK:
      return "ok";
    case SN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SN_ERR_OUT_OF_RANGE:
      return "out of supported range";
    case SN_ERR_NOT_APPLICABLE:
      return "not applicable";
    case SN_ERR_CAP_EXCEEDED:
      return "search cap exceeded";
    case SN_ERR_INFEASIBLE:
      return "infeasible";
    case SN_ERR_NULL_POINTER:
      return "null pointer";
    case SN_ERR_INTERNAL:
      break;
  }
  return "internal error";
}

sn_status sn_params_create(double gamma, double beta, double alpha,
                           int observations, sn_params** out) {
  if (AnyNull(out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    *out = new sn_params{
        socnorm::SystemParams::FromRatio(gamma, beta, alpha, observations)};
    return SN_OK;
  });
}

sn_status sn_params_create_bc(double benefit, double cost, double beta,
                              double alpha, int observations, sn_params** out) {
  if (AnyNull(out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    *out = new sn_params{socnorm::SystemParams::FromBenefitCost(
        benefit, cost, beta, alpha, observations)};
    return SN_OK;
  });
}

void sn_params_destroy(sn_params* params) { delete params; }

sn_status sn_params_get(const sn_params* params, double* gamma, double* beta,
                        double* alpha, int* observations) {
  if (AnyNull(params, gamma, beta, alpha, observations)) return NullError();
  *gamma = params->value.gamma();
  *beta = params->value.beta();
  *alpha = params->value.alpha();
  *observations = params->value.observations();
  return SN_OK;
}

sn_status sn_thresholds(const sn_params* params, double* rho_good,
                        double* rho_bad) {
  if (AnyNull(params, rho_good, rho_bad)) return NullError();
  const socnorm::Thresholds t = socnorm::ComputeThresholds(params->value);
  *rho_good = t.good;
  *rho_bad = t.bad;
  return SN_OK;
}

sn_status sn_utility_loss(const sn_params* params, double rho, double* out) {
  if (AnyNull(params, out)) return NullError();
  return Guard([&] {
    *out = socnorm::UtilityLoss(rho, params->value);
    return SN_OK;
  });
}

sn_status sn_best_response(const sn_params* params, int provider, int requester,
                           double rho, int* action) {
  if (AnyNull(params, action)) return NullError();
  return Guard([&] {
    *action = socnorm::ToInt(socnorm::BestResponse(
        ToLabel(provider), ToLabel(requester), rho, params->value));
    return SN_OK;
  });
}

sn_status sn_cooperation_feasible(const sn_params* params, int* out) {
  if (AnyNull(params, out)) return NullError();
  *out = socnorm::CooperationFeasible(params->value) ? 1 : 0;
  return SN_OK;
}

sn_status sn_follow_gain(const sn_params* params, double rho, double gains[2]) {
  if (AnyNull(params, gains)) return NullError();
  return Guard([&] {
    const socnorm::ValueTable v = socnorm::LongRunValue(rho, params->value);
    gains[0] = v.follow_gain[0];
    gains[1] = v.follow_gain[1];
    return SN_OK;
  });
}

sn_status sn_belief_pdf(double rho, double rho_s, int observations, double* out) {
  if (AnyNull(out)) return NullError();
  return Guard([&] {
    *out = socnorm::BeliefPdf(rho, {rho_s, observations});
    return SN_OK;
  });
}

sn_status sn_beta_tail_int(int m, int observations, double x, double* out) {
  if (AnyNull(out)) return NullError();
  return Guard([&] {
    socnorm::RequireProbability(x, "cutoff");
    *out = socnorm::BetaTailInt(m, observations, x);
    return SN_OK;
  });
}

sn_status sn_belief_tail(double cutoff, int at_least, double rho_s,
                         int observations, double* out) {
  if (AnyNull(out)) return NullError();
  return Guard([&] {
    const auto dir = at_least ? socnorm::TailDirection::kAtLeast
                              : socnorm::TailDirection::kAtMost;
    *out = socnorm::BeliefTail({cutoff, dir}, {rho_s, observations});
    return SN_OK;
  });
}

sn_status sn_concentration_m(double rho_s, double delta, double epsilon, int cap,
                             int* out) {
  if (AnyNull(out)) return NullError();
  return Guard([&] {
    socnorm::ConcentrationOptions opts;
    if (cap > 0) opts.cap = cap;
    *out = socnorm::ConcentrationObservations(rho_s, delta, epsilon, opts);
    return SN_OK;
  });
}

sn_status sn_delta(const sn_params* params, double rho_s, double* out) {
  if (AnyNull(params, out)) return NullError();
  return Guard([&] {
    *out = socnorm::Delta(rho_s, params->value);
    return SN_OK;
  });
}

sn_status sn_delta_derivative(const sn_params* params, double rho_s, double* out) {
  if (AnyNull(params, out)) return NullError();
  return Guard([&] {
    *out = socnorm::DeltaDerivative(rho_s, params->value);
    return SN_OK;
  });
}

sn_status sn_unlimited_limit(const sn_params* params, double rho0, double* out) {
  if (AnyNull(params, out)) return NullError();
  return Guard([&] {
    *out = socnorm::UnlimitedObservationsLimit(rho0, params->value);
    return SN_OK;
  });
}

sn_status sn_max_stable_root(const sn_params* params, int grid, double tol,
                             double* out) {
  if (AnyNull(params, out)) return NullError();
  return Guard([&] {
    *out = socnorm::FindEquilibria(params->value, Solver(grid, tol)).MaxStableRoot();
    return SN_OK;
  });
}

const char* sn_artifact_text(const sn_artifact* artifact) {
  return artifact ? artifact->text.c_str() : "";
}

size_t sn_artifact_size(const sn_artifact* artifact) {
  return artifact ? artifact->text.size() : 0;
}

void sn_artifact_destroy(sn_artifact* artifact) { delete artifact; }

sn_status sn_report_thresholds(const sn_params* params, sn_format format,
                               sn_artifact** out) {
  if (AnyNull(params, out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    return Emit(socnorm::ThresholdsJson(params->value),
                socnorm::ThresholdsCsv(params->value), format, out);
  });
}

sn_status sn_report_belief(double rho_s, int observations, double cutoff,
                           int grid, sn_format format, sn_artifact** out) {
  if (AnyNull(out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    socnorm::BeliefSummary s{{rho_s, observations}, cutoff, grid > 0 ? grid : 100};
    socnorm::RequireProbability(rho_s, "rho_s");
    socnorm::RequireProbability(cutoff, "cutoff");
    return Emit(socnorm::ToJson(s), socnorm::ToCsv(s), format, out);
  });
}

sn_status sn_report_dynamics(const sn_params* params, double rho0,
                             long long max_periods, double tol, sn_format format,
                             sn_artifact** out) {
  if (AnyNull(params, out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    socnorm::TrajectoryOptions opts;
    if (max_periods > 0) opts.max_periods = max_periods;
    if (tol > 0.0) opts.tolerance = tol;
    const auto traj = socnorm::IterateDynamics(rho0, params->value, opts);
    return Emit(socnorm::ToJson(traj, params->value),
                socnorm::ToCsv(traj, params->value), format, out);
  });
}

sn_status sn_report_equilibria(const sn_params* params, int grid, double tol,
                               sn_format format, sn_artifact** out) {
  if (AnyNull(params, out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    const auto rep = socnorm::FindEquilibria(params->value, Solver(grid, tol));
    return Emit(socnorm::ToJson(rep), socnorm::ToCsv(rep), format, out);
  });
}

sn_status sn_report_design(double beta, double gamma, int observations, int grid,
                           sn_format format, int* feasible, sn_artifact** out) {
  if (AnyNull(out, feasible)) return NullError();
  *out = nullptr;
  return Guard([&] {
    socnorm::DesignOptions opts;
    if (grid > 0) opts.grid_n = grid;
    const auto d = socnorm::OptimizeAlpha(beta, gamma, observations, opts);
    *feasible = d.feasible ? 1 : 0;
    return Emit(socnorm::ToJson(d), socnorm::ToCsv(d), format, out);
  });
}

sn_status sn_report_sweep(const sn_sweep_axes* axes, int design_grid,
                          sn_format format, int* all_feasible, sn_artifact** out) {
  if (AnyNull(axes, all_feasible, out)) return NullError();
  *out = nullptr;
  if ((axes->n_betas && !axes->betas) || (axes->n_gammas && !axes->gammas) ||
      (axes->n_observations && !axes->observations) ||
      (axes->n_alphas && !axes->alphas)) {
    return NullError();
  }
  return Guard([&] {
    socnorm::SweepAxes a;
    a.betas.assign(axes->betas, axes->betas + axes->n_betas);
    a.gammas.assign(axes->gammas, axes->gammas + axes->n_gammas);
    a.observations.assign(axes->observations,
                          axes->observations + axes->n_observations);
    if (axes->n_alphas) a.alphas.assign(axes->alphas, axes->alphas + axes->n_alphas);
    socnorm::DesignOptions opts;
    if (design_grid > 0) opts.grid_n = design_grid;
    const auto table = socnorm::Sweep(a, opts);
    *all_feasible = 1;
    for (const auto& c : table.cells) {
      if (!c.feasible) *all_feasible = 0;
    }
    return Emit(socnorm::ToJson(table), socnorm::ToCsv(table), format, out);
  });
}

sn_sim_config sn_sim_config_default(void) {
  const socnorm::SimConfig d;
  return sn_sim_config{d.agents, d.periods, d.initial_good,
                       static_cast<unsigned long long>(d.seed), d.warmup, d.window};
}

sn_status sn_report_simulation(const sn_params* params, const sn_sim_config* config,
                               sn_format format, sn_artifact** out) {
  if (AnyNull(params, config, out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    const auto trace = socnorm::RunSimulation(ToSimConfig(params->value, *config));
    return Emit(socnorm::ToJson(trace), socnorm::ToCsv(trace), format, out);
  });
}

sn_status sn_simulate_window_average(const sn_params* params,
                                     const sn_sim_config* config, double* out) {
  if (AnyNull(params, config, out)) return NullError();
  return Guard([&] {
    *out = socnorm::RunSimulation(ToSimConfig(params->value, *config)).WindowAverage();
    return SN_OK;
  });
}

sn_status sn_report_figure(const char* name, sn_artifact** out) {
  if (AnyNull(name, out)) return NullError();
  *out = nullptr;
  return Guard([&] {
    auto* a = new sn_artifact;
    a->text = socnorm::FigureData(name).Render();
    *out = a;
    return SN_OK;
  });
}

}  // extern "C"
