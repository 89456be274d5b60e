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

/*
 * C interface of the socnorm shared library.
 *
 * Every fallible call returns an sn_status; on failure a message is
 * available from sn_last_error() (thread-local, valid until the next
 * failing call on the same thread). Handles are opaque and owned by the
 * caller, who releases them with the matching *_destroy function.
 * Infinite thresholds are reported as IEEE +infinity.
 */

#ifndef SOCNORM_SOCNORM_H_
#define SOCNORM_SOCNORM_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(SOCNORM_BUILDING_LIBRARY)
#define SOCNORM_API __declspec(dllexport)
#else
#define SOCNORM_API __declspec(dllimport)
#endif
#else
#define SOCNORM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sn_status {
  SN_OK = 0,
  SN_ERR_INVALID_ARGUMENT = 1,
  SN_ERR_OUT_OF_RANGE = 2,
  SN_ERR_NOT_APPLICABLE = 3,
  SN_ERR_CAP_EXCEEDED = 4,
  SN_ERR_INFEASIBLE = 5,
  SN_ERR_NULL_POINTER = 6,
  SN_ERR_INTERNAL = 7
} sn_status;

typedef enum sn_format { SN_FORMAT_JSON = 0, SN_FORMAT_CSV = 1 } sn_format;

typedef struct sn_params sn_params;
typedef struct sn_artifact sn_artifact;

SOCNORM_API const char* sn_version(void);
SOCNORM_API const char* sn_last_error(void);
SOCNORM_API const char* sn_status_string(sn_status status);

/* Parameters. Either the benefit-to-cost ratio gamma, or raw (b, c). */
SOCNORM_API sn_status sn_params_create(double gamma, double beta, double alpha,
                                       int observations, sn_params** out);
SOCNORM_API sn_status sn_params_create_bc(double benefit, double cost,
                                          double beta, double alpha,
                                          int observations, sn_params** out);
SOCNORM_API void sn_params_destroy(sn_params* params);
SOCNORM_API sn_status sn_params_get(const sn_params* params, double* gamma,
                                    double* beta, double* alpha,
                                    int* observations);

/* Incentives. Labels and actions are 0/1. */
SOCNORM_API sn_status sn_thresholds(const sn_params* params, double* rho_good,
                                    double* rho_bad);
SOCNORM_API sn_status sn_utility_loss(const sn_params* params, double rho,
                                      double* out);
SOCNORM_API sn_status sn_best_response(const sn_params* params, int provider,
                                       int requester, double rho, int* action);
SOCNORM_API sn_status sn_cooperation_feasible(const sn_params* params,
                                              int* out);
/* gains[label] = V(follow) - V(deviate) against a good requester. */
SOCNORM_API sn_status sn_follow_gain(const sn_params* params, double rho,
                                     double gains[2]);

/* Beliefs. */
SOCNORM_API sn_status sn_belief_pdf(double rho, double rho_s, int observations,
                                    double* out);
SOCNORM_API sn_status sn_beta_tail_int(int m, int observations, double x,
                                       double* out);
SOCNORM_API sn_status sn_belief_tail(double cutoff, int at_least, double rho_s,
                                     int observations, double* out);
SOCNORM_API sn_status sn_concentration_m(double rho_s, double delta,
                                         double epsilon, int cap, int* out);

/* Dynamics and equilibria. */
SOCNORM_API sn_status sn_delta(const sn_params* params, double rho_s,
                               double* out);
SOCNORM_API sn_status sn_delta_derivative(const sn_params* params, double rho_s,
                                          double* out);
SOCNORM_API sn_status sn_unlimited_limit(const sn_params* params, double rho0,
                                         double* out);
/* Largest stable equilibrium; 0 when none is positive. */
SOCNORM_API sn_status sn_max_stable_root(const sn_params* params, int grid,
                                         double tol, double* out);

/* Text artifacts (JSON document or CSV table). */
SOCNORM_API const char* sn_artifact_text(const sn_artifact* artifact);
SOCNORM_API size_t sn_artifact_size(const sn_artifact* artifact);
SOCNORM_API void sn_artifact_destroy(sn_artifact* artifact);

SOCNORM_API sn_status sn_report_thresholds(const sn_params* params,
                                           sn_format format, sn_artifact** out);
SOCNORM_API sn_status sn_report_belief(double rho_s, int observations,
                                       double cutoff, int grid,
                                       sn_format format, sn_artifact** out);
/* max_periods <= 0 and tol <= 0 select the defaults (100000, 1e-10). */
SOCNORM_API sn_status sn_report_dynamics(const sn_params* params, double rho0,
                                         long long max_periods, double tol,
                                         sn_format format, sn_artifact** out);
/* grid <= 0 and tol <= 0 select the defaults (4096, 1e-12). */
SOCNORM_API sn_status sn_report_equilibria(const sn_params* params, int grid,
                                           double tol, sn_format format,
                                           sn_artifact** out);
/* *feasible is set to 0 when no alpha keeps rho_B <= 1. */
SOCNORM_API sn_status sn_report_design(double beta, double gamma,
                                       int observations, int grid,
                                       sn_format format, int* feasible,
                                       sn_artifact** out);

typedef struct sn_sweep_axes {
  const double* betas;
  size_t n_betas;
  const double* gammas;
  size_t n_gammas;
  const int* observations;
  size_t n_observations;
  /* n_alphas == 0: optimize alpha per cell. */
  const double* alphas;
  size_t n_alphas;
} sn_sweep_axes;

SOCNORM_API sn_status sn_report_sweep(const sn_sweep_axes* axes,
                                      int design_grid, sn_format format,
                                      int* all_feasible, sn_artifact** out);

typedef struct sn_sim_config {
  int agents;
  int periods;
  double rho0;
  unsigned long long seed;
  int warmup;
  int window;
} sn_sim_config;

SOCNORM_API sn_sim_config sn_sim_config_default(void);
SOCNORM_API sn_status sn_report_simulation(const sn_params* params,
                                           const sn_sim_config* config,
                                           sn_format format, sn_artifact** out);
/* Window-averaged final good fraction without building an artifact. */
SOCNORM_API sn_status sn_simulate_window_average(const sn_params* params,
                                                 const sn_sim_config* config,
                                                 double* out);

/* name is one of fig3 .. fig9. */
SOCNORM_API sn_status sn_report_figure(const char* name, sn_artifact** out);

#ifdef __cplusplus
}
#endif

#endif /* SOCNORM_SOCNORM_H_ */
