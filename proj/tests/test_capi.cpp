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

#include <cmath>
#include <cstring>
#include <string>

#include "csv_util.hpp"
#include "doctest.h"
#include "json.hpp"
#include "socnorm/socnorm.h"

namespace {

using Json = nlohmann::ordered_json;

struct Params {
  sn_params* h = nullptr;
  Params(double gamma, double beta, double alpha, int m) {
    REQUIRE(sn_params_create(gamma, beta, alpha, m, &h) == SN_OK);
  }
  ~Params() { sn_params_destroy(h); }
};

std::string Take(sn_artifact* a) {
  std::string s(sn_artifact_text(a), sn_artifact_size(a));
  sn_artifact_destroy(a);
  return s;
}

TEST_CASE("status strings and version") {
  CHECK(std::string(sn_status_string(SN_OK)) == "ok");
  CHECK(std::string(sn_status_string(SN_ERR_CAP_EXCEEDED)) == "search cap exceeded");
  CHECK(std::strlen(sn_version()) > 0);
}

TEST_CASE("parameter handles") {
  sn_params* h = nullptr;
  CHECK(sn_params_create(1.0, 0.5, 1.0, 0, &h) == SN_ERR_INVALID_ARGUMENT);
  CHECK(h == nullptr);
  CHECK(std::string(sn_last_error()).find("gamma") != std::string::npos);
  CHECK(sn_params_create(5.0, 0.5, 1.0, 0, nullptr) == SN_ERR_NULL_POINTER);
  CHECK(sn_params_create_bc(10.0, 2.0, 0.5, 0.7, 3, &h) == SN_OK);
  double g, b, a;
  int m;
  CHECK(sn_params_get(h, &g, &b, &a, &m) == SN_OK);
  CHECK(g == 5.0);
  CHECK(b == 0.5);
  CHECK(a == 0.7);
  CHECK(m == 3);
  sn_params_destroy(h);
  sn_params_destroy(nullptr);
}

TEST_CASE("numeric queries") {
  Params p(10.0, 0.25, 0.9, 0);
  double rg, rb;
  REQUIRE(sn_thresholds(p.h, &rg, &rb) == SN_OK);
  CHECK(std::abs(rg - 3.0 / 9.1) < 1e-15);
  CHECK(std::abs(rb - 3.0 / 8.1) < 1e-15);
  int action = -1;
  CHECK(sn_best_response(p.h, 1, 1, 0.5, &action) == SN_OK);
  CHECK(action == 1);
  CHECK(sn_best_response(p.h, 0, 1, 0.35, &action) == SN_OK);
  CHECK(action == 0);
  CHECK(sn_best_response(p.h, 2, 1, 0.35, &action) == SN_ERR_INVALID_ARGUMENT);
  int feasible = 0;
  CHECK(sn_cooperation_feasible(p.h, &feasible) == SN_OK);
  CHECK(feasible == 1);
  double gains[2];
  CHECK(sn_follow_gain(p.h, rg, gains) == SN_OK);
  CHECK(std::abs(gains[1]) < 1e-9);
  double x = 0;
  CHECK(sn_utility_loss(p.h, 0.0, &x) == SN_OK);
  CHECK(x == 0.0);
  CHECK(sn_max_stable_root(p.h, 0, 0, &x) == SN_OK);
  CHECK(std::abs(x - 0.6322) < 1e-4);
  CHECK(sn_delta(p.h, 0.0, &x) == SN_OK);
  CHECK(x == 0.0);
  CHECK(sn_delta_derivative(p.h, 0.0, &x) == SN_OK);
  CHECK(x == doctest::Approx(0.9 * (1 - rb)));
  CHECK(sn_unlimited_limit(p.h, 0.9, &x) == SN_OK);
  CHECK(x == 1.0);
  CHECK(sn_max_stable_root(p.h, 10, 0, &x) == SN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("belief queries") {
  double x = 0;
  CHECK(sn_belief_pdf(0.5, 1.0, 1, &x) == SN_OK);
  CHECK(x == doctest::Approx(1.0));
  CHECK(sn_beta_tail_int(0, 1, 0.25, &x) == SN_OK);
  CHECK(x == doctest::Approx(0.5625));
  CHECK(sn_beta_tail_int(0, 1, 1.5, &x) == SN_ERR_INVALID_ARGUMENT);
  CHECK(sn_belief_tail(0.25, 1, 0.5, 1, &x) == SN_OK);
  CHECK(x == doctest::Approx(0.75));
  CHECK(sn_belief_tail(0.25, 0, 0.5, 1, &x) == SN_OK);
  CHECK(x == doctest::Approx(0.25));
  CHECK(sn_belief_pdf(0.5, 0.5, 5000, &x) == SN_ERR_OUT_OF_RANGE);
  int m = -1;
  CHECK(sn_concentration_m(0.5, 0.5, 0.05, 0, &m) == SN_OK);
  CHECK(m == 0);
  CHECK(sn_concentration_m(0.5, 0.01, 1e-6, 64, &m) == SN_ERR_CAP_EXCEEDED);
}

TEST_CASE("artifacts") {
  Params p(5.0, 0.5, 1.0, 1);
  sn_artifact* a = nullptr;
  REQUIRE(sn_report_equilibria(p.h, 0, 0, SN_FORMAT_JSON, &a) == SN_OK);
  const auto j = Json::parse(Take(a));
  CHECK(j["roots"].size() == 2);
  CHECK(std::abs(j["roots"][1]["rho_s"].get<double>() - 0.9) < 1e-10);

  REQUIRE(sn_report_thresholds(p.h, SN_FORMAT_CSV, &a) == SN_OK);
  const auto t = socnorm::testing::ParseCsv(Take(a));
  CHECK(t.Number(0, "rho_G") == 0.25);

  REQUIRE(sn_report_dynamics(p.h, 0.5, 0, 0, SN_FORMAT_CSV, &a) == SN_OK);
  const auto d = socnorm::testing::ParseCsv(Take(a));
  CHECK(d.Number(0, "inflow") == 0.1875);

  REQUIRE(sn_report_belief(0.5, 1, 0.25, 10, SN_FORMAT_JSON, &a) == SN_OK);
  CHECK(!Take(a).empty());
  CHECK(sn_report_belief(1.5, 1, 0.25, 10, SN_FORMAT_JSON, &a) == SN_ERR_INVALID_ARGUMENT);
  CHECK(a == nullptr);

  int feasible = -1;
  REQUIRE(sn_report_design(0.5, 5.0, 1, 64, SN_FORMAT_JSON, &feasible, &a) == SN_OK);
  CHECK(feasible == 1);
  CHECK(Json::parse(Take(a))["alpha_star"] == 1.0);
  REQUIRE(sn_report_design(0.1, 1.5, 1, 64, SN_FORMAT_JSON, &feasible, &a) == SN_OK);
  CHECK(feasible == 0);
  sn_artifact_destroy(a);

  const double betas[] = {0.5};
  const double gammas[] = {3.0, 4.0};
  const int ms[] = {1};
  sn_sweep_axes axes{betas, 1, gammas, 2, ms, 1, nullptr, 0};
  int all = -1;
  REQUIRE(sn_report_sweep(&axes, 64, SN_FORMAT_CSV, &all, &a) == SN_OK);
  CHECK(all == 1);
  CHECK(socnorm::testing::ParseCsv(Take(a)).rows.size() == 2);
  axes.n_alphas = 1;
  CHECK(sn_report_sweep(&axes, 64, SN_FORMAT_CSV, &all, &a) == SN_ERR_NULL_POINTER);

  sn_sim_config cfg = sn_sim_config_default();
  CHECK(cfg.agents == 10000);
  cfg.agents = 200;
  cfg.periods = 10;
  REQUIRE(sn_report_simulation(p.h, &cfg, SN_FORMAT_CSV, &a) == SN_OK);
  CHECK(socnorm::testing::ParseCsv(Take(a)).rows.size() == 10);
  double avg = -1;
  CHECK(sn_simulate_window_average(p.h, &cfg, &avg) == SN_OK);
  CHECK(avg >= 0.0);
  cfg.agents = 1;
  CHECK(sn_report_simulation(p.h, &cfg, SN_FORMAT_CSV, &a) == SN_ERR_INVALID_ARGUMENT);

  REQUIRE(sn_report_figure("fig5", &a) == SN_OK);
  CHECK(socnorm::testing::ParseCsv(Take(a)).rows.size() == 101);
  CHECK(sn_report_figure("nope", &a) == SN_ERR_INVALID_ARGUMENT);
  CHECK(sn_report_figure(nullptr, &a) == SN_ERR_NULL_POINTER);
  CHECK(std::string(sn_artifact_text(nullptr)).empty());
}

}  // namespace
