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

// Command-line front end for the socnorm library.
//
// Exit status: 0 on success, 2 on parse or validation errors (no artifact
// is written), 3 when --strict is set and a design or sweep is infeasible.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socnorm/socnorm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct ParamFlags {
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> alpha;
  std::optional<double> benefit;
  std::optional<double> cost;
  int observations = 0;
};

struct Common {
  std::string out;
  std::string format = "json";
  std::string config;
  bool strict = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void AddCommon(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output path (default: stdout)");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--config", c.config, "key=value defaults file");
  sub->add_flag("--strict", c.strict, "Exit 3 on infeasible results");
}

void AddParams(CLI::App* sub, ParamFlags& p, bool need_alpha) {
  sub->add_option("--beta", p.beta, "Discount factor in (0,1)");
  sub->add_option("--gamma", p.gamma, "Benefit-to-cost ratio b/c > 1");
  sub->add_option("--b", p.benefit, "Benefit (with --c, instead of --gamma)");
  sub->add_option("--c", p.cost, "Cost (with --b)");
  if (need_alpha) sub->add_option("--alpha", p.alpha, "Punishment strength in [0,1]");
  sub->add_option("--M", p.observations, "Observations per belief");
}

// Returns b/c or gamma; raw values are kept for the handle when given.
double ResolveGamma(const ParamFlags& p) {
  if (p.gamma && (p.benefit || p.cost)) {
    throw UsageError("use either --gamma or --b/--c, not both");
  }
  if (p.gamma) return *p.gamma;
  if (p.benefit && p.cost) return *p.benefit / *p.cost;
  throw UsageError("missing --gamma (or --b and --c)");
}

sn_params* MakeParams(const ParamFlags& p) {
  if (!p.beta) throw UsageError("missing --beta");
  if (!p.alpha) throw UsageError("missing --alpha");
  sn_params* h = nullptr;
  sn_status s;
  if (!p.gamma && p.benefit && p.cost) {
    s = sn_params_create_bc(*p.benefit, *p.cost, *p.beta, *p.alpha,
                            p.observations, &h);
  } else {
    s = sn_params_create(ResolveGamma(p), *p.beta, *p.alpha, p.observations, &h);
  }
  if (s != SN_OK) throw UsageError(sn_last_error());
  return h;
}

struct ParamsGuard {
  sn_params* h;
  ~ParamsGuard() { sn_params_destroy(h); }
};

// Flat key=value file; blank lines and '#' comments are skipped.
std::map<std::string, std::string> ReadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool FlagPresent(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Appends config values for flags that the command line leaves unset.
std::vector<std::string> MergeConfig(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;
  CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args.front());
  } catch (const CLI::OptionNotFound&) {
    return args;
  }
  for (const auto& [key, value] : ReadConfig(path)) {
    const std::string flag = "--" + key;
    if (key == "config") continue;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) {
      bool known = false;
      for (const CLI::App* other : app.get_subcommands({})) {
        if (other->get_option_no_throw(flag) != nullptr) known = true;
      }
      if (!known) throw UsageError("unknown config key: " + key);
      continue;
    }
    if (FlagPresent(args, flag)) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1") args.push_back(flag);
    } else {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

sn_format Format(const Common& c) {
  return c.format == "csv" ? SN_FORMAT_CSV : SN_FORMAT_JSON;
}

struct ArtifactGuard {
  sn_artifact* a = nullptr;
  ~ArtifactGuard() { sn_artifact_destroy(a); }
};

// Maps a library status to an exit status, printing the error.
int Check(sn_status s) {
  if (s == SN_OK) return kExitOk;
  std::cerr << "error: " << sn_status_string(s) << ": " << sn_last_error() << "\n";
  return s == SN_ERR_INTERNAL ? 1 : kExitUsage;
}

int Write(const Common& c, const sn_artifact* a) {
  if (c.out.empty()) {
    std::fwrite(sn_artifact_text(a), 1, sn_artifact_size(a), stdout);
    return kExitOk;
  }
  std::ofstream f(c.out, std::ios::binary);
  f.write(sn_artifact_text(a), static_cast<std::streamsize>(sn_artifact_size(a)));
  if (!f) {
    std::cerr << "error: cannot write " << c.out << "\n";
    return 1;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reputation-based social norm analysis and simulation"};
  app.name("socnorm_cli");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sn_version()));

  Common common;
  ParamFlags params;
  std::optional<double> rho_s;
  std::optional<double> cutoff;
  double rho0 = 0.5;
  long long max_periods = 0;
  int periods = 500;
  int agents = 10000;
  unsigned long long seed = 1;
  int warmup = 0;
  int window = 100;
  int grid = 0;
  double tol = 0.0;
  std::vector<double> sweep_betas, sweep_gammas, sweep_alphas;
  std::vector<int> sweep_ms;
  std::string figure;

  auto* thresholds = app.add_subcommand("thresholds", "Compliance thresholds rho_G, rho_B");
  AddParams(thresholds, params, true);
  AddCommon(thresholds, common);

  auto* belief = app.add_subcommand("belief", "Belief density and tail masses");
  belief->add_option("--rho-s", rho_s, "Social reputation")->required();
  belief->add_option("--M", params.observations, "Observations per belief");
  belief->add_option("--cutoff", cutoff, "Tail cutoff");
  belief->add_option("--grid", grid, "Number of pdf grid intervals");
  AddCommon(belief, common);

  auto* dynamics = app.add_subcommand("dynamics", "Iterate the mean-field map");
  AddParams(dynamics, params, true);
  dynamics->add_option("--rho0", rho0, "Initial social reputation");
  dynamics->add_option("--periods", max_periods, "Maximum periods");
  dynamics->add_option("--tol", tol, "Convergence tolerance");
  AddCommon(dynamics, common);

  auto* equilibria = app.add_subcommand("equilibria", "Equilibria and their stability");
  AddParams(equilibria, params, true);
  equilibria->add_option("--grid", grid, "Root-bracketing grid size");
  equilibria->add_option("--tol", tol, "Root tolerance");
  AddCommon(equilibria, common);

  auto* design = app.add_subcommand("design", "Optimal punishment strength");
  AddParams(design, params, false);
  design->add_option("--grid", grid, "Alpha grid size");
  AddCommon(design, common);

  auto* sweep = app.add_subcommand("sweep", "Max stable equilibrium over a parameter grid");
  sweep->add_option("--beta", sweep_betas, "Comma-separated betas")->delimiter(',')->required();
  sweep->add_option("--gamma", sweep_gammas, "Comma-separated gammas")->delimiter(',')->required();
  sweep->add_option("--M", sweep_ms, "Comma-separated observation counts")->delimiter(',')->required();
  sweep->add_option("--alpha", sweep_alphas, "Comma-separated alphas (omit to optimize)")
      ->delimiter(',');
  sweep->add_option("--grid", grid, "Alpha grid size when optimizing");
  AddCommon(sweep, common);

  auto* simulate = app.add_subcommand("simulate", "Agent-based simulation");
  AddParams(simulate, params, true);
  simulate->add_option("--agents", agents, "Number of agents");
  simulate->add_option("--periods", periods, "Number of periods");
  simulate->add_option("--rho0", rho0, "Initial good fraction");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--warmup", warmup, "Periods discarded before recording");
  simulate->add_option("--window", window, "Averaging window");
  AddCommon(simulate, common);

  auto* fig = app.add_subcommand("figure", "Plot-ready CSV for a named figure");
  fig->add_option("name", figure, "fig3 .. fig9")->required();
  fig->add_option("--out", common.out, "Output path (default: stdout)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = MergeConfig(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    ArtifactGuard art;
    int status = kExitOk;
    const sn_format format = Format(common);

    if (*thresholds) {
      ParamsGuard p{MakeParams(params)};
      if (int rc = Check(sn_report_thresholds(p.h, format, &art.a))) return rc;
    } else if (*belief) {
      if (int rc = Check(sn_report_belief(*rho_s, params.observations,
                                          cutoff.value_or(0.5), grid, format, &art.a))) {
        return rc;
      }
    } else if (*dynamics) {
      ParamsGuard p{MakeParams(params)};
      if (int rc = Check(sn_report_dynamics(p.h, rho0, max_periods, tol, format, &art.a))) {
        return rc;
      }
    } else if (*equilibria) {
      ParamsGuard p{MakeParams(params)};
      if (int rc = Check(sn_report_equilibria(p.h, grid, tol, format, &art.a))) return rc;
    } else if (*design) {
      if (!params.beta) throw UsageError("missing --beta");
      int feasible = 0;
      if (int rc = Check(sn_report_design(*params.beta, ResolveGamma(params),
                                          params.observations, grid, format,
                                          &feasible, &art.a))) {
        return rc;
      }
      if (common.strict && !feasible) status = kExitInfeasible;
    } else if (*sweep) {
      sn_sweep_axes axes{sweep_betas.data(),  sweep_betas.size(),
                         sweep_gammas.data(), sweep_gammas.size(),
                         sweep_ms.data(),     sweep_ms.size(),
                         sweep_alphas.data(), sweep_alphas.size()};
      int all_feasible = 0;
      if (int rc = Check(sn_report_sweep(&axes, grid, format, &all_feasible, &art.a))) {
        return rc;
      }
      if (common.strict && !all_feasible) status = kExitInfeasible;
    } else if (*simulate) {
      ParamsGuard p{MakeParams(params)};
      sn_sim_config cfg{agents, periods, rho0, seed, warmup, window};
      if (int rc = Check(sn_report_simulation(p.h, &cfg, format, &art.a))) return rc;
    } else if (*fig) {
      if (int rc = Check(sn_report_figure(figure.c_str(), &art.a))) return rc;
    }

    if (int rc = Write(common, art.a)) return rc;
    if (status == kExitInfeasible) std::cerr << "infeasible: no alpha sustains cooperation\n";
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  }
}
