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

#include "socnorm/figures.hpp"

#include <string>

#include "socnorm/format.hpp"

namespace socnorm {
namespace {

constexpr int kAbmAgents = 10000;

std::string Tag(double v) { return FormatDouble(v); }

// Mean-field path of fixed length (no early stop), so columns align.
std::vector<double> MeanFieldPath(double rho0, const SystemParams& p, int periods) {
  std::vector<double> path{rho0};
  DynamicsState s{rho0, 0};
  for (int t = 0; t < periods; ++t) {
    s = Step(s, p);
    path.push_back(s.social_reputation);
  }
  return path;
}

std::vector<double> AbmPath(double rho0, const SystemParams& p, int periods,
                            std::uint64_t seed) {
  SimConfig cfg;
  cfg.params = p;
  cfg.agents = kAbmAgents;
  cfg.periods = periods;
  cfg.initial_good = rho0;
  cfg.seed = seed;
  const SimTrace trace = RunSimulation(cfg);
  std::vector<double> path{trace.GoodFraction(trace.records.front().good_start)};
  for (const auto& r : trace.records) path.push_back(trace.GoodFraction(r.good_end()));
  return path;
}

struct Series {
  std::string name;
  std::vector<double> values;
};

CsvTable PathTable(Json echo, const std::vector<Series>& series, int periods) {
  std::vector<std::string> cols{"period"};
  for (const auto& s : series) cols.push_back(s.name);
  CsvTable csv(std::move(echo), std::move(cols));
  for (int t = 0; t <= periods; ++t) {
    std::vector<std::string> row{Cell(t)};
    for (const auto& s : series) row.push_back(Cell(s.values[t]));
    csv.AddRow(std::move(row));
  }
  return csv;
}

CsvTable Fig3() {
  constexpr int kPeriods = 30;
  const auto base = SystemParams::FromRatio(10.0, 0.25, 0.9, 0);
  std::vector<Series> series;
  for (int m : {0, 1, 2}) {
    const auto p = base.WithObservations(m);
    for (double r0 : {0.1, 0.5, 0.9}) {
      series.push_back({"mf_M" + std::to_string(m) + "_r" + Tag(r0),
                        MeanFieldPath(r0, p, kPeriods)});
    }
    series.push_back({"abm_M" + std::to_string(m) + "_r0.5",
                      AbmPath(0.5, p, kPeriods, 3000 + m)});
  }
  Json echo{{"figure", "fig3"}, {"beta", 0.25}, {"gamma", 10.0}, {"alpha", 0.9},
            {"M", {0, 1, 2}}, {"agents", kAbmAgents}, {"seeds", {3000, 3001, 3002}}};
  return PathTable(std::move(echo), series, kPeriods);
}

CsvTable Fig4() {
  constexpr int kPeriods = 100;
  const auto p = SystemParams::FromRatio(8.0, 0.25, 0.9, 6);
  std::vector<Series> series;
  for (double r0 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    series.push_back({"mf_r" + Tag(r0), MeanFieldPath(r0, p, kPeriods)});
  }
  series.push_back({"abm_r0.1", AbmPath(0.1, p, kPeriods, 4001)});
  series.push_back({"abm_r0.9", AbmPath(0.9, p, kPeriods, 4009)});
  Json echo{{"figure", "fig4"}, {"beta", 0.25}, {"gamma", 8.0}, {"alpha", 0.9},
            {"M", 6}, {"agents", kAbmAgents}, {"seeds", {4001, 4009}}};
  return PathTable(std::move(echo), series, kPeriods);
}

CsvTable Fig5() {
  const auto p = SystemParams::FromRatio(8.0, 0.25, 0.9, 0);
  const Thresholds t = ComputeThresholds(p);
  Json echo{{"figure", "fig5"}, {"beta", 0.25}, {"gamma", 8.0}, {"alpha", 0.9},
            {"M", "inf"}, {"rho_G", t.good}, {"rho_B", t.bad}};
  CsvTable csv(std::move(echo), {"rho0", "limit", "regime"});
  for (int i = 0; i <= 100; ++i) {
    const double r0 = i / 100.0;
    const double lim = UnlimitedObservationsLimit(r0, p);
    const char* regime = lim == 1.0 ? "full" : (lim == 0.0 ? "zero" : "frozen");
    csv.AddRow({Cell(r0), Cell(lim), regime});
  }
  return csv;
}

std::vector<double> AlphaGrid() {
  std::vector<double> out;
  for (int i = 1; i <= 20; ++i) out.push_back(i * 0.05);
  return out;
}

// Max stable equilibrium over an alpha grid, one column per value of a
// second environment axis.
template <typename MakeParams>
CsvTable AlphaByAxis(Json echo, const std::vector<std::string>& names,
                     MakeParams make) {
  std::vector<std::string> cols{"alpha"};
  cols.insert(cols.end(), names.begin(), names.end());
  CsvTable csv(std::move(echo), std::move(cols));
  for (double a : AlphaGrid()) {
    std::vector<std::string> row{Cell(a)};
    for (std::size_t k = 0; k < names.size(); ++k) {
      row.push_back(Cell(FindEquilibria(make(a, k)).MaxStableRoot()));
    }
    csv.AddRow(std::move(row));
  }
  return csv;
}

CsvTable Fig6() {
  std::vector<std::string> names;
  for (int m = 0; m <= 8; ++m) names.push_back("M" + std::to_string(m));
  Json echo{{"figure", "fig6"}, {"beta", 0.5}, {"gamma", 5.0}, {"alpha", "0.05:0.05:1"}};
  return AlphaByAxis(std::move(echo), names, [](double a, std::size_t k) {
    return SystemParams::FromRatio(5.0, 0.5, a, static_cast<int>(k));
  });
}

CsvTable Fig7() {
  Json echo{{"figure", "fig7"}, {"beta", 0.5}, {"gamma", 6.0}, {"design_grid", 128}};
  CsvTable csv(std::move(echo),
               {"M", "optimum", "alpha_star", "alpha1_equilibrium", "bound_cor2"});
  DesignOptions opts;
  opts.grid_n = 128;
  for (int m = 0; m <= 10; ++m) {
    const DesignResult d = OptimizeAlpha(0.5, 6.0, m, opts);
    const auto mild = SystemParams::FromRatio(6.0, 0.5, 1.0, m);
    csv.AddRow({Cell(m), Cell(d.rho_star), d.alpha_star ? Cell(*d.alpha_star) : "",
                Cell(FindEquilibria(mild).MaxStableRoot()), Cell(LargeGammaBound(mild))});
  }
  return csv;
}

CsvTable Fig8() {
  const std::vector<double> gammas{3.0, 4.0, 5.0, 6.0};
  std::vector<std::string> names;
  for (double g : gammas) names.push_back("gamma" + Tag(g));
  Json echo{{"figure", "fig8"}, {"beta", 0.5}, {"M", 1}, {"gamma", gammas}};
  return AlphaByAxis(std::move(echo), names, [&](double a, std::size_t k) {
    return SystemParams::FromRatio(gammas[k], 0.5, a, 1);
  });
}

CsvTable Fig9() {
  const std::vector<double> betas{0.3, 0.5, 0.7, 0.9};
  std::vector<std::string> names;
  for (double b : betas) names.push_back("beta" + Tag(b));
  Json echo{{"figure", "fig9"}, {"gamma", 4.0}, {"M", 1}, {"beta", betas}};
  return AlphaByAxis(std::move(echo), names, [&](double a, std::size_t k) {
    return SystemParams::FromRatio(4.0, betas[k], a, 1);
  });
}

}  // namespace

const std::vector<std::string_view>& FigureNames() {
  static const std::vector<std::string_view> names{"fig3", "fig4", "fig5", "fig6",
                                                   "fig7", "fig8", "fig9"};
  return names;
}

CsvTable FigureData(std::string_view name) {
  if (name == "fig3") return Fig3();
  if (name == "fig4") return Fig4();
  if (name == "fig5") return Fig5();
  if (name == "fig6") return Fig6();
  if (name == "fig7") return Fig7();
  if (name == "fig8") return Fig8();
  if (name == "fig9") return Fig9();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown figure '" + std::string(name) + "' (expected fig3..fig9)");
}

}  // namespace socnorm
