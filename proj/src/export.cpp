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

#include "socnorm/export.hpp"

#include <cmath>
#include <sstream>

#include "socnorm/format.hpp"

namespace socnorm {

CsvTable::CsvTable(Json echo, std::vector<std::string> columns)
    : echo_(std::move(echo)), columns_(std::move(columns)) {}

void CsvTable::AddRow(std::vector<std::string> row) {
  if (row.size() != columns_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "CSV row width mismatch");
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::Render() const {
  std::ostringstream os;
  os << "# " << echo_.dump() << '\n';
  const auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(columns_);
  for (const auto& r : rows_) line(r);
  return os.str();
}

std::string Cell(double v) { return FormatDouble(v); }
std::string Cell(int v) { return std::to_string(v); }
std::string Cell(bool v) { return v ? "1" : "0"; }

Json Number(double v) {
  if (std::isfinite(v)) return v;
  return FormatDouble(v);
}

Json ToJson(const SystemParams& p) {
  Json j;
  j["beta"] = p.beta();
  j["gamma"] = p.gamma();
  j["alpha"] = p.alpha();
  j["M"] = p.observations();
  if (p.has_raw_benefit_cost()) {
    j["b"] = p.benefit();
    j["c"] = p.cost();
  }
  return j;
}

Json ThresholdsJson(const SystemParams& params) {
  const Thresholds t = ComputeThresholds(params);
  Json j;
  j["params"] = ToJson(params);
  j["rho_G"] = Number(t.good);
  j["rho_B"] = Number(t.bad);
  j["cooperation_feasible"] = CooperationFeasible(params);
  return j;
}

CsvTable ThresholdsCsv(const SystemParams& params) {
  const Thresholds t = ComputeThresholds(params);
  CsvTable csv(Json{{"command", "thresholds"}, {"params", ToJson(params)}},
               {"beta", "gamma", "alpha", "rho_G", "rho_B", "cooperation_feasible"});
  csv.AddRow({Cell(params.beta()), Cell(params.gamma()), Cell(params.alpha()),
              Cell(t.good), Cell(t.bad), Cell(CooperationFeasible(params))});
  return csv;
}

namespace {

Json BeliefEcho(const BeliefSummary& s) {
  return Json{{"command", "belief"},
              {"rho_s", s.dist.social_reputation},
              {"M", s.dist.observations},
              {"cutoff", s.cutoff},
              {"grid", s.grid}};
}

}  // namespace

Json ToJson(const BeliefSummary& s) {
  Json j = BeliefEcho(s);
  j.erase("command");
  j["at_least"] = BeliefTail({s.cutoff, TailDirection::kAtLeast}, s.dist);
  j["at_most"] = BeliefTail({s.cutoff, TailDirection::kAtMost}, s.dist);
  Json rho = Json::array();
  Json pdf = Json::array();
  for (int i = 0; i <= s.grid; ++i) {
    const double x = static_cast<double>(i) / s.grid;
    rho.push_back(x);
    pdf.push_back(BeliefPdf(x, s.dist));
  }
  j["rho"] = std::move(rho);
  j["pdf"] = std::move(pdf);
  return j;
}

CsvTable ToCsv(const BeliefSummary& s) {
  CsvTable csv(BeliefEcho(s), {"rho", "pdf", "at_least", "at_most"});
  for (int i = 0; i <= s.grid; ++i) {
    const double x = static_cast<double>(i) / s.grid;
    csv.AddRow({Cell(x), Cell(BeliefPdf(x, s.dist)),
                Cell(BeliefTail({x, TailDirection::kAtLeast}, s.dist)),
                Cell(BeliefTail({x, TailDirection::kAtMost}, s.dist))});
  }
  return csv;
}

Json ToJson(const Trajectory& t, const SystemParams& params) {
  Json j;
  j["params"] = ToJson(params);
  j["rho0"] = t.records.front().social_reputation;
  j["max_periods"] = t.options.max_periods;
  j["tol"] = t.options.tolerance;
  j["stop"] = std::string(ToString(t.stop));
  j["final"] = t.final_value();
  Json rows = Json::array();
  for (const auto& r : t.records) {
    rows.push_back(Json{{"period", r.period},
                        {"rho_s", r.social_reputation},
                        {"inflow", r.flows.inflow},
                        {"outflow", r.flows.outflow}});
  }
  j["trajectory"] = std::move(rows);
  return j;
}

CsvTable ToCsv(const Trajectory& t, const SystemParams& params) {
  CsvTable csv(Json{{"command", "dynamics"},
                    {"params", ToJson(params)},
                    {"rho0", t.records.front().social_reputation},
                    {"max_periods", t.options.max_periods},
                    {"tol", t.options.tolerance},
                    {"stop", std::string(ToString(t.stop))}},
               {"period", "rho_s", "inflow", "outflow"});
  for (const auto& r : t.records) {
    csv.AddRow({std::to_string(r.period), Cell(r.social_reputation),
                Cell(r.flows.inflow), Cell(r.flows.outflow)});
  }
  return csv;
}

Json ToJson(const EquilibriumReport& r) {
  Json j;
  j["params"] = ToJson(r.params);
  j["grid"] = r.options.grid_n;
  j["tol"] = r.options.tol;
  j["thresholds"] = Json{{"rho_G", Number(r.thresholds.good)},
                         {"rho_B", Number(r.thresholds.bad)}};
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    roots.push_back(Json{{"rho_s", root.social_reputation},
                         {"stable", root.stable()},
                         {"stability", std::string(ToString(root.stability))},
                         {"derivative", root.derivative}});
  }
  j["roots"] = std::move(roots);
  Json bounds;
  if (r.general_bounds) {
    bounds["lower"] = r.general_bounds->lower;
    bounds["upper"] = r.general_bounds->upper;
  } else {
    bounds["lower"] = nullptr;
    bounds["upper"] = nullptr;
  }
  bounds["cor2"] = r.large_gamma_bound;
  j["bounds"] = std::move(bounds);
  j["closed_form"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
  return j;
}

CsvTable ToCsv(const EquilibriumReport& r) {
  CsvTable csv(Json{{"command", "equilibria"},
                    {"params", ToJson(r.params)},
                    {"grid", r.options.grid_n},
                    {"tol", r.options.tol}},
               {"rho_s", "stable", "stability", "derivative", "bound_lower",
                "bound_upper", "bound_cor2", "closed_form"});
  const std::string lo = r.general_bounds ? Cell(r.general_bounds->lower) : "";
  const std::string hi = r.general_bounds ? Cell(r.general_bounds->upper) : "";
  const std::string cf = r.closed_form ? Cell(*r.closed_form) : "";
  for (const auto& root : r.roots) {
    csv.AddRow({Cell(root.social_reputation), Cell(root.stable()),
                std::string(ToString(root.stability)), Cell(root.derivative), lo,
                hi, Cell(r.large_gamma_bound), cf});
  }
  return csv;
}

namespace {

Json DesignEcho(const DesignResult& d) {
  return Json{{"beta", d.beta},
              {"gamma", d.gamma},
              {"M", d.observations},
              {"grid", d.grid_n}};
}

}  // namespace

Json ToJson(const DesignResult& d) {
  Json j;
  j["params"] = DesignEcho(d);
  j["feasible"] = d.feasible;
  j["alpha_star"] = d.alpha_star ? Json(*d.alpha_star) : Json(nullptr);
  j["rho_star"] = d.rho_star;
  j["method"] = std::string(ToString(d.method));
  if (d.feasible_alpha_range) {
    j["feasible_alpha_range"] = Json::array(
        {d.feasible_alpha_range->lower, d.feasible_alpha_range->upper});
  } else {
    j["feasible_alpha_range"] = nullptr;
  }
  j["cross_check_gap"] = d.cross_check_gap ? Json(*d.cross_check_gap) : Json(nullptr);
  if (!d.profile.empty()) {
    Json prof = Json::array();
    for (const auto& p : d.profile) {
      prof.push_back(Json{{"alpha", p.alpha}, {"stable_roots", p.stable_roots}});
    }
    j["profile"] = std::move(prof);
  }
  return j;
}

CsvTable ToCsv(const DesignResult& d) {
  CsvTable csv(Json{{"command", "design"}, {"params", DesignEcho(d)}},
               {"beta", "gamma", "M", "alpha_star", "rho_star", "method",
                "feasible"});
  csv.AddRow({Cell(d.beta), Cell(d.gamma), Cell(d.observations),
              d.alpha_star ? Cell(*d.alpha_star) : "", Cell(d.rho_star),
              std::string(ToString(d.method)), Cell(d.feasible)});
  return csv;
}

namespace {

Json SweepEcho(const SweepTable& s) {
  Json j;
  j["beta"] = s.axes.betas;
  j["gamma"] = s.axes.gammas;
  j["M"] = s.axes.observations;
  j["alpha"] = s.alpha_optimized ? Json("optimized") : Json(s.axes.alphas);
  if (s.alpha_optimized) j["grid"] = s.grid_n;
  return j;
}

}  // namespace

Json ToJson(const SweepTable& s) {
  Json j;
  j["axes"] = SweepEcho(s);
  Json cells = Json::array();
  for (const auto& c : s.cells) {
    cells.push_back(Json{{"beta", c.beta},
                         {"gamma", c.gamma},
                         {"M", c.observations},
                         {"max_stable_rho", c.max_stable_rho},
                         {"alpha", c.alpha ? Json(*c.alpha) : Json(nullptr)},
                         {"feasible", c.feasible},
                         {"stable_roots", c.stable_roots}});
  }
  j["cells"] = std::move(cells);
  return j;
}

CsvTable ToCsv(const SweepTable& s) {
  CsvTable csv(Json{{"command", "sweep"}, {"axes", SweepEcho(s)}},
               {"beta", "gamma", "M", "max_stable_rho", "alpha_if_swept",
                "feasible"});
  for (const auto& c : s.cells) {
    csv.AddRow({Cell(c.beta), Cell(c.gamma), Cell(c.observations),
                Cell(c.max_stable_rho), c.alpha ? Cell(*c.alpha) : "",
                Cell(c.feasible)});
  }
  return csv;
}

Json ToJson(const SimConfig& c) {
  Json j;
  j["params"] = ToJson(c.params);
  j["agents"] = c.agents;
  j["periods"] = c.periods;
  j["rho0"] = c.initial_good;
  j["seed"] = c.seed;
  j["warmup"] = c.warmup;
  j["window"] = c.window;
  return j;
}

Json ToJson(const SimTrace& t) {
  Json j;
  j["config"] = ToJson(t.config);
  j["final_good_fraction"] = t.FinalGoodFraction();
  j["window_average"] = t.WindowAverage();
  Json rows = Json::array();
  for (const auto& r : t.records) {
    rows.push_back(Json{{"period", r.period},
                        {"good_fraction", t.GoodFraction(r.good_start)},
                        {"inflow", r.inflow},
                        {"outflow", r.outflow},
                        {"services", r.services},
                        {"welfare", r.welfare}});
  }
  j["trace"] = std::move(rows);
  return j;
}

CsvTable ToCsv(const SimTrace& t) {
  Json echo{{"command", "simulate"}};
  echo.update(ToJson(t.config));
  CsvTable csv(std::move(echo), {"period", "good_fraction", "inflow", "outflow",
                                 "services", "welfare"});
  for (const auto& r : t.records) {
    csv.AddRow({Cell(r.period), Cell(t.GoodFraction(r.good_start)),
                Cell(r.inflow), Cell(r.outflow), Cell(r.services),
                Cell(r.welfare)});
  }
  return csv;
}

}  // namespace socnorm
