#include "celent/scenario.hpp"

#include <cmath>
#include <string>

#include "celent/criteria.hpp"
#include "celent/dynamics.hpp"
#include "celent/error.hpp"
#include "parallel.hpp"

namespace celent {
namespace {

const std::vector<double> kGammaSweep = {0.5, 0.7, 0.9, 1.0};
const std::vector<double> kThetaSweep = {0.0, 0.25, 0.5, 1.0};
const std::vector<double> kGainSweep = {10.0, 25.0, 50.0, 100.0};

ScenarioConfig make(std::string label, SystemParams p, SweepField f, std::vector<double> values) {
  ScenarioConfig c;
  c.label = std::move(label);
  c.params = p;
  c.sweep = f;
  c.sweep_values = std::move(values);
  return c;
}

SystemParams params(double gamma, double omega, double theta, double gain) {
  return SystemParams{0.5, gamma, omega, theta, gain};
}

std::vector<double> effective_sweep(const ScenarioConfig& cfg) {
  if (cfg.sweep == SweepField::kNone) return {std::nan("")};
  return cfg.sweep_values;
}

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::kInvalidConfig, why); }

}  // namespace

std::string_view to_string(SweepField f) noexcept {
  switch (f) {
    case SweepField::kNone: return "none";
    case SweepField::kKappa: return "kappa";
    case SweepField::kGamma: return "gamma";
    case SweepField::kOmega: return "omega";
    case SweepField::kTheta: return "theta";
    case SweepField::kGainA: return "gain_a";
  }
  return "none";
}

std::string_view to_string(Output o) noexcept {
  switch (o) {
    case Output::kVS: return "v_s";
    case Output::kEN: return "e_n";
    case Output::kDgcz: return "dgcz";
    case Output::kHalfDgcz: return "half_dgcz";
    case Output::kHzG: return "hz_g";
    case Output::kNA: return "n_a";
    case Output::kNB: return "n_b";
    case Output::kCAB: return "c_ab";
    case Output::kRegime: return "regime";
  }
  return "";
}

std::vector<Output> default_outputs() {
  return {Output::kVS, Output::kEN, Output::kDgcz, Output::kHzG,
          Output::kNA, Output::kNB, Output::kCAB,  Output::kRegime};
}

double TimeGrid::at(std::size_t i) const noexcept {
  if (i + 1 == n_points) return t_end;
  const double step = (t_end - t_start) / static_cast<double>(n_points - 1);
  return t_start + step * static_cast<double>(i);
}

SystemParams with_sweep(const SystemParams& base, SweepField f, double value) noexcept {
  SystemParams p = base;
  switch (f) {
    case SweepField::kNone: break;
    case SweepField::kKappa: p.kappa = value; break;
    case SweepField::kGamma: p.gamma = value; break;
    case SweepField::kOmega: p.omega = value; break;
    case SweepField::kTheta: p.theta = value; break;
    case SweepField::kGainA: p.gain_a = value; break;
  }
  return p;
}

std::vector<std::string> preset_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 10; ++i) ids.push_back("fig" + std::to_string(i));
  return ids;
}

ScenarioConfig preset(std::string_view id) {
  ScenarioConfig c;
  if (id == "fig1") {
    c = make("fig1", params(1.0, 0.0, 0.0, 10.0), SweepField::kGamma, kGammaSweep);
  } else if (id == "fig2") {
    c = make("fig2", params(1.0, 0.0, 0.25, 10.0), SweepField::kGamma, kGammaSweep);
  } else if (id == "fig3") {
    c = make("fig3", params(0.75, 0.0, 0.0, 10.0), SweepField::kTheta, kThetaSweep);
  } else if (id == "fig4") {
    c = make("fig4", params(0.75, 0.0, 0.25, 10.0), SweepField::kGainA, kGainSweep);
  } else if (id == "fig5") {
    c = make("fig5", params(1.0, 10.0, 0.0, 10.0), SweepField::kGamma, kGammaSweep);
  } else if (id == "fig6") {
    c = make("fig6", params(1.0, 10.0, 0.25, 10.0), SweepField::kGamma, kGammaSweep);
  } else if (id == "fig7") {
    c = make("fig7", params(1.0, 10.0, 0.0, 10.0), SweepField::kTheta, kThetaSweep);
  } else if (id == "fig8") {
    c = make("fig8", params(0.75, 10.0, 0.25, 10.0), SweepField::kGainA, kGainSweep);
  } else if (id == "fig9" || id == "fig10") {
    const double omega = id == "fig9" ? 0.0 : 10.0;
    c = make(std::string(id), params(0.75, omega, 0.25, 25.0), SweepField::kNone, {});
    c.outputs = {Output::kVS, Output::kHalfDgcz};
  } else {
    throw Error(ErrorCode::kUnknownPreset, std::string(id));
  }
  return c;
}

void validate_config(const ScenarioConfig& cfg) {
  const TimeGrid& g = cfg.t_grid;
  if (!std::isfinite(g.t_start) || !std::isfinite(g.t_end)) invalid("time grid must be finite");
  if (g.t_start < 0.0) invalid("t_start must be >= 0");
  if (!(g.t_end > g.t_start) || !(g.t_end > 0.0)) invalid("t_end must exceed t_start and 0");
  if (g.n_points < 2) invalid("n_points must be >= 2");
  if (cfg.outputs.empty()) invalid("no outputs selected");
  if (cfg.sweep == SweepField::kNone) {
    if (!cfg.sweep_values.empty()) invalid("sweep values given without a sweep field");
  } else if (cfg.sweep_values.empty()) {
    invalid("sweep over " + std::string(to_string(cfg.sweep)) + " has no values");
  }
  for (double v : effective_sweep(cfg)) {
    validate_params(with_sweep(cfg.params, cfg.sweep, v));
  }
}

std::vector<double> growing_sweep_values(const ScenarioConfig& cfg) {
  std::vector<double> out;
  for (double v : effective_sweep(cfg)) {
    const SpectralData s = spectral_data(with_sweep(cfg.params, cfg.sweep, v), Stability::kAllowGrowth);
    if (!s.decaying()) out.push_back(v);
  }
  return out;
}

ResultTable run(const ScenarioConfig& cfg) {
  validate_config(cfg);
  ResultTable table;
  table.header = {"sweep_param", "sweep_value", "t"};
  for (Output o : cfg.outputs) table.header.emplace_back(to_string(o));

  const std::vector<double> sweep = effective_sweep(cfg);
  const std::size_t n_t = cfg.t_grid.n_points;
  table.rows.resize(sweep.size() * n_t);

  for (std::size_t si = 0; si < sweep.size(); ++si) {
    const MomentEvaluator eval(with_sweep(cfg.params, cfg.sweep, sweep[si]),
                               Stability::kAllowGrowth);
    const std::string regime(to_string(eval.spectral().regime));
    const std::string sweep_name(to_string(cfg.sweep));
    detail::parallel_for(n_t, [&](std::size_t ti) {
      const SecondMoments sm = eval.at(cfg.t_grid.at(ti));
      const EntanglementReport r = report(sm);
      auto& row = table.rows[si * n_t + ti];
      row.reserve(3 + cfg.outputs.size());
      row.emplace_back(sweep_name);
      if (cfg.sweep == SweepField::kNone) {
        row.emplace_back(std::string());
      } else {
        row.emplace_back(sweep[si]);
      }
      row.emplace_back(sm.t);
      for (Output o : cfg.outputs) {
        switch (o) {
          case Output::kVS: row.emplace_back(r.v_s); break;
          case Output::kEN: row.emplace_back(r.e_n); break;
          case Output::kDgcz: row.emplace_back(r.dgcz); break;
          case Output::kHalfDgcz: row.emplace_back(0.5 * r.dgcz); break;
          case Output::kHzG:
            if (r.hz_flag == HzFlag::kDivergent) {
              row.emplace_back(std::string("inf"));
            } else if (r.hz_flag == HzFlag::kUndefined) {
              row.emplace_back(std::string("nan-undefined"));
            } else {
              row.emplace_back(r.hz_g);
            }
            break;
          case Output::kNA: row.emplace_back(sm.n_a); break;
          case Output::kNB: row.emplace_back(sm.n_b); break;
          case Output::kCAB: row.emplace_back(sm.c_ab); break;
          case Output::kRegime: row.emplace_back(regime); break;
        }
      }
    });
  }
  return table;
}

ResultTable comparison_table(const std::vector<std::pair<std::string, ComparisonReport>>& reports) {
  ResultTable t;
  t.header = {"grid",        "component",   "max_rel_err", "tolerance",    "worst_kappa",
              "worst_gamma", "worst_omega", "worst_theta", "worst_gain_a", "worst_t",
              "pass"};
  for (const auto& [name, rep] : reports) {
    for (std::size_t c = 0; c < kMomentComponents.size(); ++c) {
      std::vector<ResultTable::Cell> row{name, std::string(kMomentComponents[c]),
                                         rep.max_rel_err[c], rep.tolerance};
      if (rep.grid.empty()) {
        for (int k = 0; k < 6; ++k) row.emplace_back(std::string());
      } else {
        const GridPoint& g = rep.grid[rep.worst_index[c]];
        for (double v : {g.params.kappa, g.params.gamma, g.params.omega, g.params.theta,
                         g.params.gain_a, g.t}) {
          row.emplace_back(v);
        }
      }
      row.emplace_back(std::string(rep.max_rel_err[c] <= rep.tolerance ? "true" : "false"));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

}  // namespace celent
