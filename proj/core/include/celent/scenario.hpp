#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "celent/oracle.hpp"
#include "celent/params.hpp"

namespace celent {

enum class SweepField { kNone, kKappa, kGamma, kOmega, kTheta, kGainA };

/// Column token: "none", "kappa", "gamma", "omega", "theta", "gain_a".
std::string_view to_string(SweepField f) noexcept;

/// Linear time axis including both end points.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 50.0;
  std::size_t n_points = 1000;

  double at(std::size_t i) const noexcept;
};

/// kHalfDgcz is half the variance sum, on the same scale as v_s.
enum class Output { kVS, kEN, kDgcz, kHalfDgcz, kHzG, kNA, kNB, kCAB, kRegime };

std::string_view to_string(Output o) noexcept;

std::vector<Output> default_outputs();

struct ScenarioConfig {
  std::string label;
  SystemParams params;
  SweepField sweep = SweepField::kNone;
  std::vector<double> sweep_values;
  TimeGrid t_grid;
  std::vector<Output> outputs = default_outputs();
};

/// Parameters of one sweep entry.
SystemParams with_sweep(const SystemParams& base, SweepField f, double value) noexcept;

/// fig1 ... fig10. Throws UnknownPreset.
ScenarioConfig preset(std::string_view id);
std::vector<std::string> preset_ids();

/// Throws InvalidConfig, or the params error of the first bad sweep entry.
void validate_config(const ScenarioConfig& cfg);

/// Sweep values whose slowest mode grows instead of decaying.
std::vector<double> growing_sweep_values(const ScenarioConfig& cfg);

struct ResultTable {
  using Cell = std::variant<double, std::string>;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Sweep-major, time-minor. Growing modes are evaluated, not rejected.
ResultTable run(const ScenarioConfig& cfg);

/// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);

void emit_csv(const ResultTable& table, std::ostream& out);
/// Throws IoFailure.
void emit_csv(const ResultTable& table, const std::filesystem::path& destination);

/// JSON document with optional keys "preset", "label", "params", "t_grid",
/// "outputs". One params field may hold a list, which becomes the sweep.
/// Throws InvalidConfig.
ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// One row per (grid, component).
ResultTable comparison_table(const std::vector<std::pair<std::string, ComparisonReport>>& reports);

}  // namespace celent
