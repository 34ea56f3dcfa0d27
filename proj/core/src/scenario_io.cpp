#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "celent/error.hpp"
#include "celent/scenario.hpp"

namespace celent {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::kInvalidConfig, why); }

void write_cell(std::ostream& out, const ResultTable::Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) {
    out << format_double(*d);
    return;
  }
  const std::string& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char ch : s) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) invalid(what + " must be a number");
  return j.get<double>();
}

std::optional<SweepField> field_by_name(const std::string& name) {
  for (SweepField f : {SweepField::kKappa, SweepField::kGamma, SweepField::kOmega,
                       SweepField::kTheta, SweepField::kGainA}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

Output output_by_name(const std::string& name) {
  for (Output o : {Output::kVS, Output::kEN, Output::kDgcz, Output::kHalfDgcz, Output::kHzG,
                   Output::kNA, Output::kNB, Output::kCAB, Output::kRegime}) {
    if (name == to_string(o)) return o;
  }
  invalid("unknown output '" + name + "'");
}

void apply_params(const json& j, ScenarioConfig& cfg) {
  if (!j.is_object()) invalid("params must be an object");
  std::optional<SweepField> sweep;
  for (const auto& [key, value] : j.items()) {
    const auto field = field_by_name(key);
    if (!field) invalid("unknown parameter '" + key + "'");
    if (value.is_array()) {
      if (sweep) invalid("only one parameter may be swept");
      sweep = field;
      std::vector<double> values;
      for (const json& v : value) values.push_back(number(v, key));
      if (values.empty()) invalid("sweep over " + key + " is empty");
      cfg.sweep = *field;
      cfg.sweep_values = std::move(values);
    } else {
      cfg.params = with_sweep(cfg.params, *field, number(value, key));
      // a scalar for the field a preset sweeps pins it instead
      if (cfg.sweep == *field && sweep != field) {
        cfg.sweep = SweepField::kNone;
        cfg.sweep_values.clear();
      }
    }
  }
}

void apply_grid(const json& j, TimeGrid& g) {
  if (!j.is_object()) invalid("t_grid must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "t_start") {
      g.t_start = number(value, key);
    } else if (key == "t_end") {
      g.t_end = number(value, key);
    } else if (key == "n_points") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        invalid("n_points must be a non-negative integer");
      }
      g.n_points = value.get<std::size_t>();
    } else if (key == "spacing") {
      if (value != "linear") invalid("only linear spacing is supported");
    } else {
      invalid("unknown t_grid key '" + key + "'");
    }
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void emit_csv(const ResultTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    write_cell(out, table.header[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      write_cell(out, row[i]);
    }
    out << '\n';
  }
}

void emit_csv(const ResultTable& table, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot open " + destination.string());
  emit_csv(table, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed for " + destination.string());
}

ScenarioConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) invalid("config must be a JSON object");

  ScenarioConfig cfg;
  if (auto it = doc.find("preset"); it != doc.end()) {
    if (!it->is_string()) invalid("preset must be a string");
    cfg = preset(it->get<std::string>());
  }
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "preset") continue;
      if (key == "label") {
        if (!value.is_string()) invalid("label must be a string");
        cfg.label = value.get<std::string>();
      } else if (key == "params") {
        apply_params(value, cfg);
      } else if (key == "t_grid") {
        apply_grid(value, cfg.t_grid);
      } else if (key == "outputs") {
        if (!value.is_array()) invalid("outputs must be a list");
        cfg.outputs.clear();
        for (const json& o : value) {
          if (!o.is_string()) invalid("outputs must be strings");
          cfg.outputs.push_back(output_by_name(o.get<std::string>()));
        }
      } else {
        invalid("unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    invalid(e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace celent
