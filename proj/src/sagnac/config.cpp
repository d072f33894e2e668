#include "sagnac/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "sagnac/errors.hpp"
#include "sagnac/noise_spectra.hpp"
#include "sagnac/presets.hpp"

namespace sagnac {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

std::string num_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  const std::size_t stop = byte > 0 ? byte - 1 : 0;
  for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void require_known_keys(const json& obj, const std::string& where,
                        const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      fail(where + ": unknown key \"" + it.key() + "\"");
    }
  }
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field + ": expected a number");
  return v.get<double>();
}

bool as_bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) fail(field + ": expected true or false");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field + ": expected a string");
  return v.get<std::string>();
}

double positive(double v, const std::string& field) {
  if (!(v > 0.0)) fail(field + ": must be > 0");
  return v;
}

double non_negative(double v, const std::string& field) {
  if (!(v >= 0.0)) fail(field + ": must be >= 0");
  return v;
}

}  // namespace

std::string sweep_parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::none:
      return "none";
    case SweepParameter::arm_loss_ppm:
      return "arm_loss_ppm";
    case SweepParameter::eta_bs:
      return "eta_bs";
    case SweepParameter::delta_t_itm_ppm:
      return "delta_T_itm_ppm";
    case SweepParameter::laser_noise_level:
      return "laser_noise_level";
  }
  return "none";
}

SweepParameter sweep_parameter_from_name(const std::string& name) {
  if (name == "arm_loss_ppm") return SweepParameter::arm_loss_ppm;
  if (name == "eta_bs") return SweepParameter::eta_bs;
  if (name == "delta_T_itm_ppm") return SweepParameter::delta_t_itm_ppm;
  if (name == "laser_noise_level") return SweepParameter::laser_noise_level;
  fail("sweep.parameter: unknown name \"" + name +
       "\" (expected arm_loss_ppm, eta_bs, delta_T_itm_ppm, or "
       "laser_noise_level)");
}

GridSpec default_grid_for_preset(const std::string& preset_name) {
  GridSpec g;
  if (preset_name == "et-lf") {
    g.f_min_hz = 1.0;
    g.f_max_hz = 1.0e3;
  } else {
    g.f_min_hz = 10.0;
    g.f_max_hz = 1.0e5;
  }
  g.points = 600;
  g.log_spaced = true;
  return g;
}

ScenarioConfig scenario_from_preset(const std::string& preset_name) {
  ScenarioConfig cfg;
  cfg.base = preset_by_name(preset_name);
  cfg.preset_name = preset_name;
  cfg.grid = default_grid_for_preset(preset_name);
  return cfg;
}

ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    fail(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
         ": " + e.what());
  }
  if (!doc.is_object()) fail(origin + ": top level must be a JSON object");

  static const std::set<std::string> top_keys = {
      "preset",       "p_in_w",      "lambda0_nm",  "round_trip_m",
      "m_itm_kg",     "m_etm_kg",    "t_itm_ppm",   "arm_loss_ppm",
      "eta_bs",       "bs_loss_ppm", "eta_pd",      "delta_rad_s",
      "laser",        "grid",        "sweep",       "zeta_rad",
      "zeta_optimal", "outputs",     "include_references"};
  require_known_keys(doc, "config", top_keys);

  std::string preset = "glasgow";
  if (doc.contains("preset")) preset = as_string(doc["preset"], "preset");
  ScenarioConfig cfg = scenario_from_preset(preset);

  if (doc.contains("p_in_w")) {
    cfg.base.p_in_w = positive(as_number(doc["p_in_w"], "p_in_w"), "p_in_w");
  }
  if (doc.contains("lambda0_nm")) {
    cfg.base.lambda0_m =
        positive(as_number(doc["lambda0_nm"], "lambda0_nm"), "lambda0_nm") *
        1e-9;
  }
  if (doc.contains("round_trip_m")) {
    const double half =
        positive(as_number(doc["round_trip_m"], "round_trip_m"),
                 "round_trip_m") /
        2.0;
    cfg.base.north.length_m = half;
    cfg.base.east.length_m = half;
  }
  if (doc.contains("m_itm_kg")) {
    const double m =
        positive(as_number(doc["m_itm_kg"], "m_itm_kg"), "m_itm_kg");
    cfg.base.north.m_itm_kg = m;
    cfg.base.east.m_itm_kg = m;
  }
  if (doc.contains("m_etm_kg")) {
    const double m =
        positive(as_number(doc["m_etm_kg"], "m_etm_kg"), "m_etm_kg");
    cfg.base.north.m_etm_kg = m;
    cfg.base.east.m_etm_kg = m;
  }
  if (doc.contains("t_itm_ppm")) {
    const double t =
        positive(as_number(doc["t_itm_ppm"], "t_itm_ppm"), "t_itm_ppm") * 1e-6;
    cfg.base.north.t_itm = t;
    cfg.base.east.t_itm = t;
  }
  if (doc.contains("arm_loss_ppm")) {
    const double t =
        non_negative(as_number(doc["arm_loss_ppm"], "arm_loss_ppm"),
                     "arm_loss_ppm") *
        1e-6;
    cfg.base.north.t_loss = t;
    cfg.base.east.t_loss = t;
  }
  if (doc.contains("eta_bs")) {
    cfg.base.bs.eta_bs = as_number(doc["eta_bs"], "eta_bs");
  }
  if (doc.contains("bs_loss_ppm")) {
    cfg.base.bs.epsilon_bs =
        non_negative(as_number(doc["bs_loss_ppm"], "bs_loss_ppm"),
                     "bs_loss_ppm") *
        1e-6;
  }
  if (doc.contains("eta_pd")) {
    cfg.base.readout.eta_pd = as_number(doc["eta_pd"], "eta_pd");
  }
  if (doc.contains("delta_rad_s")) {
    const double d = as_number(doc["delta_rad_s"], "delta_rad_s");
    cfg.base.north.delta = d;
    cfg.base.east.delta = d;
  }

  if (doc.contains("laser")) {
    const json& l = doc["laser"];
    if (!l.is_object()) fail("laser: expected an object");
    require_known_keys(l, "laser", {"l_c", "l_s", "rin_asd"});
    if (l.contains("rin_asd")) {
      if (l.contains("l_c") || l.contains("l_s")) {
        fail("laser.rin_asd: cannot be combined with laser.l_c / laser.l_s");
      }
      const double rin =
          positive(as_number(l["rin_asd"], "laser.rin_asd"), "laser.rin_asd");
      const double level =
          rin_to_intensity_level(rin, cfg.base.p_in_w, cfg.base.lambda0_m);
      if (level < 1.0) {
        fail("laser.rin_asd: implied intensity level " + num_str(level) +
             " is below the vacuum floor of 1");
      }
      cfg.base.laser.l_c = level;
      cfg.base.laser.l_s = 1.0;
    } else {
      if (l.contains("l_c")) {
        cfg.base.laser.l_c = as_number(l["l_c"], "laser.l_c");
      }
      if (l.contains("l_s")) {
        cfg.base.laser.l_s = as_number(l["l_s"], "laser.l_s");
      }
    }
  }

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) fail("grid: expected an object");
    require_known_keys(g, "grid", {"f_min_hz", "f_max_hz", "points", "log"});
    if (g.contains("f_min_hz")) {
      cfg.grid.f_min_hz = as_number(g["f_min_hz"], "grid.f_min_hz");
    }
    if (g.contains("f_max_hz")) {
      cfg.grid.f_max_hz = as_number(g["f_max_hz"], "grid.f_max_hz");
    }
    if (g.contains("points")) {
      if (!g["points"].is_number_integer()) {
        fail("grid.points: expected an integer");
      }
      cfg.grid.points = g["points"].get<int>();
    }
    if (g.contains("log")) {
      cfg.grid.log_spaced = as_bool(g["log"], "grid.log");
    }
  }

  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    if (!s.is_object()) fail("sweep: expected an object");
    require_known_keys(s, "sweep", {"parameter", "values"});
    if (!s.contains("parameter")) fail("sweep.parameter: required");
    if (!s.contains("values")) fail("sweep.values: required");
    cfg.sweep.parameter =
        sweep_parameter_from_name(as_string(s["parameter"], "sweep.parameter"));
    const json& vals = s["values"];
    if (!vals.is_array() || vals.empty()) {
      fail("sweep.values: expected a non-empty array of numbers");
    }
    for (const json& v : vals) {
      cfg.sweep.values.push_back(as_number(v, "sweep.values"));
    }
  }

  bool zeta_optimal = false;
  if (doc.contains("zeta_optimal")) {
    zeta_optimal = as_bool(doc["zeta_optimal"], "zeta_optimal");
  }
  if (doc.contains("zeta_rad")) {
    if (zeta_optimal) {
      fail("zeta_rad: cannot be combined with zeta_optimal = true");
    }
    cfg.base.readout.zeta = as_number(doc["zeta_rad"], "zeta_rad");
  }
  cfg.zeta_optimal = zeta_optimal;

  if (doc.contains("outputs")) {
    const json& o = doc["outputs"];
    if (!o.is_object()) fail("outputs: expected an object");
    require_known_keys(o, "outputs", {"prefix"});
    if (o.contains("prefix")) {
      cfg.output_prefix = as_string(o["prefix"], "outputs.prefix");
      if (cfg.output_prefix.empty()) fail("outputs.prefix: must be non-empty");
    }
  }

  if (doc.contains("include_references")) {
    const json& r = doc["include_references"];
    if (!r.is_array()) fail("include_references: expected an array of strings");
    for (const json& v : r) {
      const std::string name = as_string(v, "include_references");
      if (name == "sql") {
        cfg.reference_sql = true;
      } else if (name == "sagnac") {
        cfg.reference_sagnac = true;
      } else if (name == "michelson") {
        cfg.reference_michelson = true;
      } else {
        fail("include_references: unknown curve \"" + name +
             "\" (expected sql, sagnac, michelson)");
      }
    }
  }

  validate_scenario(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path + ": cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

void validate_scenario(const ScenarioConfig& config) {
  const GridSpec& g = config.grid;
  if (!(g.f_min_hz > 0.0)) fail("grid.f_min_hz: must be > 0");
  if (!(g.f_min_hz < g.f_max_hz)) {
    fail("grid.f_max_hz: must exceed grid.f_min_hz");
  }
  if (g.points < 2) fail("grid.points: must be >= 2");

  try {
    config.base.validate();
  } catch (const DomainError& e) {
    fail(std::string("invalid instrument parameters: ") + e.what());
  }

  if (!(std::abs(config.base.bs.eta_bs) < 0.2)) {
    fail("eta_bs: must satisfy |eta_bs| < 0.2");
  }
  const double t_itm_min =
      std::min(config.base.north.t_itm, config.base.east.t_itm);
  if (!(config.base.north.t_loss < 10.0 * t_itm_min) ||
      !(config.base.east.t_loss < 10.0 * t_itm_min)) {
    fail("arm_loss_ppm: losses must stay below 10x T_itm");
  }
  if (std::abs(std::sin(config.base.readout.zeta)) < 1e-12) {
    fail("zeta_rad: readout angle must not be a multiple of pi");
  }

  for (double v : config.sweep.values) {
    switch (config.sweep.parameter) {
      case SweepParameter::arm_loss_ppm:
        if (!(v >= 0.0)) {
          fail("sweep.values: arm_loss_ppm value " + num_str(v) +
               " must be >= 0");
        }
        if (!(v * 1e-6 < 10.0 * t_itm_min)) {
          fail("sweep.values: arm loss " + num_str(v) +
               " ppm exceeds 10x T_itm");
        }
        break;
      case SweepParameter::eta_bs:
        if (!(std::abs(v) < 0.2)) {
          fail("sweep.values: eta_bs value " + num_str(v) +
               " must satisfy |eta_bs| < 0.2");
        }
        break;
      case SweepParameter::delta_t_itm_ppm:
        if (!(config.base.north.t_itm + 0.5 * v * 1e-6 > 0.0) ||
            !(config.base.east.t_itm - 0.5 * v * 1e-6 > 0.0)) {
          fail("sweep.values: delta_T_itm_ppm value " + num_str(v) +
               " leaves a non-positive T_itm");
        }
        break;
      case SweepParameter::laser_noise_level:
        if (!(v >= 1.0)) {
          fail("sweep.values: laser_noise_level value " + num_str(v) +
               " must be >= 1 (vacuum floor)");
        }
        break;
      case SweepParameter::none:
        break;
    }
  }
}

InterferometerSpec apply_sweep_value(const InterferometerSpec& base,
                                     SweepParameter parameter, double value) {
  InterferometerSpec spec = base;
  switch (parameter) {
    case SweepParameter::none:
      break;
    case SweepParameter::arm_loss_ppm:
      spec.north.t_loss = value * 1e-6;
      spec.east.t_loss = value * 1e-6;
      break;
    case SweepParameter::eta_bs:
      spec.bs.eta_bs = value;
      break;
    case SweepParameter::delta_t_itm_ppm:
      spec.north.t_itm = base.north.t_itm + 0.5 * value * 1e-6;
      spec.east.t_itm = base.east.t_itm - 0.5 * value * 1e-6;
      break;
    case SweepParameter::laser_noise_level:
      spec.laser.l_c = value;
      spec.laser.l_s = value;
      break;
  }
  return spec;
}

}  // namespace sagnac
