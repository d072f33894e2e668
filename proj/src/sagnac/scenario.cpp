#include "sagnac/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <utility>

#include <json.hpp>

#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"

namespace sagnac {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Filesystem-safe token for a sweep value: 0.001 -> "0p001", -5 -> "m5".
std::string value_token(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  std::string token;
  for (char c : buf) {
    if (c == '\0') break;
    if (c == '.') {
      token += 'p';
    } else if (c == '-') {
      token += 'm';
    } else if (c != '+') {
      token += c;
    }
  }
  return token;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(path + ": cannot open output file for writing");
  out << content;
  out.flush();
  if (!out) throw ConfigError(path + ": write failed");
}

// Base spec with every imperfection removed; used for the analytic references.
InterferometerSpec stripped_ideal(const InterferometerSpec& base) {
  InterferometerSpec s = base;
  s.bs.eta_bs = 0.0;
  s.bs.epsilon_bs = 0.0;
  s.north.t_loss = 0.0;
  s.east.t_loss = 0.0;
  s.north.delta = 0.0;
  s.east.delta = 0.0;
  s.readout.eta_pd = 1.0;
  s.laser = LaserNoiseSpec{};
  return s;
}

}  // namespace

std::vector<double> make_frequency_grid(const GridSpec& grid) {
  const int n = grid.points;
  std::vector<double> freqs(static_cast<size_t>(n));
  if (grid.log_spaced) {
    const double ratio = grid.f_max_hz / grid.f_min_hz;
    for (int i = 0; i < n; ++i) {
      freqs[static_cast<size_t>(i)] =
          grid.f_min_hz *
          std::pow(ratio, static_cast<double>(i) / static_cast<double>(n - 1));
    }
  } else {
    const double step = (grid.f_max_hz - grid.f_min_hz) / (n - 1);
    for (int i = 0; i < n; ++i) {
      freqs[static_cast<size_t>(i)] = grid.f_min_hz + step * i;
    }
  }
  freqs.front() = grid.f_min_hz;
  freqs.back() = grid.f_max_hz;
  return freqs;
}

std::string budget_csv(const NoiseBudget& budget) {
  std::string out = "frequency_hz,total_asd_m_rthz,sql_asd_m_rthz";
  for (const char* port : k_port_names) {
    out += ',';
    out += port;
    out += "_psd_m2hz";
  }
  out += '\n';
  for (size_t i = 0; i < budget.frequencies_hz.size(); ++i) {
    out += fmt17(budget.frequencies_hz[i]);
    out += ',';
    out += fmt17(budget.asd[i]);
    out += ',';
    out += fmt17(budget.sql_asd[i]);
    for (double v : budget.per_port[i]) {
      out += ',';
      out += fmt17(v);
    }
    out += '\n';
  }
  return out;
}

ReferenceCurves reference_curves(const ScenarioConfig& config,
                                 const std::vector<double>& freqs_hz) {
  ReferenceCurves rc;
  rc.frequencies_hz = freqs_hz;
  rc.has_sql = config.reference_sql;
  rc.has_sagnac = config.reference_sagnac;
  rc.has_michelson = config.reference_michelson;

  const InterferometerSpec ideal = stripped_ideal(config.base);
  const double omega0 = ideal.omega0();
  const double m_eff = ideal.m_eff();
  const double zeta = ideal.readout.zeta;
  // Balanced lossless split; each direction resonates with the full buildup.
  const double p_dir = power_buildup(ideal.north) * ideal.p_in_w / 2.0;
  const double theta = make_drive(ideal.north, p_dir, omega0).theta;
  const double theta_total = make_drive(ideal.north, 2.0 * p_dir, omega0).theta;
  const double gamma = ideal.north.gamma();

  const size_t n = freqs_hz.size();
  if (rc.has_sql) rc.sql_asd.resize(n);
  if (rc.has_sagnac) rc.sagnac_asd.resize(n);
  if (rc.has_michelson) rc.michelson_asd.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const double omega = 2.0 * k_pi * freqs_hz[i];
    if (rc.has_sql) rc.sql_asd[i] = sql_displacement(m_eff, omega);
    if (rc.has_sagnac) {
      rc.sagnac_asd[i] =
          std::sqrt(psd_ideal_sagnac(theta, gamma, omega, zeta, m_eff));
    }
    if (rc.has_michelson) {
      rc.michelson_asd[i] = std::sqrt(
          psd_michelson_yardstick(theta_total, gamma, omega, zeta, m_eff));
    }
  }
  return rc;
}

std::string reference_csv(const ReferenceCurves& curves) {
  std::string out = "frequency_hz";
  if (curves.has_sql) out += ",sql_asd_m_rthz";
  if (curves.has_sagnac) out += ",ideal_sagnac_asd_m_rthz";
  if (curves.has_michelson) out += ",ideal_michelson_asd_m_rthz";
  out += '\n';
  for (size_t i = 0; i < curves.frequencies_hz.size(); ++i) {
    out += fmt17(curves.frequencies_hz[i]);
    if (curves.has_sql) {
      out += ',';
      out += fmt17(curves.sql_asd[i]);
    }
    if (curves.has_sagnac) {
      out += ',';
      out += fmt17(curves.sagnac_asd[i]);
    }
    if (curves.has_michelson) {
      out += ',';
      out += fmt17(curves.michelson_asd[i]);
    }
    out += '\n';
  }
  return out;
}

ScenarioOutput run_scenario(const ScenarioConfig& config) {
  validate_scenario(config);
  const std::vector<double> freqs = make_frequency_grid(config.grid);
  BudgetOptions options;
  options.optimize_zeta = config.zeta_optimal;

  // Lowest half-decade of the grid, for the summary slope fits.
  const double band_lo = freqs.front();
  const double band_hi = band_lo * std::sqrt(10.0);

  struct Entry {
    std::string label;
    double value;
    std::string csv_path;
  };
  std::vector<Entry> entries;
  if (config.sweep.active()) {
    const std::string param = sweep_parameter_name(config.sweep.parameter);
    for (double v : config.sweep.values) {
      entries.push_back({param + "=" + value_token(v), v,
                         config.output_prefix + "_" + param + "_" +
                             value_token(v) + ".csv"});
    }
  } else {
    entries.push_back({"base", 0.0, config.output_prefix + ".csv"});
  }

  ScenarioOutput out;
  for (const Entry& entry : entries) {
    ScenarioResult result;
    result.label = entry.label;
    result.sweep_value = entry.value;
    result.csv_path = entry.csv_path;
    result.spec = config.sweep.active()
                      ? apply_sweep_value(config.base, config.sweep.parameter,
                                          entry.value)
                      : config.base;
    const std::string tag = "sweep " + entry.label + ": ";
    try {
      result.budget = evaluate_budget(result.spec, freqs, options);
    } catch (const SingularityError& e) {
      throw SingularityError(tag + e.what());
    } catch (const SignalNullError& e) {
      throw SignalNullError(tag + e.what());
    } catch (const DomainError& e) {
      throw DomainError(tag + e.what());
    }
    result.asd_slope = std::numeric_limits<double>::quiet_NaN();
    try {
      result.asd_slope =
          slope_over_band(result.budget.frequencies_hz, result.budget.asd,
                          band_lo, band_hi);
    } catch (const DomainError&) {
      // Fewer than two grid points in the band; slope omitted from summary.
    }
    write_file(result.csv_path, budget_csv(result.budget));
    out.results.push_back(std::move(result));
  }

  if (config.reference_sql || config.reference_sagnac ||
      config.reference_michelson) {
    const ReferenceCurves rc = reference_curves(config, freqs);
    out.reference_csv_path = config.output_prefix + "_references.csv";
    write_file(out.reference_csv_path, reference_csv(rc));
  }

  nlohmann::json summary;
  summary["preset"] = config.preset_name;
  summary["zeta_mode"] = config.zeta_optimal ? "optimal" : "fixed";
  if (!config.zeta_optimal) summary["zeta_rad"] = config.base.readout.zeta;
  summary["grid"] = {{"f_min_hz", config.grid.f_min_hz},
                     {"f_max_hz", config.grid.f_max_hz},
                     {"points", config.grid.points},
                     {"log", config.grid.log_spaced}};
  summary["slope_fit_band_hz"] = {band_lo, band_hi};
  summary["sweep_parameter"] = sweep_parameter_name(config.sweep.parameter);
  nlohmann::json rows = nlohmann::json::array();
  for (const ScenarioResult& r : out.results) {
    nlohmann::json row;
    row["label"] = r.label;
    row["value"] = r.sweep_value;
    row["csv"] = r.csv_path;
    if (std::isnan(r.asd_slope)) {
      row["asd_slope_lowest_half_decade"] = nullptr;
    } else {
      row["asd_slope_lowest_half_decade"] = r.asd_slope;
    }
    rows.push_back(row);
  }
  summary["entries"] = rows;
  if (!out.reference_csv_path.empty()) {
    summary["references_csv"] = out.reference_csv_path;
  }
  out.summary_path = config.output_prefix + "_summary.json";
  write_file(out.summary_path, summary.dump(2) + "\n");
  return out;
}

}  // namespace sagnac
