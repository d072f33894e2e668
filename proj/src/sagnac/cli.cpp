#include "sagnac/cli.hpp"

#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "sagnac/config.hpp"
#include "sagnac/errors.hpp"
#include "sagnac/scenario.hpp"

namespace sagnac {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": cannot parse \"" + s + "\" as a number");
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "Frequency-domain quantum-noise budget engine for Sagnac speed-meter "
      "interferometers with ring arm cavities"};
  app.name("sagnac_budget");

  std::string config_path;
  std::string preset_name;
  std::string sweep_arg;
  std::string out_prefix;
  std::string references_arg;
  double fmin = 0.0;
  double fmax = 0.0;
  double zeta = 0.0;
  int points = 0;
  bool zeta_opt = false;

  auto* opt_config =
      app.add_option("--config", config_path, "JSON scenario config file");
  auto* opt_preset =
      app.add_option("--preset", preset_name, "builtin preset: glasgow | et-lf");
  app.add_option("--sweep", sweep_arg,
                 "sweep as NAME=v1,v2,... (arm_loss_ppm, eta_bs, "
                 "delta_T_itm_ppm, laser_noise_level)");
  auto* opt_fmin = app.add_option("--fmin", fmin, "grid start, Hz");
  auto* opt_fmax = app.add_option("--fmax", fmax, "grid end, Hz");
  auto* opt_points = app.add_option("--points", points, "grid point count");
  auto* opt_zeta = app.add_option("--zeta", zeta, "homodyne angle, rad");
  auto* opt_zeta_opt = app.add_flag("--zeta-opt", zeta_opt,
                                    "per-frequency optimal homodyne angle");
  app.add_option("--out", out_prefix, "output file prefix");
  app.add_option("--references", references_arg,
                 "comma list of reference curves: sql,sagnac,michelson");

  std::vector<const char*> argv;
  argv.push_back("sagnac_budget");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return k_exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return k_exit_config_error;
  }

  try {
    if (*opt_config && *opt_preset) {
      throw ConfigError("--config and --preset are mutually exclusive");
    }
    ScenarioConfig cfg =
        *opt_config ? load_config(config_path)
                    : scenario_from_preset(*opt_preset ? preset_name
                                                       : "glasgow");

    if (!sweep_arg.empty()) {
      const auto eq = sweep_arg.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("--sweep: expected NAME=v1,v2,...");
      }
      cfg.sweep.parameter = sweep_parameter_from_name(sweep_arg.substr(0, eq));
      cfg.sweep.values.clear();
      for (const std::string& token : split(sweep_arg.substr(eq + 1), ',')) {
        if (token.empty()) throw ConfigError("--sweep: empty value in list");
        cfg.sweep.values.push_back(parse_double(token, "--sweep"));
      }
    }
    if (*opt_fmin) cfg.grid.f_min_hz = fmin;
    if (*opt_fmax) cfg.grid.f_max_hz = fmax;
    if (*opt_points) cfg.grid.points = points;
    if (*opt_zeta && *opt_zeta_opt) {
      throw ConfigError("--zeta and --zeta-opt are mutually exclusive");
    }
    if (*opt_zeta) {
      cfg.base.readout.zeta = zeta;
      cfg.zeta_optimal = false;
    }
    if (*opt_zeta_opt) cfg.zeta_optimal = true;
    if (!out_prefix.empty()) cfg.output_prefix = out_prefix;
    if (!references_arg.empty()) {
      for (const std::string& token : split(references_arg, ',')) {
        if (token == "sql") {
          cfg.reference_sql = true;
        } else if (token == "sagnac") {
          cfg.reference_sagnac = true;
        } else if (token == "michelson") {
          cfg.reference_michelson = true;
        } else {
          throw ConfigError("--references: unknown curve \"" + token +
                            "\" (expected sql, sagnac, michelson)");
        }
      }
    }

    validate_scenario(cfg);
    const ScenarioOutput result = run_scenario(cfg);

    out << "scenario: preset " << cfg.preset_name;
    if (cfg.sweep.active()) {
      out << ", sweep " << sweep_parameter_name(cfg.sweep.parameter);
    }
    out << ", " << cfg.grid.points << " points, " << cfg.grid.f_min_hz << "-"
        << cfg.grid.f_max_hz << " Hz, zeta "
        << (cfg.zeta_optimal ? std::string("optimal")
                             : std::to_string(cfg.base.readout.zeta))
        << "\n";
    out << "label,csv,asd_slope_lowest_half_decade\n";
    for (const ScenarioResult& r : result.results) {
      out << r.label << "," << r.csv_path << ",";
      if (std::isnan(r.asd_slope)) {
        out << "n/a";
      } else {
        out << r.asd_slope;
      }
      out << "\n";
    }
    if (!result.reference_csv_path.empty()) {
      out << "references," << result.reference_csv_path << ",\n";
    }
    out << "summary," << result.summary_path << ",\n";
    return k_exit_ok;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return k_exit_config_error;
  } catch (const SingularityError& e) {
    err << "numerical domain error: " << e.what() << "\n";
    return k_exit_domain_error;
  } catch (const SignalNullError& e) {
    err << "numerical domain error: " << e.what() << "\n";
    return k_exit_domain_error;
  } catch (const DomainError& e) {
    err << "numerical domain error: " << e.what() << "\n";
    return k_exit_domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return k_exit_domain_error;
  }
}

}  // namespace sagnac
