#pragma once

#include <string>
#include <vector>

#include "sagnac/assembly.hpp"

namespace sagnac {

// Frequency grid request: `points` samples spanning [f_min, f_max], log- or
// linearly spaced.
struct GridSpec {
  double f_min_hz = 10.0;
  double f_max_hz = 1.0e5;
  int points = 600;
  bool log_spaced = true;
};

// Parameter a scenario sweeps over; each value produces one budget/CSV.
enum class SweepParameter {
  none,
  arm_loss_ppm,       // sets T_loss on both arms
  eta_bs,             // beamsplitter splitting-ratio offset
  delta_t_itm_ppm,    // splits T_itm: north = T + d/2, east = T - d/2
  laser_noise_level,  // sets L_c = L_s
};

std::string sweep_parameter_name(SweepParameter p);
SweepParameter sweep_parameter_from_name(const std::string& name);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::none;
  std::vector<double> values;

  bool active() const { return parameter != SweepParameter::none; }
};

// Everything a scenario run needs: instrument, grid, sweep, readout mode,
// output naming, and which analytic reference curves to emit alongside.
struct ScenarioConfig {
  InterferometerSpec base;
  std::string preset_name = "glasgow";
  GridSpec grid;
  SweepSpec sweep;
  bool zeta_optimal = false;  // per-frequency optimal readout angle
  std::string output_prefix = "budget";
  bool reference_sql = false;
  bool reference_sagnac = false;
  bool reference_michelson = false;
};

// Band matched to each preset's sensitivity range.
GridSpec default_grid_for_preset(const std::string& preset_name);

// Scenario seeded from a builtin preset with its default grid.
ScenarioConfig scenario_from_preset(const std::string& preset_name);

// Parses one JSON document into a validated ScenarioConfig. Unknown keys are
// rejected at every nesting level; syntax errors report line and column;
// validation errors name the offending field. `origin` labels the source in
// messages (a path or "<inline>"). Throws ConfigError.
ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& origin);

// Reads the file at `path` and parses it. Throws ConfigError.
ScenarioConfig load_config(const std::string& path);

// Cross-field validation: grid sanity, readout angle, physical parameters,
// sweep values within their validity ranges. Throws ConfigError.
void validate_scenario(const ScenarioConfig& config);

// One sweep value applied to a copy of the base instrument.
InterferometerSpec apply_sweep_value(const InterferometerSpec& base,
                                     SweepParameter parameter, double value);

}  // namespace sagnac
