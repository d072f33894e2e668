#pragma once

#include <string>
#include <vector>

#include "sagnac/config.hpp"
#include "sagnac/noise_spectra.hpp"

namespace sagnac {

// Sample positions for a grid request (log- or linearly spaced, endpoints
// included exactly).
std::vector<double> make_frequency_grid(const GridSpec& grid);

// Budget CSV in the pinned schema:
//   frequency_hz,total_asd_m_rthz,sql_asd_m_rthz,<port>_psd_m2hz...
// with one PSD column per port in k_port_names order, 17 significant digits,
// comma separator, LF line endings.
std::string budget_csv(const NoiseBudget& budget);

// Analytic reference curves on the scenario grid, evaluated from the base
// spec stripped of imperfections (no arm loss or detuning, balanced lossless
// splitter, unit photodiode efficiency, vacuum laser) at the base readout
// angle.
struct ReferenceCurves {
  std::vector<double> frequencies_hz;
  std::vector<double> sql_asd;        // m/sqrt(Hz)
  std::vector<double> sagnac_asd;     // ideal speed-meter closed form
  std::vector<double> michelson_asd;  // position-meter yardstick, same power
  bool has_sql = false;
  bool has_sagnac = false;
  bool has_michelson = false;
};

ReferenceCurves reference_curves(const ScenarioConfig& config,
                                 const std::vector<double>& freqs_hz);

std::string reference_csv(const ReferenceCurves& curves);

// One completed sweep entry.
struct ScenarioResult {
  std::string label;  // "arm_loss_ppm=25" etc.; "base" when no sweep
  double sweep_value = 0.0;
  InterferometerSpec spec;
  NoiseBudget budget;
  std::string csv_path;
  double asd_slope = 0.0;  // log-log fit over the lowest half-decade; NaN if
                           // the band holds fewer than two grid points
};

struct ScenarioOutput {
  std::vector<ScenarioResult> results;
  std::string reference_csv_path;  // empty when no references requested
  std::string summary_path;        // JSON sidecar with the slope-fit table
};

// Full run: evaluates every sweep value on the grid and writes one CSV per
// value, optional reference curves, and a summary sidecar. Identical configs
// produce byte-identical files. Engine errors are rethrown annotated with the
// sweep label (and the frequency, added by the evaluator).
ScenarioOutput run_scenario(const ScenarioConfig& config);

}  // namespace sagnac
