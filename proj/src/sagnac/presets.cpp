#include "sagnac/presets.hpp"

#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"

namespace sagnac {

InterferometerSpec glasgow_preset() {
  InterferometerSpec s;
  s.p_in_w = 1.7;
  s.lambda0_m = 1064e-9;
  s.bs.eta_bs = 0.0;
  s.bs.epsilon_bs = 1000e-6;
  s.north = {'N', 2.83 / 2.0, 700e-6, 0.0, 0.0, 0.85e-3, 0.1};
  s.east = {'E', 2.83 / 2.0, 700e-6, 0.0, 0.0, 0.85e-3, 0.1};
  s.readout.zeta = k_pi / 2.0;
  s.readout.eta_pd = 0.95;
  return s;
}

InterferometerSpec et_lf_preset() {
  InterferometerSpec s;
  s.p_in_w = 45.73;
  s.lambda0_m = 1064e-9;
  s.bs.eta_bs = 0.0;
  s.bs.epsilon_bs = 1000e-6;
  s.north = {'N', 2e4 / 2.0, 10000e-6, 0.0, 0.0, 211.0, 211.0};
  s.east = {'E', 2e4 / 2.0, 10000e-6, 0.0, 0.0, 211.0, 211.0};
  s.readout.zeta = k_pi / 2.0;
  s.readout.eta_pd = 0.95;
  return s;
}

InterferometerSpec preset_by_name(const std::string& name) {
  if (name == "glasgow") return glasgow_preset();
  if (name == "et-lf") return et_lf_preset();
  throw ConfigError("unknown preset '" + name + "' (expected \"glasgow\" or \"et-lf\")");
}

}  // namespace sagnac
