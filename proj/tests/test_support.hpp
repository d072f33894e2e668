#pragma once

#include <cmath>
#include <vector>

#include "sagnac/assembly.hpp"
#include "sagnac/presets.hpp"

namespace testutil {

// Shared tolerances, chosen to separate double-precision rounding from
// modelling error.
inline constexpr double k_exact = 1e-12;          // algebraic identities
inline constexpr double k_entrywise = 1e-10;      // assembly vs closed-form entries
inline constexpr double k_reduction = 1e-10;      // ideal PSD reduction
inline constexpr double k_reduction_asym = 1e-9;  // asym-splitter PSD reduction
inline constexpr double k_frozen = 1e-9;          // cross-implementation values
inline constexpr double k_vanish = 1e-14;         // coefficients that must cancel

inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Table-1 optics with an ideal splitter and perfect photodiode: the
// configuration the analytic closed forms describe.
inline sagnac::InterferometerSpec glasgow_bare() {
  sagnac::InterferometerSpec s = sagnac::glasgow_preset();
  s.bs.epsilon_bs = 0.0;
  s.readout.eta_pd = 1.0;
  return s;
}

inline sagnac::InterferometerSpec et_bare() {
  sagnac::InterferometerSpec s = sagnac::et_lf_preset();
  s.bs.epsilon_bs = 0.0;
  s.readout.eta_pd = 1.0;
  return s;
}

// Drive strength of one circulating direction of a bare symmetric spec.
inline double bare_theta(const sagnac::InterferometerSpec& s) {
  const double p_dir = sagnac::power_buildup(s.north) * s.p_in_w / 2.0;
  return sagnac::make_drive(s.north, p_dir, s.omega0()).theta;
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> f(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    f[static_cast<size_t>(i)] =
        lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  }
  return f;
}

}  // namespace testutil
