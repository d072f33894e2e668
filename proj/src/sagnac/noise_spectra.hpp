#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sagnac/assembly.hpp"

namespace sagnac {

// Fixed port order used everywhere a budget is reported.
inline constexpr std::array<const char*, 10> k_port_names = {
    "i", "p", "n_ln", "n_rn", "n_le", "n_re", "m_i", "m_p", "m_o", "detection"};

// Displacement-referred PSD at one frequency, split by input port.
struct BudgetPoint {
  double total = 0.0;                      // m^2/Hz
  std::array<double, 10> per_port{};       // in k_port_names order
};

// General per-port evaluation: each port contributes
// x_SQL^2 * H^T T S T^dag H / |H^T R_minus|^2, with S = s_i for the dark-port
// input, diag(l_c, l_s) for the bright input, and vacuum for all loss ports.
// Detection loss (readout.eta_pd) is applied as a pre-detection attenuator.
// Throws SignalNullError when the readout is blind to the differential signal.
BudgetPoint psd_general(const ScatteringAtFrequency& scat,
                        const HomodyneReadout& readout,
                        const InputSpectralDensity& s_i,
                        const LaserNoiseSpec& laser, double m_eff);

// Convenience: assemble + psd_general at one frequency with the instrument's
// laser noise and a chosen homodyne angle.
BudgetPoint budget_point(const InterferometerSpec& spec, double omega, double zeta);
double total_psd(const InterferometerSpec& spec, double omega, double zeta);

// Closed-form total PSD of the balanced lossless speed-meter topology with
// coupling K_sag = 4*Theta*gamma/(gamma^2+Omega^2)^2:
//   (x_SQL^2/2) * [(K_sag - cot zeta)^2 + 1] / K_sag.
double kappa_sagnac(double theta, double gamma, double omega);
double psd_ideal_sagnac(double theta, double gamma, double omega, double zeta,
                        double m_eff);

// Closed-form total PSD with a splitting-ratio offset eta_bs and lossless
// arms. Theta is the per-direction normalized power at eta_bs = 0; the
// couplings are K_sym = 4*Theta*gamma/(gamma^2+Omega^2)^2 and
// K_asym = 4*Theta*gamma^3/(Omega^2*(gamma^2+Omega^2)^2):
//   (x_SQL^2/(2*K_sym)) * { w1*[(A - cot)^2 + 1] + w2*[l_c*(B - cot)^2 + l_s] }
// with A = (1+eta^2)*K_sym, B = (1+eta^2)*(K_sym+K_asym),
// w1 = ((1-eta^2)/(1+eta^2))^2, w2 = (2*eta/(1+eta^2))^2.
double psd_asym_bs_sagnac(double theta, double gamma, double eta_bs, double omega,
                          double zeta, double m_eff, double l_c = 1.0,
                          double l_s = 1.0);

// Position-meter yardstick with the same total intracavity power:
// K_MI = 2*Theta_total*gamma/(Omega^2*(gamma^2+Omega^2)) in the same
// closed-form shell.
double psd_michelson_yardstick(double theta_total, double gamma, double omega,
                               double zeta, double m_eff);

// Unprojected 2x2 spectral density of the dark-port output field: the sum of
// T S T^dag over every input port of the given scattering set (S = s_i for the
// dark-port input, diag(l_c, l_s) for the bright input, vacuum otherwise).
// Uses the scattering set as given; detection loss is included only if the set
// already carries a detection port.
QuadTransfer output_spectral_density(const ScatteringAtFrequency& scat,
                                     const InputSpectralDensity& s_i,
                                     const LaserNoiseSpec& laser);

// Per-frequency homodyne angle minimizing the given PSD(zeta); golden-section
// search on (0, pi) clamped 1e-9 away from the endpoints, tolerance 1e-6 rad.
double optimize_homodyne(const std::function<double(double)>& psd_of_zeta);

// Least-squares slope of log10(y) against log10(f).
double log_log_slope(const std::vector<double>& f, const std::vector<double>& y);

// Slope of the ASD over [f_lo, f_hi] given a full budget grid.
double slope_over_band(const std::vector<double>& freqs_hz,
                       const std::vector<double>& asd, double f_lo, double f_hi);

// Converts a laser relative-intensity-noise ASD (1/sqrt(Hz)) into the
// intensity-quadrature excess level: l_c = RIN^2 * P_in / (2*h*nu).
double rin_to_intensity_level(double rin_asd, double p_in_w, double lambda0_m);
double intensity_level_to_rin(double l_c, double p_in_w, double lambda0_m);

// A full budget over a frequency grid.
struct NoiseBudget {
  std::vector<double> frequencies_hz;
  std::vector<double> total_psd;                       // m^2/Hz
  std::vector<double> asd;                             // m/sqrt(Hz)
  std::vector<double> sql_asd;                         // m/sqrt(Hz)
  std::vector<std::array<double, 10>> per_port;        // k_port_names order
  std::vector<double> zeta_used;                       // radians, per frequency
};

struct BudgetOptions {
  bool optimize_zeta = false;  // per-frequency optimal readout instead of fixed
};

NoiseBudget evaluate_budget(const InterferometerSpec& spec,
                            const std::vector<double>& freqs_hz,
                            const BudgetOptions& options = {});

}  // namespace sagnac
