#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sagnac {

// Two-photon (quadrature) formalism primitives. Sidebands at offset frequency
// Omega from the carrier are described by (cosine, sine) quadrature pairs;
// linear optics acts on them as 2x2 complex matrices, one per frequency.

using Complex = std::complex<double>;
using QuadVector = Eigen::Vector2cd;     // (c, s) quadrature amplitude pair
using QuadTransfer = Eigen::Matrix2cd;   // field -> field transfer at one Omega
using ResponseVector = Eigen::Vector2cd; // output field per unit x/x_SQL

// Homodyne detection: readout quadrature angle and photodiode efficiency.
struct HomodyneReadout {
  double zeta = 0.0;     // radians; pi/2 reads the phase quadrature
  double eta_pd = 1.0;   // quantum efficiency in (0, 1]
};

// Single-sided spectral-density matrix of one input field; vacuum = identity.
struct InputSpectralDensity {
  Eigen::Matrix2d s = Eigen::Matrix2d::Identity();
  static InputSpectralDensity vacuum() { return {}; }
};

// Stationary excess noise of the carrier-port input, as multiples of vacuum in
// the cosine (intensity) and sine (phase) quadratures.
struct LaserNoiseSpec {
  double l_c = 1.0;
  double l_s = 1.0;
};

// One coherent input port: its transfer to the readout and its input state.
struct CoherentPort {
  QuadTransfer t;
  InputSpectralDensity s;
};

// Readout projection vector (cos zeta, sin zeta).
Eigen::Vector2d homodyne_vector(double zeta);

// Free-mass standard quantum limit amplitude spectral density,
// sqrt(2*hbar/(m_eff*Omega^2)), in m/sqrt(Hz). Throws DomainError for
// m_eff <= 0 or Omega == 0.
double sql_displacement(double m_eff, double omega);

// Contribution of one port to the readout spectral density (before the
// x_SQL^2/|H^T R|^2 normalization): H^T T S T^dag H, real and >= 0.
double port_psd_term(const Eigen::Vector2d& h, const QuadTransfer& t,
                     const Eigen::Matrix2d& s);

// Displacement-referred noise PSD in m^2/Hz:
//   x_sql^2 * [sum_j H^T T_j S_j T_j^dag H + sum_k H^T N_k N_k^dag H]
//           / |H^T R_signal|^2.
// Throws SignalNullError when the readout is blind to the signal.
double noise_psd(const Eigen::Vector2d& h,
                 const std::vector<CoherentPort>& coherent_ports,
                 const std::vector<QuadTransfer>& loss_ports,
                 const ResponseVector& r_signal, double x_sql);

}  // namespace sagnac
