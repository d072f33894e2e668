#pragma once

#include "sagnac/arm_cavity.hpp"
#include "sagnac/beamsplitter.hpp"
#include "sagnac/two_photon.hpp"

namespace sagnac {

// Complete instrument description.
struct InterferometerSpec {
  double p_in_w = 0.0;      // carrier power incident on the beamsplitter
  double lambda0_m = 0.0;   // carrier wavelength
  BeamSplitterSpec bs;
  ArmCavitySpec north;
  ArmCavitySpec east;
  HomodyneReadout readout;
  LaserNoiseSpec laser;

  double omega0() const;    // carrier angular frequency 2*pi*c/lambda0
  // Effective test mass for the SQL normalization: mean of the two arms'
  // mu_arm/2 values.
  double m_eff() const;
  double x_sql(double omega) const;
  void validate() const;    // throws DomainError
};

// Arm-average and arm-difference cavity parameters.
struct DerivedArmParams {
  double gamma_arm;       // mean total half-bandwidth, rad/s
  double delta_gamma;     // north minus east half-bandwidth
  double epsilon_arm;     // mean fractional round-trip loss T_loss/(T_itm+T_loss)
  double delta_epsilon;   // north minus east loss fraction
};

DerivedArmParams derived_params(const InterferometerSpec& spec);

// Circulating carrier power of each beam direction in each arm (W).
// First-pass beams see the resonant buildup 4*T_itm/(T_itm+T_loss)^2 of their
// arm; second-pass beams are attenuated by the first arm's exact DC
// transmitted-power fraction ((gamma_itm-gamma_loss)/(gamma_itm+gamma_loss))^2.
struct CirculatingPowers {
  double rn;  // R beam in the north arm (first pass)
  double re;  // R beam in the east arm (second pass)
  double le;  // L beam in the east arm (first pass)
  double ln;  // L beam in the north arm (second pass)
};

CirculatingPowers circulating_powers(const InterferometerSpec& spec);

// Resonant power buildup of one arm.
double power_buildup(const ArmCavitySpec& arm);

// Exact DC transmitted-power fraction through one arm.
double dc_power_transmission(const ArmCavitySpec& arm);

// Per-beam optomechanical couplings at one Omega.
struct KappaVariants {
  double rn, re, le, ln;
};

KappaVariants kappa_variants(const InterferometerSpec& spec, double omega);

// Assembled instrument scattering at one Omega: transfers from every input
// port to the dark-port output, and the responses to the common (x_+) and
// differential (x_-) arm displacements, both normalized by x_SQL.
struct ScatteringAtFrequency {
  QuadTransfer t_i = QuadTransfer::Zero();   // dark-port input
  QuadTransfer t_p = QuadTransfer::Zero();   // bright (carrier) input
  QuadTransfer n_ln = QuadTransfer::Zero();  // arm loss vacua
  QuadTransfer n_rn = QuadTransfer::Zero();
  QuadTransfer n_le = QuadTransfer::Zero();
  QuadTransfer n_re = QuadTransfer::Zero();
  QuadTransfer m_i = QuadTransfer::Zero();   // beamsplitter loss vacua
  QuadTransfer m_p = QuadTransfer::Zero();
  QuadTransfer m_o = QuadTransfer::Zero();
  ResponseVector r_plus = ResponseVector::Zero();
  ResponseVector r_minus = ResponseVector::Zero();
  bool has_detection_port = false;
  QuadTransfer m_detection = QuadTransfer::Zero();
  double omega = 0.0;
};

// Full composition: circulating powers -> per-beam arm scattering -> two-arm
// chain -> beamsplitter junction. Pure per frequency. Detection loss is NOT
// applied here; see apply_detection_loss.
ScatteringAtFrequency assemble(const InterferometerSpec& spec, double omega);

// Models photodiode efficiency as a pre-detection attenuator: every transfer
// and response is scaled by sqrt(eta_pd) and a vacuum port of strength
// sqrt(1-eta_pd) is appended. eta_pd = 1 returns the set unchanged.
ScatteringAtFrequency apply_detection_loss(ScatteringAtFrequency scat,
                                           double eta_pd);

}  // namespace sagnac
