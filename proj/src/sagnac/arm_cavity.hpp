#pragma once

#include "sagnac/two_photon.hpp"

namespace sagnac {

// One ring arm cavity traversed by two counter-propagating beams. The two end
// mirrors act as a single effective transmission/loss point; mirror-to-mirror
// length is half the ring round trip.
struct ArmCavitySpec {
  char label = 'N';      // 'N' or 'E'
  double length_m = 0.0; // mirror-to-mirror length (half round trip), m
  double t_itm = 0.0;    // input-mirror power transmissivity
  double t_loss = 0.0;   // round-trip power loss, modelled as end transmissivity
  double delta = 0.0;    // cavity detuning, rad/s
  double m_itm_kg = 0.0;
  double m_etm_kg = 0.0; // each of the two end mirrors

  double gamma_itm() const;   // c*T_itm/(4L), half-bandwidth from the input mirror
  double gamma_loss() const;  // c*T_loss/(4L)
  double gamma() const;       // total half-bandwidth
  double mu_arm() const;      // reduced mass 2*m_itm*m_etm/(m_itm + 2*m_etm)
  void validate() const;      // throws DomainError on invalid parameters
};

// Classical drive of one circulating beam direction.
struct BeamDrive {
  double p_c_w = 0.0;   // circulating power, W
  double theta = 0.0;   // normalized power 4*omega0*P_c/(mu_arm*c*L), s^-3
};

BeamDrive make_drive(const ArmCavitySpec& spec, double p_c_w, double omega0);

// Input-output matrices of one beam through the arm at one Omega.
// t_rp_cross / n_rp_cross are the radiation-pressure kicks this beam's inputs
// impart on the counter-propagating beam via the shared mirrors; they carry
// the geometric mean of the two beams' drive strengths (the mirror force
// scales with the kicking beam's carrier, the phase imprint with the kicked
// beam's carrier).
struct BeamScattering {
  QuadTransfer t_arm;        // input field -> output field (self)
  QuadTransfer n_arm;        // loss-port vacuum -> output field (self)
  QuadTransfer t_rp_cross;   // counter-beam input -> output field
  QuadTransfer n_rp_cross;   // counter-beam loss vacuum -> output field
  ResponseVector r_arm;      // mirror displacement (x/x_SQL) -> output field
  double beta_arm = 0.0;     // single-pass phase arctan(Omega/gamma)
  double kappa_arm = 0.0;    // optomechanical coupling of this beam
};

// Both beams of one arm: r_beam propagates in the clockwise ("R") sense,
// l_beam in the counter-clockwise ("L") sense.
struct ArmScattering {
  BeamScattering r_beam;
  BeamScattering l_beam;
};

// Intracavity resolvent L(Omega) = [[g - i*Omega, -delta], [delta, g - i*Omega]] / D,
// D = (g - i*Omega)^2 + delta^2, g = gamma_itm + gamma_loss.
// Throws SingularityError if |D| underflows.
QuadTransfer resolvent_matrix(const ArmCavitySpec& spec, double omega);

// Optomechanical coupling of a lossy arm:
// K = Theta*gamma_itm/(Omega^2*((gamma_itm+gamma_loss)^2 + Omega^2)).
double coupling_factor(const ArmCavitySpec& spec, const BeamDrive& drive,
                       double omega);

// Sideband phase beta = arctan(Omega/(gamma_itm + gamma_loss)).
double arm_phase(const ArmCavitySpec& spec, double omega);

// Detuning-induced optical spring: mu_arm*Theta*delta/D(Omega); zero at delta = 0.
Complex optical_rigidity(const ArmCavitySpec& spec, const BeamDrive& drive,
                         double omega);

// Free-mass susceptibility chi = -1/(mu*Omega^2) modified by the summed
// rigidity of both beams: chi_new = chi/(1 + chi*rigidity_sum).
// Throws SingularityError at the optical-spring resonance.
Complex modified_susceptibility(const ArmCavitySpec& spec, Complex rigidity_sum,
                                double omega);

// One beam's matrices on the exact resonance (delta = 0), closed forms.
BeamScattering beam_scattering_resonant(const ArmCavitySpec& spec,
                                        const BeamDrive& drive,
                                        const BeamDrive& drive_other,
                                        double omega);

// One beam's matrices for the general (possibly detuned) arm.
BeamScattering beam_scattering_general(const ArmCavitySpec& spec,
                                       const BeamDrive& drive,
                                       const BeamDrive& drive_other,
                                       double omega);

// Both beams of one arm; dispatches to the resonant closed forms when
// delta = 0 and to the general path otherwise.
ArmScattering arm_scattering(const ArmCavitySpec& spec, const BeamDrive& drive_r,
                             const BeamDrive& drive_l, double omega);

// Linear form of one output field over the elementary interferometer inputs:
// the two beamsplitter-side fields a_RN/a_LE, the four arm loss vacua, and the
// two normalized arm displacements x_N/x_SQL, x_E/x_SQL.
struct FieldForm {
  QuadTransfer a_rn = QuadTransfer::Zero();
  QuadTransfer a_le = QuadTransfer::Zero();
  QuadTransfer n_ln = QuadTransfer::Zero();
  QuadTransfer n_rn = QuadTransfer::Zero();
  QuadTransfer n_le = QuadTransfer::Zero();
  QuadTransfer n_re = QuadTransfer::Zero();
  ResponseVector x_n = ResponseVector::Zero();
  ResponseVector x_e = ResponseVector::Zero();
};

FieldForm operator*(const QuadTransfer& m, const FieldForm& f);
FieldForm operator+(const FieldForm& a, const FieldForm& b);

// Resolves the two-arm figure-eight light path: the R beam passes north then
// east, the L beam east then north, with the counter-beam radiation-pressure
// couplings closed self-consistently. Returns the fields returning to the
// beamsplitter as linear forms over the elementary inputs.
struct ChainOutputs {
  FieldForm b_ln;  // L beam returning after its second (north) pass
  FieldForm b_re;  // R beam returning after its second (east) pass
};

ChainOutputs chain_arms(const ArmScattering& north, const ArmScattering& east);

}  // namespace sagnac
