#include "sagnac/arm_cavity.hpp"

#include <cmath>

#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"

namespace sagnac {

namespace {

const QuadTransfer kLowerShift = (QuadTransfer() << 0, 0, 1, 0).finished();

QuadTransfer invert_checked(const QuadTransfer& m, const char* where) {
  const Complex det = m.determinant();
  if (std::abs(det) < 1e-300) throw SingularityError(std::string(where) + ": singular matrix");
  QuadTransfer inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

}  // namespace

double ArmCavitySpec::gamma_itm() const { return k_c * t_itm / (4.0 * length_m); }
double ArmCavitySpec::gamma_loss() const { return k_c * t_loss / (4.0 * length_m); }
double ArmCavitySpec::gamma() const { return gamma_itm() + gamma_loss(); }

double ArmCavitySpec::mu_arm() const {
  return 2.0 * m_itm_kg * m_etm_kg / (m_itm_kg + 2.0 * m_etm_kg);
}

void ArmCavitySpec::validate() const {
  if (label != 'N' && label != 'E') throw DomainError("arm label must be 'N' or 'E'");
  if (!(length_m > 0.0)) throw DomainError("arm length must be > 0");
  if (!(t_itm > 0.0 && t_itm < 1.0)) throw DomainError("T_itm must be in (0, 1)");
  if (!(t_loss >= 0.0 && t_loss < 1.0)) throw DomainError("T_loss must be in [0, 1)");
  if (!(m_itm_kg > 0.0 && m_etm_kg > 0.0)) throw DomainError("mirror masses must be > 0");
}

BeamDrive make_drive(const ArmCavitySpec& spec, double p_c_w, double omega0) {
  if (p_c_w < 0.0) throw DomainError("circulating power must be >= 0");
  BeamDrive d;
  d.p_c_w = p_c_w;
  d.theta = 4.0 * omega0 * p_c_w / (spec.mu_arm() * k_c * spec.length_m);
  return d;
}

QuadTransfer resolvent_matrix(const ArmCavitySpec& spec, double omega) {
  const Complex g_min_iw(spec.gamma(), -omega);
  const Complex det = g_min_iw * g_min_iw + spec.delta * spec.delta;
  if (std::abs(det) < 1e-300) throw SingularityError("resolvent_matrix: D(Omega) underflow");
  QuadTransfer l;
  l << g_min_iw, -spec.delta, spec.delta, g_min_iw;
  return l / det;
}

double coupling_factor(const ArmCavitySpec& spec, const BeamDrive& drive,
                       double omega) {
  if (omega == 0.0) throw DomainError("coupling_factor: Omega = 0");
  const double g = spec.gamma();
  return drive.theta * spec.gamma_itm() / (omega * omega * (g * g + omega * omega));
}

double arm_phase(const ArmCavitySpec& spec, double omega) {
  return std::atan2(omega, spec.gamma());
}

Complex optical_rigidity(const ArmCavitySpec& spec, const BeamDrive& drive,
                         double omega) {
  const Complex g_min_iw(spec.gamma(), -omega);
  const Complex det = g_min_iw * g_min_iw + spec.delta * spec.delta;
  if (std::abs(det) < 1e-300) throw SingularityError("optical_rigidity: D(Omega) underflow");
  return spec.mu_arm() * drive.theta * spec.delta / det;
}

Complex modified_susceptibility(const ArmCavitySpec& spec, Complex rigidity_sum,
                                double omega) {
  if (omega == 0.0) throw DomainError("modified_susceptibility: Omega = 0");
  const double chi = -1.0 / (spec.mu_arm() * omega * omega);
  const Complex denom = 1.0 + chi * rigidity_sum;
  if (std::abs(denom) < 1e-14) {
    throw SingularityError("modified_susceptibility: optical-spring resonance");
  }
  return chi / denom;
}

BeamScattering beam_scattering_resonant(const ArmCavitySpec& spec,
                                        const BeamDrive& drive,
                                        const BeamDrive& drive_other,
                                        double omega) {
  const double gi = spec.gamma_itm();
  const double gl = spec.gamma_loss();
  const double kappa = coupling_factor(spec, drive, omega);
  const double kappa_other = coupling_factor(spec, drive_other, omega);
  const double kappa_x = std::sqrt(kappa * kappa_other);
  const double beta = arm_phase(spec, omega);
  const Complex e1 = std::polar(1.0, beta);
  const Complex e2 = std::polar(1.0, 2.0 * beta);
  const Complex denom(gi + gl, omega);
  const Complex t_cal = Complex(gi - gl, omega) / denom;
  const Complex n_cal = 2.0 * gi / denom;
  const double loss_ratio = gl > 0.0 ? std::sqrt(gl / gi) : 0.0;

  BeamScattering out;
  out.beta_arm = beta;
  out.kappa_arm = kappa;
  out.t_arm << t_cal, 0, -kappa, t_cal;
  out.t_arm *= e2;
  out.n_arm << n_cal, 0, -kappa, n_cal;
  out.n_arm *= loss_ratio * e2;
  out.t_rp_cross = e2 * -kappa_x * kLowerShift;
  out.n_rp_cross = loss_ratio * out.t_rp_cross;
  out.r_arm = 2.0 * std::sqrt(kappa) * e1 * ResponseVector(0, 1);
  return out;
}

BeamScattering beam_scattering_general(const ArmCavitySpec& spec,
                                       const BeamDrive& drive,
                                       const BeamDrive& drive_other,
                                       double omega) {
  if (omega == 0.0) throw DomainError("beam_scattering_general: Omega = 0");
  const double gi = spec.gamma_itm();
  const double gl = spec.gamma_loss();
  const double mu = spec.mu_arm();
  const QuadTransfer l = resolvent_matrix(spec, omega);
  const Complex rigidity_sum =
      optical_rigidity(spec, drive, omega) + optical_rigidity(spec, drive_other, omega);
  const Complex chi_new = modified_susceptibility(spec, rigidity_sum, omega);
  const QuadTransfer kick = l * kLowerShift * l;  // force in, phase out
  const double theta_x = std::sqrt(drive.theta * drive_other.theta);

  BeamScattering out;
  out.beta_arm = arm_phase(spec, omega);
  out.kappa_arm = coupling_factor(spec, drive, omega);
  const QuadTransfer t_rp_self = mu * chi_new * drive.theta * gi * kick;
  const QuadTransfer n_rp_self = mu * chi_new * drive.theta * std::sqrt(gi * gl) * kick;
  out.t_rp_cross = mu * chi_new * theta_x * gi * kick;
  out.n_rp_cross = mu * chi_new * theta_x * std::sqrt(gi * gl) * kick;
  out.t_arm = 2.0 * gi * l - QuadTransfer::Identity() + t_rp_self;
  out.n_arm = 2.0 * std::sqrt(gi * gl) * l + n_rp_self;
  out.r_arm = std::sqrt(4.0 * drive.theta * gi / (omega * omega)) *
              (l * ResponseVector(0, 1));
  return out;
}

ArmScattering arm_scattering(const ArmCavitySpec& spec, const BeamDrive& drive_r,
                             const BeamDrive& drive_l, double omega) {
  ArmScattering out;
  if (spec.delta == 0.0) {
    out.r_beam = beam_scattering_resonant(spec, drive_r, drive_l, omega);
    out.l_beam = beam_scattering_resonant(spec, drive_l, drive_r, omega);
  } else {
    out.r_beam = beam_scattering_general(spec, drive_r, drive_l, omega);
    out.l_beam = beam_scattering_general(spec, drive_l, drive_r, omega);
  }
  return out;
}

FieldForm operator*(const QuadTransfer& m, const FieldForm& f) {
  FieldForm out;
  out.a_rn = m * f.a_rn;
  out.a_le = m * f.a_le;
  out.n_ln = m * f.n_ln;
  out.n_rn = m * f.n_rn;
  out.n_le = m * f.n_le;
  out.n_re = m * f.n_re;
  out.x_n = m * f.x_n;
  out.x_e = m * f.x_e;
  return out;
}

FieldForm operator+(const FieldForm& a, const FieldForm& b) {
  FieldForm out;
  out.a_rn = a.a_rn + b.a_rn;
  out.a_le = a.a_le + b.a_le;
  out.n_ln = a.n_ln + b.n_ln;
  out.n_rn = a.n_rn + b.n_rn;
  out.n_le = a.n_le + b.n_le;
  out.n_re = a.n_re + b.n_re;
  out.x_n = a.x_n + b.x_n;
  out.x_e = a.x_e + b.x_e;
  return out;
}

ChainOutputs chain_arms(const ArmScattering& north, const ArmScattering& east) {
  const BeamScattering& rn = north.r_beam;
  const BeamScattering& ln = north.l_beam;
  const BeamScattering& re = east.r_beam;
  const BeamScattering& le = east.l_beam;

  // Per-beam output = T_arm * own_input + cross kicks + loss vacua + signal.
  FieldForm f_ln;  // everything feeding b_LN except its own input a_LN (= b_LE)
  f_ln.a_rn = rn.t_rp_cross;
  f_ln.n_ln = ln.n_arm;
  f_ln.n_rn = rn.n_rp_cross;
  f_ln.x_n = ln.r_arm;

  FieldForm f_rn;  // b_RN except the cross kick from a_LN (= b_LE)
  f_rn.a_rn = rn.t_arm;
  f_rn.n_rn = rn.n_arm;
  f_rn.n_ln = ln.n_rp_cross;
  f_rn.x_n = rn.r_arm;

  FieldForm f_le;  // b_LE except the cross kick from a_RE (= b_RN)
  f_le.a_le = le.t_arm;
  f_le.n_le = le.n_arm;
  f_le.n_re = re.n_rp_cross;
  f_le.x_e = le.r_arm;

  FieldForm f_re;  // everything feeding b_RE except its own input a_RE (= b_RN)
  f_re.a_le = le.t_rp_cross;
  f_re.n_re = re.n_arm;
  f_re.n_le = le.n_rp_cross;
  f_re.x_e = re.r_arm;

  // b_LE = T_rp^RE b_RN + f_LE and b_RN = T_rp^LN b_LE + f_RN close on each
  // other through the cross kicks; resolve the pair.
  const QuadTransfer eye = QuadTransfer::Identity();
  const QuadTransfer inv_le =
      invert_checked(eye - re.t_rp_cross * ln.t_rp_cross, "chain_arms");
  const QuadTransfer inv_rn =
      invert_checked(eye - ln.t_rp_cross * re.t_rp_cross, "chain_arms");

  const FieldForm b_le = inv_le * ((re.t_rp_cross * f_rn) + f_le);
  const FieldForm b_rn = inv_rn * (f_rn + (ln.t_rp_cross * f_le));

  ChainOutputs out;
  out.b_ln = (ln.t_arm * b_le) + f_ln;
  out.b_re = (re.t_arm * b_rn) + f_re;
  return out;
}

}  // namespace sagnac
