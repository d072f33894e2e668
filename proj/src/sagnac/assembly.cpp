#include "sagnac/assembly.hpp"

#include <cmath>

#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"

namespace sagnac {

double InterferometerSpec::omega0() const { return 2.0 * k_pi * k_c / lambda0_m; }

double InterferometerSpec::m_eff() const {
  return 0.5 * (north.mu_arm() / 2.0 + east.mu_arm() / 2.0);
}

double InterferometerSpec::x_sql(double omega) const {
  return sql_displacement(m_eff(), omega);
}

void InterferometerSpec::validate() const {
  if (!(p_in_w >= 0.0)) throw DomainError("input power must be >= 0");
  if (!(lambda0_m > 0.0)) throw DomainError("wavelength must be > 0");
  bs.validate();
  north.validate();
  east.validate();
  if (!(readout.eta_pd > 0.0 && readout.eta_pd <= 1.0)) {
    throw DomainError("eta_pd must be in (0, 1]");
  }
  if (!(laser.l_c >= 1.0 && laser.l_s >= 1.0)) {
    throw DomainError("laser noise levels must be >= 1 (vacuum floor)");
  }
}

DerivedArmParams derived_params(const InterferometerSpec& spec) {
  const double gn = spec.north.gamma();
  const double ge = spec.east.gamma();
  const double en = spec.north.t_loss / (spec.north.t_itm + spec.north.t_loss);
  const double ee = spec.east.t_loss / (spec.east.t_itm + spec.east.t_loss);
  DerivedArmParams d;
  d.gamma_arm = 0.5 * (gn + ge);
  d.delta_gamma = gn - ge;
  d.epsilon_arm = 0.5 * (en + ee);
  d.delta_epsilon = en - ee;
  return d;
}

double power_buildup(const ArmCavitySpec& arm) {
  const double t_sum = arm.t_itm + arm.t_loss;
  return 4.0 * arm.t_itm / (t_sum * t_sum);
}

double dc_power_transmission(const ArmCavitySpec& arm) {
  const double r = (arm.gamma_itm() - arm.gamma_loss()) / arm.gamma();
  return r * r;
}

CirculatingPowers circulating_powers(const InterferometerSpec& spec) {
  const auto [p_r, p_l] = carrier_split(spec.bs, spec.p_in_w);
  CirculatingPowers p;
  p.rn = power_buildup(spec.north) * p_r;
  p.re = power_buildup(spec.east) * dc_power_transmission(spec.north) * p_r;
  p.le = power_buildup(spec.east) * p_l;
  p.ln = power_buildup(spec.north) * dc_power_transmission(spec.east) * p_l;
  return p;
}

KappaVariants kappa_variants(const InterferometerSpec& spec, double omega) {
  const CirculatingPowers p = circulating_powers(spec);
  const double w0 = spec.omega0();
  KappaVariants k;
  k.rn = coupling_factor(spec.north, make_drive(spec.north, p.rn, w0), omega);
  k.ln = coupling_factor(spec.north, make_drive(spec.north, p.ln, w0), omega);
  k.re = coupling_factor(spec.east, make_drive(spec.east, p.re, w0), omega);
  k.le = coupling_factor(spec.east, make_drive(spec.east, p.le, w0), omega);
  return k;
}

ScatteringAtFrequency assemble(const InterferometerSpec& spec, double omega) {
  const CirculatingPowers p = circulating_powers(spec);
  const double w0 = spec.omega0();

  const ArmScattering north = arm_scattering(
      spec.north, make_drive(spec.north, p.rn, w0), make_drive(spec.north, p.ln, w0), omega);
  const ArmScattering east = arm_scattering(
      spec.east, make_drive(spec.east, p.re, w0), make_drive(spec.east, p.le, w0), omega);

  const ChainOutputs chain = chain_arms(north, east);
  const BsScatter bs = bs_scatter(spec.bs);

  // Dark-port output over the elementary inputs. The overall sign is flipped
  // relative to the raw junction difference so that the ideal limit lands on
  // the reference closed-form phase convention; a global sign of the output
  // field is unobservable in any spectral density.
  const QuadTransfer eye = QuadTransfer::Identity();
  const FieldForm o = (-bs.o_from_bln * eye) * chain.b_ln +
                      (-bs.o_from_bre * eye) * chain.b_re;

  ScatteringAtFrequency s;
  s.omega = omega;
  // Substitute the splitter relations for a_RN and a_LE.
  s.t_i = o.a_rn * bs.arn_from_i + o.a_le * bs.ale_from_i;
  s.t_p = o.a_rn * bs.arn_from_p + o.a_le * bs.ale_from_p;
  s.m_i = o.a_rn * bs.arn_from_mi + o.a_le * bs.ale_from_mi;
  s.m_p = o.a_rn * bs.arn_from_mp + o.a_le * bs.ale_from_mp;
  s.m_o = -bs.o_from_mo * eye;
  s.n_ln = o.n_ln;
  s.n_rn = o.n_rn;
  s.n_le = o.n_le;
  s.n_re = o.n_re;
  // x_N = (x_+ + x_-)/2 and x_E = (x_+ - x_-)/2.
  s.r_plus = 0.5 * (o.x_n + o.x_e);
  s.r_minus = 0.5 * (o.x_n - o.x_e);
  return s;
}

ScatteringAtFrequency apply_detection_loss(ScatteringAtFrequency scat,
                                           double eta_pd) {
  if (!(eta_pd > 0.0 && eta_pd <= 1.0)) throw DomainError("eta_pd must be in (0, 1]");
  if (eta_pd == 1.0) return scat;
  const double a = std::sqrt(eta_pd);
  scat.t_i *= a;
  scat.t_p *= a;
  scat.n_ln *= a;
  scat.n_rn *= a;
  scat.n_le *= a;
  scat.n_re *= a;
  scat.m_i *= a;
  scat.m_p *= a;
  scat.m_o *= a;
  scat.r_plus *= a;
  scat.r_minus *= a;
  scat.has_detection_port = true;
  scat.m_detection = std::sqrt(1.0 - eta_pd) * QuadTransfer::Identity();
  return scat;
}

}  // namespace sagnac
