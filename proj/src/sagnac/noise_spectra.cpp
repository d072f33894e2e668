#include "sagnac/noise_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <future>
#include <string>
#include <thread>

#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"

namespace sagnac {

BudgetPoint psd_general(const ScatteringAtFrequency& scat,
                        const HomodyneReadout& readout,
                        const InputSpectralDensity& s_i,
                        const LaserNoiseSpec& laser, double m_eff) {
  const ScatteringAtFrequency s = apply_detection_loss(scat, readout.eta_pd);
  const Eigen::Vector2d h = homodyne_vector(readout.zeta);
  const double denom = std::norm(h.cast<Complex>().dot(s.r_minus));
  if (denom <= 0.0) {
    throw SignalNullError("psd_general: readout quadrature is orthogonal to the signal");
  }
  const double x2 = std::pow(sql_displacement(m_eff, s.omega), 2);
  const double scale = x2 / denom;
  const Eigen::Matrix2d vac = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d s_laser = Eigen::Matrix2d::Zero();
  s_laser(0, 0) = laser.l_c;
  s_laser(1, 1) = laser.l_s;

  BudgetPoint out;
  out.per_port[0] = scale * port_psd_term(h, s.t_i, s_i.s);
  out.per_port[1] = scale * port_psd_term(h, s.t_p, s_laser);
  out.per_port[2] = scale * port_psd_term(h, s.n_ln, vac);
  out.per_port[3] = scale * port_psd_term(h, s.n_rn, vac);
  out.per_port[4] = scale * port_psd_term(h, s.n_le, vac);
  out.per_port[5] = scale * port_psd_term(h, s.n_re, vac);
  out.per_port[6] = scale * port_psd_term(h, s.m_i, vac);
  out.per_port[7] = scale * port_psd_term(h, s.m_p, vac);
  out.per_port[8] = scale * port_psd_term(h, s.m_o, vac);
  out.per_port[9] =
      s.has_detection_port ? scale * port_psd_term(h, s.m_detection, vac) : 0.0;
  for (double v : out.per_port) out.total += v;
  return out;
}

BudgetPoint budget_point(const InterferometerSpec& spec, double omega, double zeta) {
  HomodyneReadout readout = spec.readout;
  readout.zeta = zeta;
  return psd_general(assemble(spec, omega), readout, InputSpectralDensity::vacuum(),
                     spec.laser, spec.m_eff());
}

double total_psd(const InterferometerSpec& spec, double omega, double zeta) {
  return budget_point(spec, omega, zeta).total;
}

double kappa_sagnac(double theta, double gamma, double omega) {
  const double d = gamma * gamma + omega * omega;
  return 4.0 * theta * gamma / (d * d);
}

namespace {

double closed_form_shell(double kappa, double zeta, double x_sql) {
  if (!(kappa > 0.0)) throw DomainError("closed form requires a positive coupling");
  const double sz = std::sin(zeta);
  if (sz == 0.0) throw DomainError("closed form diverges at sin(zeta) = 0");
  const double cot = std::cos(zeta) / sz;
  const double bracket = (kappa - cot) * (kappa - cot) + 1.0;
  return 0.5 * x_sql * x_sql * bracket / kappa;
}

}  // namespace

double psd_ideal_sagnac(double theta, double gamma, double omega, double zeta,
                        double m_eff) {
  return closed_form_shell(kappa_sagnac(theta, gamma, omega), zeta,
                           sql_displacement(m_eff, omega));
}

double psd_asym_bs_sagnac(double theta, double gamma, double eta_bs, double omega,
                          double zeta, double m_eff, double l_c, double l_s) {
  const double d = gamma * gamma + omega * omega;
  const double k_sym = 4.0 * theta * gamma / (d * d);
  const double k_asym = 4.0 * theta * gamma * gamma * gamma / (omega * omega * d * d);
  if (!(k_sym > 0.0)) throw DomainError("psd_asym_bs_sagnac: K_sym must be > 0");
  const double sz = std::sin(zeta);
  if (sz == 0.0) throw DomainError("psd_asym_bs_sagnac: sin(zeta) = 0");
  const double cot = std::cos(zeta) / sz;
  const double e2 = eta_bs * eta_bs;
  const double a = (1.0 + e2) * k_sym;
  const double b = (1.0 + e2) * (k_sym + k_asym);
  const double w1 = std::pow((1.0 - e2) / (1.0 + e2), 2);
  const double w2 = std::pow(2.0 * eta_bs / (1.0 + e2), 2);
  const double x = sql_displacement(m_eff, omega);
  const double t1 = w1 * ((a - cot) * (a - cot) + 1.0);
  const double t2 = w2 * (l_c * (b - cot) * (b - cot) + l_s);
  return x * x / (2.0 * k_sym) * (t1 + t2);
}

double psd_michelson_yardstick(double theta_total, double gamma, double omega,
                               double zeta, double m_eff) {
  const double k_mi = 2.0 * theta_total * gamma /
                      (omega * omega * (gamma * gamma + omega * omega));
  return closed_form_shell(k_mi, zeta, sql_displacement(m_eff, omega));
}

QuadTransfer output_spectral_density(const ScatteringAtFrequency& scat,
                                     const InputSpectralDensity& s_i,
                                     const LaserNoiseSpec& laser) {
  Eigen::Matrix2cd s_laser = Eigen::Matrix2cd::Zero();
  s_laser(0, 0) = laser.l_c;
  s_laser(1, 1) = laser.l_s;
  QuadTransfer out = scat.t_i * s_i.s.cast<Complex>() * scat.t_i.adjoint();
  out += scat.t_p * s_laser * scat.t_p.adjoint();
  for (const QuadTransfer* t : {&scat.n_ln, &scat.n_rn, &scat.n_le, &scat.n_re,
                                &scat.m_i, &scat.m_p, &scat.m_o}) {
    out += (*t) * t->adjoint();
  }
  if (scat.has_detection_port) {
    out += scat.m_detection * scat.m_detection.adjoint();
  }
  return out;
}

double optimize_homodyne(const std::function<double(double)>& psd_of_zeta) {
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-9;
  double b = k_pi - 1e-9;
  double c = b - golden * (b - a);
  double d = a + golden * (b - a);
  double fc = psd_of_zeta(c);
  double fd = psd_of_zeta(d);
  while (b - a > 1e-6) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - golden * (b - a);
      fc = psd_of_zeta(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + golden * (b - a);
      fd = psd_of_zeta(d);
    }
  }
  return 0.5 * (a + b);
}

double log_log_slope(const std::vector<double>& f, const std::vector<double>& y) {
  if (f.size() != y.size() || f.size() < 2) {
    throw DomainError("log_log_slope: need two equal-length samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    const double lx = std::log10(f[i]);
    const double ly = std::log10(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double slope_over_band(const std::vector<double>& freqs_hz,
                       const std::vector<double>& asd, double f_lo, double f_hi) {
  std::vector<double> f, y;
  for (size_t i = 0; i < freqs_hz.size(); ++i) {
    if (freqs_hz[i] >= f_lo && freqs_hz[i] <= f_hi) {
      f.push_back(freqs_hz[i]);
      y.push_back(asd[i]);
    }
  }
  return log_log_slope(f, y);
}

double rin_to_intensity_level(double rin_asd, double p_in_w, double lambda0_m) {
  const double nu = k_c / lambda0_m;
  return rin_asd * rin_asd * p_in_w / (2.0 * k_planck * nu);
}

double intensity_level_to_rin(double l_c, double p_in_w, double lambda0_m) {
  const double nu = k_c / lambda0_m;
  return std::sqrt(2.0 * k_planck * nu * l_c / p_in_w);
}

namespace {

std::string frequency_tag(double f_hz) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "at f = %.9g Hz: ", f_hz);
  return buf;
}

}  // namespace

NoiseBudget evaluate_budget(const InterferometerSpec& spec,
                            const std::vector<double>& freqs_hz,
                            const BudgetOptions& options) {
  spec.validate();
  NoiseBudget out;
  out.frequencies_hz = freqs_hz;
  const size_t n = freqs_hz.size();
  out.total_psd.resize(n);
  out.asd.resize(n);
  out.sql_asd.resize(n);
  out.per_port.resize(n);
  out.zeta_used.resize(n);

  // Pure per-frequency evaluation into slot i; results do not depend on which
  // worker computes which slot.
  auto eval_one = [&](size_t i) {
    const double omega = 2.0 * k_pi * freqs_hz[i];
    double zeta = spec.readout.zeta;
    if (options.optimize_zeta) {
      zeta = optimize_homodyne(
          [&](double z) { return total_psd(spec, omega, z); });
    }
    const BudgetPoint pt = budget_point(spec, omega, zeta);
    out.total_psd[i] = pt.total;
    out.asd[i] = std::sqrt(pt.total);
    out.sql_asd[i] = spec.x_sql(omega);
    out.per_port[i] = pt.per_port;
    out.zeta_used[i] = zeta;
  };

  auto eval_annotated = [&](size_t i) {
    try {
      eval_one(i);
    } catch (const SingularityError& e) {
      throw SingularityError(frequency_tag(freqs_hz[i]) + e.what());
    } catch (const SignalNullError& e) {
      throw SignalNullError(frequency_tag(freqs_hz[i]) + e.what());
    } catch (const DomainError& e) {
      throw DomainError(frequency_tag(freqs_hz[i]) + e.what());
    }
  };

  size_t workers =
      std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), 8));
  if (n < 16) workers = 1;

  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) eval_annotated(i);
    return out;
  }

  // Strided fan-out; each worker reports its first failure so that the
  // globally lowest-index error is rethrown regardless of scheduling.
  struct StrideResult {
    size_t fail_index;
    std::exception_ptr error;
  };
  std::vector<std::future<StrideResult>> futures;
  futures.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() -> StrideResult {
      for (size_t i = w; i < n; i += workers) {
        try {
          eval_annotated(i);
        } catch (...) {
          return {i, std::current_exception()};
        }
      }
      return {n, nullptr};
    }));
  }
  StrideResult first{n, nullptr};
  for (auto& f : futures) {
    const StrideResult r = f.get();
    if (r.error && r.fail_index < first.fail_index) first = r;
  }
  if (first.error) std::rethrow_exception(first.error);
  return out;
}

}  // namespace sagnac
