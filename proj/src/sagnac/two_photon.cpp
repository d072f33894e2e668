#include "sagnac/two_photon.hpp"

#include <cmath>

#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"

namespace sagnac {

Eigen::Vector2d homodyne_vector(double zeta) {
  return {std::cos(zeta), std::sin(zeta)};
}

double sql_displacement(double m_eff, double omega) {
  if (m_eff <= 0.0) throw DomainError("sql_displacement: m_eff must be > 0");
  if (omega == 0.0) throw DomainError("sql_displacement: Omega = 0 (SQL diverges)");
  return std::sqrt(2.0 * k_hbar / (m_eff * omega * omega));
}

double port_psd_term(const Eigen::Vector2d& h, const QuadTransfer& t,
                     const Eigen::Matrix2d& s) {
  const QuadVector v = t.adjoint() * h.cast<Complex>();
  return std::real(v.dot(s.cast<Complex>() * v));
}

double noise_psd(const Eigen::Vector2d& h,
                 const std::vector<CoherentPort>& coherent_ports,
                 const std::vector<QuadTransfer>& loss_ports,
                 const ResponseVector& r_signal, double x_sql) {
  const Complex response = h.cast<Complex>().dot(r_signal);
  const double denom = std::norm(response);
  if (denom <= 0.0) {
    throw SignalNullError("noise_psd: readout quadrature is orthogonal to the signal");
  }
  double num = 0.0;
  for (const auto& port : coherent_ports) {
    num += port_psd_term(h, port.t, port.s.s);
  }
  const Eigen::Matrix2d vac = Eigen::Matrix2d::Identity();
  for (const auto& n : loss_ports) num += port_psd_term(h, n, vac);
  return x_sql * x_sql * num / denom;
}

}  // namespace sagnac
