#pragma once

#include <utility>

#include "sagnac/two_photon.hpp"

namespace sagnac {

// Main beamsplitter with a splitting-ratio offset eta_bs and power loss
// epsilon_bs. Amplitude factors are sqrt(R) = (1+eta)/sqrt(2) and
// sqrt(T) = (1-eta)/sqrt(2); note R + T = 1 + eta^2, i.e. the offset
// parameterization is kept verbatim rather than re-normalized (the violation
// is <= 1e-4 for |eta| <= 0.01).
struct BeamSplitterSpec {
  double eta_bs = 0.0;
  double epsilon_bs = 0.0;

  double sqrt_r() const;
  double sqrt_t() const;
  void validate() const;  // throws DomainError
};

// Frequency-independent coefficient of each splitter output with respect to
// each of its direct inputs (all scalar multiples of the identity).
//   o  = o_from_bln*b_LN + o_from_bre*b_RE + o_from_mo*m_o        (dark port)
//   q  = q_from_bln*b_LN + q_from_bre*b_RE + q_from_mq*m_q        (bright return)
//   a_RN = arn_from_i*i + arn_from_p*p + arn_from_mi*m_i + arn_from_mp*m_p
//   a_LE = ale_from_i*i + ale_from_p*p + ale_from_mi*m_i + ale_from_mp*m_p
// i is the dark-port input, p the bright (carrier) input, m_* loss vacua.
struct BsScatter {
  double o_from_bln, o_from_bre, o_from_mo;
  double q_from_bln, q_from_bre, q_from_mq;
  double arn_from_i, arn_from_p, arn_from_mi, arn_from_mp;
  double ale_from_i, ale_from_p, ale_from_mi, ale_from_mp;
};

BsScatter bs_scatter(const BeamSplitterSpec& spec);

// Classical carrier powers leaving the splitter toward the two arms:
// P_R = P_in*(1-eps)*(1+eta)^2/2, P_L = P_in*(1-eps)*(1-eta)^2/2.
std::pair<double, double> carrier_split(const BeamSplitterSpec& spec, double p_in_w);

}  // namespace sagnac
