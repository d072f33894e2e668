#include "sagnac/beamsplitter.hpp"

#include <cmath>

#include "sagnac/errors.hpp"

namespace sagnac {

double BeamSplitterSpec::sqrt_r() const { return (1.0 + eta_bs) / std::sqrt(2.0); }
double BeamSplitterSpec::sqrt_t() const { return (1.0 - eta_bs) / std::sqrt(2.0); }

void BeamSplitterSpec::validate() const {
  if (!(std::abs(eta_bs) < 1.0)) throw DomainError("|eta_bs| must be < 1");
  if (!(epsilon_bs >= 0.0 && epsilon_bs < 1.0)) {
    throw DomainError("epsilon_bs must be in [0, 1)");
  }
}

BsScatter bs_scatter(const BeamSplitterSpec& spec) {
  spec.validate();
  const double sr = spec.sqrt_r();
  const double st = spec.sqrt_t();
  const double pass = std::sqrt(1.0 - spec.epsilon_bs);
  const double leak = std::sqrt(spec.epsilon_bs);

  BsScatter s;
  s.o_from_bln = pass * st;
  s.o_from_bre = -pass * sr;
  s.o_from_mo = leak;
  s.q_from_bln = pass * sr;
  s.q_from_bre = pass * st;
  s.q_from_mq = leak;
  s.arn_from_i = st * pass;
  s.arn_from_p = sr * pass;
  s.arn_from_mi = st * leak;
  s.arn_from_mp = sr * leak;
  s.ale_from_i = -sr * pass;
  s.ale_from_p = st * pass;
  s.ale_from_mi = -sr * leak;
  s.ale_from_mp = st * leak;
  return s;
}

std::pair<double, double> carrier_split(const BeamSplitterSpec& spec, double p_in_w) {
  spec.validate();
  if (p_in_w < 0.0) throw DomainError("input power must be >= 0");
  const double common = p_in_w * (1.0 - spec.epsilon_bs) / 2.0;
  const double p_r = common * (1.0 + spec.eta_bs) * (1.0 + spec.eta_bs);
  const double p_l = common * (1.0 - spec.eta_bs) * (1.0 - spec.eta_bs);
  return {p_r, p_l};
}

}  // namespace sagnac
