#include <doctest.h>

#include <cmath>

#include "sagnac/beamsplitter.hpp"
#include "sagnac/errors.hpp"
#include "test_support.hpp"

using namespace sagnac;
using testutil::rel_err;

TEST_CASE("splitting amplitudes keep the offset parameterization verbatim") {
  BeamSplitterSpec bs;
  CHECK(rel_err(bs.sqrt_r(), 1.0 / std::sqrt(2.0)) < testutil::k_exact);
  CHECK(rel_err(bs.sqrt_t(), 1.0 / std::sqrt(2.0)) < testutil::k_exact);

  bs.eta_bs = 0.01;
  CHECK(rel_err(bs.sqrt_r(), 1.01 / std::sqrt(2.0)) < testutil::k_exact);
  CHECK(rel_err(bs.sqrt_t(), 0.99 / std::sqrt(2.0)) < testutil::k_exact);
  // R + T = 1 + eta^2: the second-order excess is kept, not renormalized.
  const double r_plus_t = bs.sqrt_r() * bs.sqrt_r() + bs.sqrt_t() * bs.sqrt_t();
  CHECK(rel_err(r_plus_t, 1.0 + 0.01 * 0.01) < testutil::k_exact);
}

TEST_CASE("carrier power split") {
  BeamSplitterSpec bs;

  SUBCASE("balanced lossless halving") {
    const auto [p_r, p_l] = carrier_split(bs, 1.7);
    CHECK(rel_err(p_r, 0.85) < testutil::k_exact);
    CHECK(rel_err(p_l, 0.85) < testutil::k_exact);
  }

  SUBCASE("offset tilts powers as (1 +- eta)^2") {
    bs.eta_bs = 0.001;
    const auto [p_r, p_l] = carrier_split(bs, 1.0);
    CHECK(rel_err(p_r / p_l, std::pow(1.001 / 0.999, 2)) < testutil::k_exact);
  }

  SUBCASE("loss removes a fraction epsilon before the split") {
    bs.eta_bs = 0.0;
    bs.epsilon_bs = 1000e-6;
    const auto [p_r, p_l] = carrier_split(bs, 1.0);
    CHECK(rel_err(p_r, 0.4995) < testutil::k_exact);
    CHECK(rel_err(p_l, 0.4995) < testutil::k_exact);
  }
}

TEST_CASE("junction coefficients") {
  SUBCASE("balanced lossless: dark port differences the two returns") {
    const BsScatter c = bs_scatter(BeamSplitterSpec{});
    const double isq2 = 1.0 / std::sqrt(2.0);
    CHECK(rel_err(c.o_from_bln, isq2) < testutil::k_exact);
    CHECK(rel_err(c.o_from_bre, -isq2) < testutil::k_exact);
    CHECK(c.o_from_mo == 0.0);
    // Arm-side fields: a_RN = (p + i)/sqrt(2), a_LE = (p - i)/sqrt(2).
    CHECK(rel_err(c.arn_from_i, isq2) < testutil::k_exact);
    CHECK(rel_err(c.arn_from_p, isq2) < testutil::k_exact);
    CHECK(rel_err(c.ale_from_i, -isq2) < testutil::k_exact);
    CHECK(rel_err(c.ale_from_p, isq2) < testutil::k_exact);
    CHECK(c.arn_from_mi == 0.0);
    CHECK(c.ale_from_mp == 0.0);
    // Energy per input column.
    CHECK(rel_err(c.arn_from_i * c.arn_from_i + c.ale_from_i * c.ale_from_i,
                  1.0) < testutil::k_exact);
    CHECK(rel_err(c.arn_from_p * c.arn_from_p + c.ale_from_p * c.ale_from_p,
                  1.0) < testutil::k_exact);
  }

  SUBCASE("offset reweights the carrier coefficients") {
    BeamSplitterSpec bs;
    bs.eta_bs = 0.01;
    const BsScatter c = bs_scatter(bs);
    CHECK(rel_err(c.arn_from_p, 1.01 / std::sqrt(2.0)) < testutil::k_exact);
    CHECK(rel_err(c.ale_from_p, 0.99 / std::sqrt(2.0)) < testutil::k_exact);
    // Power ratio of the two beams follows (1+eta)^2 / (1-eta)^2.
    CHECK(rel_err(std::pow(c.arn_from_p / c.ale_from_p, 2),
                  std::pow(1.01 / 0.99, 2)) < testutil::k_exact);
  }

  SUBCASE("loss attenuates all through-paths and opens the leak port") {
    BeamSplitterSpec bs;
    bs.epsilon_bs = 1000e-6;
    const BsScatter c = bs_scatter(bs);
    const double pass = std::sqrt(1.0 - 1000e-6);
    const double leak = std::sqrt(1000e-6);
    CHECK(rel_err(c.o_from_mo, leak) < testutil::k_exact);
    CHECK(rel_err(c.o_from_bln, pass / std::sqrt(2.0)) < testutil::k_exact);
    CHECK(rel_err(c.arn_from_mi, leak / std::sqrt(2.0)) < testutil::k_exact);
    CHECK(rel_err(c.arn_from_i, pass / std::sqrt(2.0)) < testutil::k_exact);
  }

  SUBCASE("frequency independence is structural") {
    // All coefficients are plain scalars; nothing varies with Omega by
    // construction. Assert the two splitter outputs stay orthogonal on the
    // return side for the balanced case: o and q project b_LN/b_RE onto
    // orthogonal combinations.
    const BsScatter c = bs_scatter(BeamSplitterSpec{});
    CHECK(std::abs(c.o_from_bln * c.q_from_bln +
                   c.o_from_bre * c.q_from_bre) < testutil::k_exact);
  }
}

TEST_CASE("splitter validation") {
  BeamSplitterSpec bs;
  CHECK_NOTHROW(bs.validate());
  bs.eta_bs = 1.0;
  CHECK_THROWS_AS(bs.validate(), DomainError);
  bs = BeamSplitterSpec{};
  bs.epsilon_bs = -0.1;
  CHECK_THROWS_AS(bs.validate(), DomainError);
  bs.epsilon_bs = 1.0;
  CHECK_THROWS_AS(bs.validate(), DomainError);
}
