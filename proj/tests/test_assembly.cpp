#include <doctest.h>

#include <cmath>

#include "sagnac/assembly.hpp"
#include "sagnac/constants.hpp"
#include "sagnac/errors.hpp"
#include "sagnac/noise_spectra.hpp"
#include "test_support.hpp"

using namespace sagnac;
using testutil::rel_err;

TEST_CASE("carrier frequency, effective mass and SQL normalization") {
  const InterferometerSpec g = testutil::glasgow_bare();
  CHECK(rel_err(g.omega0(), 2.0 * k_pi * k_c / 1064e-9) < testutil::k_exact);
  CHECK(rel_err(g.m_eff(), 4.232013940752e-04) < testutil::k_frozen);
  CHECK(rel_err(g.x_sql(2.0 * k_pi * 1000.0), 1.123568784823e-19) <
        testutil::k_frozen);

  const InterferometerSpec e = testutil::et_bare();
  CHECK(rel_err(e.m_eff(), 1.406666666667e+02 / 2.0) < testutil::k_frozen);
  CHECK(rel_err(e.x_sql(2.0 * k_pi * 10.0), 2.756085013559e-20) <
        testutil::k_frozen);
}

TEST_CASE("instrument validation rejects unphysical parameters") {
  CHECK_NOTHROW(testutil::glasgow_bare().validate());

  InterferometerSpec s = testutil::glasgow_bare();
  s.p_in_w = -1.0;
  CHECK_THROWS_AS(s.validate(), DomainError);

  s = testutil::glasgow_bare();
  s.lambda0_m = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);

  s = testutil::glasgow_bare();
  s.readout.eta_pd = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.readout.eta_pd = 1.2;
  CHECK_THROWS_AS(s.validate(), DomainError);

  s = testutil::glasgow_bare();
  s.laser.l_c = 0.5;  // below the vacuum floor
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("arm-average and arm-difference parameters") {
  SUBCASE("identical lossless arms have zero differences") {
    const DerivedArmParams d = derived_params(testutil::glasgow_bare());
    CHECK(d.delta_gamma == 0.0);
    CHECK(d.delta_epsilon == 0.0);
    CHECK(d.epsilon_arm == 0.0);
    CHECK(rel_err(d.gamma_arm, 3.707680575972e+04) < testutil::k_frozen);
  }

  SUBCASE("transmissivity mismatch with common loss") {
    InterferometerSpec s = testutil::glasgow_bare();
    s.north.t_itm = 710e-6;
    s.east.t_itm = 690e-6;
    s.north.t_loss = s.east.t_loss = 50e-6;
    const DerivedArmParams d = derived_params(s);
    CHECK(rel_err(d.delta_gamma / d.gamma_arm, 20.0 / 750.0) < testutil::k_exact);
    const double eps_n = 50.0 / 760.0;
    const double eps_e = 50.0 / 740.0;
    CHECK(rel_err(d.epsilon_arm, 0.5 * (eps_n + eps_e)) < testutil::k_exact);
    CHECK(rel_err(d.delta_epsilon, eps_n - eps_e) < testutil::k_exact);
  }
}

TEST_CASE("circulating carrier powers") {
  SUBCASE("high-transmissivity lossless arms") {
    const CirculatingPowers p = circulating_powers(testutil::et_bare());
    CHECK(rel_err(p.rn, 9146.0) < testutil::k_exact);
    CHECK(rel_err(p.rn + p.ln, 18292.0) < testutil::k_exact);
    CHECK(p.re == p.rn);  // lossless arms transmit the full carrier
    CHECK(p.le == p.ln);
  }

  SUBCASE("low-transmissivity lossless arms") {
    const CirculatingPowers p = circulating_powers(testutil::glasgow_bare());
    CHECK(rel_err(p.rn, 4857.142857142857) < testutil::k_exact);
    CHECK(rel_err(p.rn, 0.85 * 4.0 / 700e-6) < testutil::k_exact);
    CHECK(p.re == p.rn);
    CHECK(p.le == p.rn);
    CHECK(p.ln == p.rn);
  }

  SUBCASE("round-trip loss lowers buildup and attenuates the second pass") {
    InterferometerSpec s = testutil::glasgow_bare();
    s.north.t_loss = s.east.t_loss = 50e-6;
    const CirculatingPowers p = circulating_powers(s);
    CHECK(rel_err(p.rn, 4.2311111111e+03) < testutil::k_frozen);
    CHECK(rel_err(p.re, 3.1780345679e+03) < testutil::k_frozen);
    CHECK(p.le == p.rn);  // symmetric arms
    CHECK(p.ln == p.re);
    // Exact DC attenuation between the passes.
    CHECK(rel_err(p.re / p.rn, std::pow(650.0 / 750.0, 2)) < testutil::k_exact);
  }

  SUBCASE("loss equal to the input transmissivity") {
    InterferometerSpec s = testutil::glasgow_bare();
    s.north.t_loss = s.north.t_itm;
    s.east.t_loss = s.east.t_itm;
    CHECK(rel_err(power_buildup(s.north), 1.0 / s.north.t_itm) < testutil::k_exact);
    CHECK(dc_power_transmission(s.north) == 0.0);
    const CirculatingPowers p = circulating_powers(s);
    CHECK(p.re == 0.0);
    CHECK(p.ln == 0.0);
  }

  SUBCASE("splitter loss scales every beam by (1 - eps)") {
    const CirculatingPowers base = circulating_powers(testutil::glasgow_bare());
    InterferometerSpec s = testutil::glasgow_bare();
    s.bs.epsilon_bs = 1000e-6;
    const CirculatingPowers p = circulating_powers(s);
    CHECK(rel_err(p.rn, (1.0 - 1000e-6) * base.rn) < testutil::k_exact);
    CHECK(rel_err(p.re, (1.0 - 1000e-6) * base.re) < testutil::k_exact);
  }

  SUBCASE("splitter offset tilts the two directions") {
    InterferometerSpec s = testutil::glasgow_bare();
    s.bs.eta_bs = 0.001;
    const CirculatingPowers p = circulating_powers(s);
    CHECK(rel_err(p.rn / p.le, std::pow(1.001 / 0.999, 2)) < testutil::k_exact);
  }
}

TEST_CASE("per-beam optomechanical couplings") {
  const double omega = 2.0 * k_pi * 1000.0;

  SUBCASE("symmetric lossless: all four equal") {
    const KappaVariants k = kappa_variants(testutil::glasgow_bare(), omega);
    CHECK(rel_err(k.re, k.rn) < testutil::k_exact);
    CHECK(rel_err(k.le, k.rn) < testutil::k_exact);
    CHECK(rel_err(k.ln, k.rn) < testutil::k_exact);
  }

  SUBCASE("symmetric lossy: first/second pass split by the DC attenuation") {
    InterferometerSpec s = testutil::glasgow_bare();
    s.north.t_loss = s.east.t_loss = 50e-6;
    const KappaVariants k = kappa_variants(s, omega);
    CHECK(rel_err(k.rn, 4.845066402329e+01) < testutil::k_frozen);
    CHECK(rel_err(k.re, 3.639183208860e+01) < testutil::k_frozen);
    CHECK(rel_err(k.le, k.rn) < testutil::k_exact);
    CHECK(rel_err(k.ln, k.re) < testutil::k_exact);
    CHECK(rel_err(k.re / k.rn, std::pow(650.0 / 750.0, 2)) < testutil::k_exact);
  }

  SUBCASE("splitter offset splits the two directions by the power ratio") {
    InterferometerSpec s = testutil::glasgow_bare();
    s.bs.eta_bs = 0.01;
    const KappaVariants k = kappa_variants(s, omega);
    CHECK(rel_err(k.rn / k.le, std::pow(1.01 / 0.99, 2)) < testutil::k_exact);
    CHECK(rel_err(k.rn / k.re, 1.0) < testutil::k_exact);  // lossless second pass
  }
}

TEST_CASE("assembled ideal instrument matches the closed-form scattering") {
  const InterferometerSpec s = testutil::glasgow_bare();
  const double gamma = s.north.gamma();
  const double theta = testutil::bare_theta(s);

  for (double f : testutil::log_grid(10.0, 1e5, 50)) {
    CAPTURE(f);
    const double omega = 2.0 * k_pi * f;
    const ScatteringAtFrequency scat = assemble(s, omega);

    const double ks = kappa_sagnac(theta, gamma, omega);
    const double beta_sag = 2.0 * std::atan2(omega, gamma) + k_pi / 2.0;
    const Complex e1 = std::exp(Complex(0.0, 1.0) * beta_sag);
    const Complex e2 = e1 * e1;

    QuadTransfer expected_ti;
    expected_ti << -e2, Complex(0.0, 0.0), e2 * ks, -e2;
    ResponseVector expected_rm;
    expected_rm << Complex(0.0, 0.0), e1 * std::sqrt(2.0 * ks);

    const double scale_t = std::max(1.0, expected_ti.cwiseAbs().maxCoeff());
    CHECK((scat.t_i - expected_ti).cwiseAbs().maxCoeff() <
          testutil::k_entrywise * scale_t);
    const double scale_r = expected_rm.cwiseAbs().maxCoeff();
    CHECK((scat.r_minus - expected_rm).cwiseAbs().maxCoeff() <
          testutil::k_entrywise * scale_r);

    // With zero imperfections every other channel vanishes identically.
    CHECK(scat.n_ln.norm() == 0.0);
    CHECK(scat.n_rn.norm() == 0.0);
    CHECK(scat.n_le.norm() == 0.0);
    CHECK(scat.n_re.norm() == 0.0);
    CHECK(scat.m_i.norm() == 0.0);
    CHECK(scat.m_p.norm() == 0.0);
    CHECK(scat.m_o.norm() == 0.0);
    CHECK(!scat.has_detection_port);
    CHECK(scat.t_p.norm() <= testutil::k_vanish * scale_t);
    CHECK(scat.r_plus.norm() <= testutil::k_vanish * scale_r);
  }
}

TEST_CASE("symmetric loss keeps the bright port and common response dark") {
  InterferometerSpec s = testutil::glasgow_bare();
  s.north.t_loss = s.east.t_loss = 50e-6;
  s.bs.epsilon_bs = 1000e-6;
  for (double f : {20.0, 200.0, 2000.0, 20000.0}) {
    CAPTURE(f);
    const ScatteringAtFrequency scat = assemble(s, 2.0 * k_pi * f);
    CHECK(scat.t_p.norm() <= testutil::k_vanish * scat.t_i.norm());
    CHECK(scat.r_plus.norm() <= testutil::k_vanish * scat.r_minus.norm());
    CHECK(scat.n_ln.norm() > 0.0);  // loss channels are open
  }
}

TEST_CASE("mirror symmetry: flipping the splitter offset swaps the arms") {
  InterferometerSpec a = glasgow_preset();
  a.north.t_loss = 30e-6;
  a.east.t_loss = 70e-6;
  a.bs.eta_bs = 0.05;

  InterferometerSpec b = a;
  b.bs.eta_bs = -a.bs.eta_bs;
  b.north = a.east;
  b.north.label = 'N';
  b.east = a.north;
  b.east.label = 'E';

  for (double f : {30.0, 300.0, 3000.0}) {
    for (double zeta : {k_pi / 3.0, k_pi / 2.0}) {
      CAPTURE(f);
      CAPTURE(zeta);
      const double omega = 2.0 * k_pi * f;
      CHECK(rel_err(total_psd(b, omega, zeta), total_psd(a, omega, zeta)) <
            testutil::k_exact);
    }
  }
}

TEST_CASE("detection loss as a pre-detection attenuator") {
  const InterferometerSpec s = testutil::glasgow_bare();
  const double omega = 2.0 * k_pi * 300.0;
  const ScatteringAtFrequency scat = assemble(s, omega);

  SUBCASE("unit efficiency returns the set unchanged") {
    const ScatteringAtFrequency out = apply_detection_loss(scat, 1.0);
    CHECK((out.t_i - scat.t_i).norm() == 0.0);
    CHECK((out.r_minus - scat.r_minus).norm() == 0.0);
    CHECK(!out.has_detection_port);
  }

  SUBCASE("partial efficiency scales fields and opens the vacuum port") {
    const double eta = 0.9;
    const ScatteringAtFrequency out = apply_detection_loss(scat, eta);
    const double a = std::sqrt(eta);
    CHECK((out.t_i - a * scat.t_i).norm() == 0.0);
    CHECK((out.r_minus - a * scat.r_minus).norm() == 0.0);
    CHECK(out.has_detection_port);
    CHECK((out.m_detection - std::sqrt(1.0 - eta) * QuadTransfer::Identity())
              .norm() == 0.0);
  }

  SUBCASE("invalid efficiency is rejected") {
    CHECK_THROWS_AS(apply_detection_loss(scat, 0.0), DomainError);
    CHECK_THROWS_AS(apply_detection_loss(scat, 1.5), DomainError);
  }

  SUBCASE("exact budget identity") {
    // psd(eta) = psd(1) + (1-eta)/eta * x_SQL^2 / |h^dag r_minus|^2.
    const double zeta = k_pi / 2.0;
    InterferometerSpec lossy = s;
    lossy.readout.eta_pd = 0.9;
    const double p1 = total_psd(s, omega, zeta);
    const double p2 = total_psd(lossy, omega, zeta);
    const Eigen::Vector2d h = homodyne_vector(zeta);
    const double proj = std::norm(h.cast<Complex>().dot(scat.r_minus));
    const double x2 = std::pow(s.x_sql(omega), 2);
    CHECK(rel_err(p2, p1 + (0.1 / 0.9) * x2 / proj) < testutil::k_exact);
  }
}

TEST_CASE("detuned arms reshape the budget") {
  InterferometerSpec s = testutil::glasgow_bare();
  s.north.t_loss = s.east.t_loss = 50e-6;
  const double delta = 0.3 * s.north.gamma_itm();
  s.north.delta = delta;
  s.east.delta = delta;
  const double zeta = k_pi / 2.0;
  CHECK(rel_err(total_psd(s, 2.0 * k_pi * 100.0, zeta), 1.147878382767e-40) <
        testutil::k_frozen);
  CHECK(rel_err(total_psd(s, 2.0 * k_pi * 1000.0, zeta), 1.703777343843e-40) <
        testutil::k_frozen);
}
