#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gravbench/constants.hpp"
#include "gravbench/sn_dynamics.hpp"
#include "support.hpp"

using namespace gravbench;
using std::complex;

namespace {

// Paper-scale regime: omega = 1e-2, gamma_g = 4.74e-4.
SNParams paper_params(double kappa = 1.0) {
  return sn_params_from_rates(1e-2, 4.74e-4, kappa);
}

const CoupledPairParams kPair(1e-2, 4.74e-4);

}  // namespace

TEST_CASE("SNParams construction") {
  const auto p = paper_params();
  CHECK(p.gamma_g == doctest::Approx(4.74e-4).epsilon(1e-12));
  CHECK(p.C2 / p.mass == doctest::Approx(p.gamma_g * p.omega).epsilon(1e-12));
  CHECK(p.C1 == doctest::Approx(p.C2 * 2e-4).epsilon(1e-12));
  CHECK(p.omega_g == doctest::Approx(std::sqrt(p.omega * p.omega -
                                               2.0 * p.C2 / p.mass)));
  CHECK(p.omega_g_plus > p.omega);
  CHECK(p.omega > p.omega_g_minus);
  CHECK(p.omega_g_plus == doctest::Approx(p.omega * std::sqrt(1 + p.gamma_g / p.omega)));

  // the factor-2 zero-init frequency sits below the kappa=1 minus branch
  CHECK(p.omega_g < p.omega_g_minus);

  CHECK_THROWS_AS(make_sn_params(-1.0, 1.0, 1.0), std::invalid_argument);
  // coupling too strong for real normal modes
  CHECK_THROWS_AS(sn_params_from_rates(1e-2, 6e-3, 2.0), std::invalid_argument);

  const auto mirror_params = make_sn_params(3.787e-7, 1e-2, 2e-4);
  CHECK(mirror_params.gamma_g ==
        doctest::Approx(phys::G * 3.787e-7 / (1e-2 * 8e-12)).epsilon(1e-12));
}

TEST_CASE("drive function") {
  const auto p = paper_params();
  CHECK(drive(p, 0.0) == doctest::Approx(p.C1));
  const double period = 2.0 * std::numbers::pi / p.omega_g;
  CHECK(drive(p, period) == doctest::Approx(p.C1).epsilon(1e-9));
  CHECK(drive(p, period / 2.0) ==
        doctest::Approx(p.C1 - 2.0 * p.C1 / (p.mass * p.omega_g * p.omega_g)));
}

TEST_CASE("moments_zero_init") {
  const auto p = paper_params();
  SUBCASE("zero at t = 0 and antisymmetric") {
    const auto m0 = moments_zero_init(p, 0.0);
    CHECK(m0.x1 == 0.0);
    CHECK(m0.p1 == 0.0);
    for (double t : {100.0, 777.0, 4000.0}) {
      const auto m = moments_zero_init(p, t);
      CHECK(m.x2 == doctest::Approx(-m.x1));
      CHECK(m.p2 == doctest::Approx(-m.p1));
    }
  }
  SUBCASE("matches RK4 integration of the defining ODEs over three periods") {
    // d<x_k>/dt = <p_k>/m
    // d<p_1>/dt = -<x_1>(m w^2 - C2) - C2 <x_2> + C1
    // d<p_2>/dt = -<x_2>(m w^2 - C2) - C2 <x_1> - C1
    const double m = p.mass, w = p.omega, c1 = p.C1, c2 = p.C2;
    auto rhs = [&](double, const std::vector<double>& y) {
      return std::vector<double>{
          y[1] / m, -y[0] * (m * w * w - c2) - c2 * y[2] + c1,
          y[3] / m, -y[2] * (m * w * w - c2) - c2 * y[0] - c1};
    };
    const double t_end = 3.0 * 2.0 * std::numbers::pi / p.omega_g;
    const auto y = testsupport::rk4_integrate({0, 0, 0, 0}, rhs, 0.0, t_end, 40000);
    const auto closed = moments_zero_init(p, t_end);
    const double xscale = 2.0 * c1 / (m * p.omega_g * p.omega_g);
    const double pscale = c1 / p.omega_g;
    CHECK(std::abs(y[0] - closed.x1) / xscale < 1e-9);
    CHECK(std::abs(y[1] - closed.p1) / pscale < 1e-9);
    CHECK(std::abs(y[2] - closed.x2) / xscale < 1e-9);
    CHECK(std::abs(y[3] - closed.p2) / pscale < 1e-9);
  }
}

TEST_CASE("moments_coherent_init") {
  const complex<double> alpha(0.8, -1.1);
  SUBCASE("initial conditions") {
    const auto p = paper_params();
    const auto m0 = moments_coherent_init(p, alpha, 0.0);
    CHECK(m0.x1 == doctest::Approx(std::sqrt(2.0 * phys::hbar / (p.mass * p.omega)) *
                                   alpha.real()));
    CHECK(m0.p1 == doctest::Approx(std::sqrt(2.0 * phys::hbar * p.mass * p.omega) *
                                   alpha.imag()));
    CHECK(m0.x2 == 0.0);
    CHECK(m0.p2 == 0.0);
  }
  SUBCASE("alpha = 0 stays at the origin") {
    const auto p = paper_params();
    for (double t : {10.0, 500.0, 2500.0}) {
      const auto m = moments_coherent_init(p, 0.0, t);
      CHECK(m.x1 == 0.0);
      CHECK(m.p1 == 0.0);
      CHECK(m.x2 == 0.0);
      CHECK(m.p2 == 0.0);
    }
  }
  SUBCASE("matches RK4 integration of the kappa-coupled ODEs over [0, t_s]") {
    // d<x_k>/dt = <p_k>/m, d<p_1>/dt = -m w^2 <x_1> - kappa C2 <x_2>, 1 <-> 2
    for (double kappa : {1.0, 2.0}) {
      const auto p = paper_params(kappa);
      const double m = p.mass, w = p.omega, kc2 = kappa * p.C2;
      auto rhs = [&](double, const std::vector<double>& y) {
        return std::vector<double>{y[1] / m, -m * w * w * y[0] - kc2 * y[2],
                                   y[3] / m, -m * w * w * y[2] - kc2 * y[0]};
      };
      const double x0 = std::sqrt(2.0 * phys::hbar / (m * w)) * alpha.real();
      const double p0 = std::sqrt(2.0 * phys::hbar * m * w) * alpha.imag();
      const double t_s = std::numbers::pi / (2.0 * p.gamma_g);
      const auto y = testsupport::rk4_integrate({x0, p0, 0, 0}, rhs, 0.0, t_s, 60000);
      const auto closed = moments_coherent_init(p, alpha, t_s);
      const double xs = std::sqrt(2.0 * phys::hbar / (m * w)) * std::abs(alpha);
      const double ps = std::sqrt(2.0 * phys::hbar * m * w) * std::abs(alpha);
      CHECK(std::abs(y[0] - closed.x1) / xs < 1e-8);
      CHECK(std::abs(y[1] - closed.p1) / ps < 1e-8);
      CHECK(std::abs(y[2] - closed.x2) / xs < 1e-8);
      CHECK(std::abs(y[3] - closed.p2) / ps < 1e-8);
    }
  }
}

TEST_CASE("sn_reduced_mode2") {
  const auto p = paper_params();
  const complex<double> alpha(1.4, 0.6);
  SUBCASE("vacuum at t = 0") {
    const auto s = sn_reduced_mode2(p, alpha, 0.0);
    CHECK(s.mean().cwiseAbs().maxCoeff() == 0.0);
    CHECK((s.cov() - 0.5 * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("never any squeezing, always pure") {
    for (double t : {200.0, 1000.0, 3300.0, 6000.0}) {
      const auto s = sn_reduced_mode2(p, alpha, t);
      CHECK(min_quadrature_variance(s, 0) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(symplectic_eigenvalues(s.cov()).front() == doctest::Approx(0.5));
    }
  }
  SUBCASE("agrees with the amplitude map") {
    for (double t : {150.0, 900.0, 2750.0}) {
      const auto map = sn_mode2_amplitude_map(p, t);
      const complex<double> beta = map.linear * alpha + map.conjugate * std::conj(alpha);
      const auto s = sn_reduced_mode2(p, alpha, t);
      CHECK(s.mean()(0) ==
            doctest::Approx(std::numbers::sqrt2 * beta.real()).epsilon(1e-9));
      CHECK(s.mean()(1) ==
            doctest::Approx(std::numbers::sqrt2 * beta.imag()).epsilon(1e-9));
    }
  }
}

TEST_CASE("interaction frame consistency at zero coupling") {
  const auto p = sn_params_from_rates(1e-2, 0.0);
  for (double t : {0.0, 300.0, 5000.0}) {
    const auto m1 = sn_mode1_amplitude_map(p, t);
    CHECK(std::abs(m1.linear - complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(m1.conjugate) < 1e-12);
    const auto m2 = sn_mode2_amplitude_map(p, t);
    CHECK(std::abs(m2.linear) < 1e-12);
    CHECK(std::abs(m2.conjugate) < 1e-12);
  }
}

TEST_CASE("sn_quantum_fidelity") {
  const auto p = paper_params();
  const double lambda = 1e-3;
  const double t_s = std::numbers::pi / (2.0 * kPair.gamma_g);

  SUBCASE("unity at t = 0 and in the decoupled limit") {
    CHECK(sn_quantum_fidelity_analytic(p, kPair, lambda, 0.0) == doctest::Approx(1.0));
    const auto p0 = sn_params_from_rates(1e-2, 0.0);
    const CoupledPairParams pair0(1e-2, 0.0);
    for (double t : {100.0, 2000.0})
      CHECK(sn_quantum_fidelity_analytic(p0, pair0, lambda, t) == doctest::Approx(1.0));
  }
  SUBCASE("analytic and Monte-Carlo paths agree within 5 stderr") {
    const PriorEnsemble prior{lambda, 314159};
    for (int i = 1; i <= 10; ++i) {
      const double t = 2.0 * t_s * i / 10.0;
      const double analytic = sn_quantum_fidelity_analytic(p, kPair, lambda, t);
      const auto mc = sn_quantum_fidelity_mc(p, kPair, prior, t, 20000, 4);
      CHECK(std::abs(mc.mean - analytic) < 5.0 * std::max(mc.std_error, 1e-12));
    }
  }
  SUBCASE("LOCC violation window exists in the paper regime (kappa = 1)") {
    bool violated = false;
    for (int i = 0; i <= 2000; ++i) {
      const double t = 2.0 * t_s * i / 2000.0;
      const double fsn = sn_quantum_fidelity_analytic(p, kPair, lambda, t);
      const double fcl = (1.0 + lambda) /
                         (1.0 + lambda + std::pow(std::sin(kPair.gamma_g * t), 2));
      if (fsn > fcl) violated = true;
    }
    CHECK(violated);
  }
  SUBCASE("second moments stay vacuum for every sampled alpha") {
    const PriorEnsemble prior{lambda, 8};
    for (int i = 0; i < 10; ++i) {
      const auto a = sample_prior(prior, i);
      const auto s = sn_reduced_mode2(p, a, 0.37 * t_s);
      CHECK((s.cov() - 0.5 * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}
