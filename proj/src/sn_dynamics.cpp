#include "gravbench/sn_dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravbench/constants.hpp"

namespace gravbench {

namespace {

SNParams fill_frequencies(SNParams p) {
  const double c2_over_m = p.C2 / p.mass;
  if (!(p.omega * p.omega > 2.0 * c2_over_m))
    throw std::invalid_argument("SNParams: omega^2 must exceed 2 C2/m");
  if (!(p.omega > p.kappa * p.gamma_g))
    throw std::invalid_argument("SNParams: kappa*gamma_g must stay below omega");
  p.omega_g = std::sqrt(p.omega * p.omega - 2.0 * c2_over_m);
  p.omega_g_tilde = std::sqrt(p.omega * p.omega - c2_over_m);
  p.omega_g_plus = p.omega * std::sqrt(1.0 + p.kappa * p.gamma_g / p.omega);
  p.omega_g_minus = p.omega * std::sqrt(1.0 - p.kappa * p.gamma_g / p.omega);
  return p;
}

}  // namespace

SNParams make_sn_params(double mass, double omega, double separation_d, double kappa) {
  if (!(mass > 0.0 && omega > 0.0 && separation_d > 0.0 && kappa > 0.0))
    throw std::invalid_argument("make_sn_params: all inputs must be > 0");
  SNParams p{};
  p.mass = mass;
  p.omega = omega;
  p.kappa = kappa;
  p.C1 = phys::G * mass * mass / (separation_d * separation_d);
  p.C2 = p.C1 / separation_d;
  p.gamma_g = p.C2 / (mass * omega);
  return fill_frequencies(p);
}

SNParams sn_params_from_rates(double omega, double gamma_g, double kappa,
                              double separation_d) {
  if (!(omega > 0.0) || gamma_g < 0.0 || !(kappa > 0.0) || !(separation_d > 0.0))
    throw std::invalid_argument("sn_params_from_rates: bad inputs");
  SNParams p{};
  p.omega = omega;
  p.kappa = kappa;
  p.gamma_g = gamma_g;
  if (gamma_g == 0.0) {
    p.mass = 1.0;  // decoupled oscillators; any positive mass works
    p.C1 = 0.0;
    p.C2 = 0.0;
  } else {
    p.mass = gamma_g * omega * std::pow(separation_d, 3) / phys::G;
    p.C1 = phys::G * p.mass * p.mass / (separation_d * separation_d);
    p.C2 = p.C1 / separation_d;
  }
  return fill_frequencies(p);
}

double drive(const SNParams& params, double t) {
  if (t < 0.0) throw std::invalid_argument("drive: t must be >= 0");
  const double wg = params.omega_g;
  return params.C1 -
         params.C1 / (params.mass * wg * wg) * (1.0 - std::cos(wg * t));
}

FirstMoments moments_zero_init(const SNParams& params, double t) {
  if (t < 0.0) throw std::invalid_argument("moments_zero_init: t must be >= 0");
  const double wg = params.omega_g;
  const double x1 = params.C1 / (params.mass * wg * wg) * (1.0 - std::cos(wg * t));
  const double p1 = params.C1 / wg * std::sin(wg * t);
  return FirstMoments{x1, p1, -x1, -p1};
}

FirstMoments moments_coherent_init(const SNParams& params, std::complex<double> alpha,
                                   double t) {
  if (t < 0.0) throw std::invalid_argument("moments_coherent_init: t must be >= 0");
  const double m = params.mass;
  const double w = params.omega;
  const double x0 = std::sqrt(2.0 * phys::hbar / (m * w)) * alpha.real();
  const double p0 = std::sqrt(2.0 * phys::hbar * m * w) * alpha.imag();
  const double wp = params.omega_g_plus, wm = params.omega_g_minus;
  const double cp = std::cos(wp * t), cm = std::cos(wm * t);
  const double sp = std::sin(wp * t), sm = std::sin(wm * t);

  FirstMoments out{};
  out.x1 = 0.5 * x0 * (cp + cm) + 0.5 * p0 / m * (sp / wp + sm / wm);
  out.p1 = 0.5 * p0 * (cp + cm) - 0.5 * x0 * m * (wp * sp + wm * sm);
  out.x2 = 0.5 * x0 * (cp - cm) + 0.5 * p0 / m * (sp / wp - sm / wm);
  out.p2 = 0.5 * p0 * (cp - cm) - 0.5 * x0 * m * (wp * sp - wm * sm);
  return out;
}

namespace {

// c_lin, c_conj of the lab-frame mode amplitude given the normal-mode
// combination sign (+ for mode 1, - for mode 2), then rotated by +omega t.
AmplitudeMap amplitude_map(const SNParams& params, double t, double sign) {
  const double w = params.omega;
  const double wp = params.omega_g_plus, wm = params.omega_g_minus;
  const double a = 0.5 * (std::cos(wp * t) + sign * std::cos(wm * t));
  const double b = 0.5 * w * (std::sin(wp * t) / wp + sign * std::sin(wm * t) / wm);
  const double c = -0.5 / w * (wp * std::sin(wp * t) + sign * wm * std::sin(wm * t));
  const std::complex<double> frame = std::polar(1.0, w * t);
  const std::complex<double> i(0.0, 1.0);
  return AmplitudeMap{frame * (a + 0.5 * i * (c - b)), frame * (0.5 * i * (b + c))};
}

}  // namespace

AmplitudeMap sn_mode1_amplitude_map(const SNParams& params, double t) {
  return amplitude_map(params, t, +1.0);
}

AmplitudeMap sn_mode2_amplitude_map(const SNParams& params, double t) {
  return amplitude_map(params, t, -1.0);
}

GaussianState sn_reduced_mode2(const SNParams& params, std::complex<double> alpha,
                               double t) {
  const FirstMoments mom = moments_coherent_init(params, alpha, t);
  const double xn = mom.x2 * std::sqrt(params.mass * params.omega / phys::hbar);
  const double pn = mom.p2 / std::sqrt(phys::hbar * params.mass * params.omega);
  const std::complex<double> beta_lab(xn / std::numbers::sqrt2, pn / std::numbers::sqrt2);
  const std::complex<double> beta = std::polar(1.0, params.omega * t) * beta_lab;
  return coherent(beta);
}

double sn_quantum_fidelity_analytic(const SNParams& params, const CoupledPairParams& pair,
                                    double lambda, double t) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("sn_quantum_fidelity: lambda must be > 0");
  const AmplitudeMap sn = sn_mode2_amplitude_map(params, t);
  const std::complex<double> i(0.0, 1.0);
  // quantum target: beta_Q = -i alpha sin(gamma_g t)
  const std::complex<double> c1 = sn.linear + i * std::sin(pair.gamma_g * t);
  return gaussian_average(c1, sn.conjugate, lambda);
}

MCEstimate sn_quantum_fidelity_mc(const SNParams& params, const CoupledPairParams& pair,
                                  const PriorEnsemble& prior, double t, std::int64_t n,
                                  int n_threads) {
  const std::complex<double> i(0.0, 1.0);
  const double s = std::sin(pair.gamma_g * t);
  auto kernel = [&, s, t](std::complex<double> alpha) {
    const GaussianState quantum = coherent(-i * alpha * s);
    const GaussianState sn = sn_reduced_mode2(params, alpha, t);
    return overlap(quantum, sn);
  };
  return mc_average_fidelity(kernel, prior, n, n_threads);
}

}  // namespace gravbench
