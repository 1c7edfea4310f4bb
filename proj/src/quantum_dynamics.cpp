#include "gravbench/quantum_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "gravbench/constants.hpp"

namespace gravbench {

CoupledPairParams::CoupledPairParams(double omega_in, double gamma_g_in, double mass_in,
                                     double separation_d_in)
    : omega(omega_in), gamma_g(gamma_g_in), mass(mass_in), separation_d(separation_d_in) {
  if (!(omega > 0.0)) throw std::invalid_argument("CoupledPairParams: omega must be > 0");
  if (gamma_g < 0.0) throw std::invalid_argument("CoupledPairParams: gamma_g must be >= 0");
}

NoiseParams::NoiseParams(double gamma_in, double Nbar_in, double nbar0_in)
    : gamma(gamma_in), Nbar(Nbar_in), nbar0(nbar0_in) {
  if (gamma < 0.0 || Nbar < 0.0 || nbar0 < 0.0)
    throw std::invalid_argument("NoiseParams: all rates/occupations must be >= 0");
}

double swap_time(const CoupledPairParams& pair, int k) {
  if (k < 0) throw std::invalid_argument("swap_time: k must be >= 0");
  if (!(pair.gamma_g > 0.0)) throw std::invalid_argument("swap_time: gamma_g must be > 0");
  return (2 * k + 1) * phys::pi / (2.0 * pair.gamma_g);
}

EvolutionResult closed_evolve(const GaussianState& input, const CoupledPairParams& pair,
                              double t) {
  if (input.n_modes() != 2)
    throw std::invalid_argument("closed_evolve: input must have 2 modes");
  GaussianState out = apply_symplectic(input, beamsplitter_map(pair.gamma_g * t));
  GaussianState reduced = partial_trace(out, 1);
  return EvolutionResult{t, std::move(out), std::move(reduced)};
}

EvolutionResult open_evolve(const GaussianState& input, const CoupledPairParams& pair,
                            const NoiseParams& noise, double t, double dt) {
  if (input.n_modes() != 2)
    throw std::invalid_argument("open_evolve: input must have 2 modes");
  if (!(dt > 0.0)) throw std::invalid_argument("open_evolve: dt must be > 0");
  if (dt * std::max(noise.gamma, pair.gamma_g) >= 1e-2)
    throw std::invalid_argument("open_evolve: step size too large");
  if (t < 0.0) throw std::invalid_argument("open_evolve: t must be >= 0");

  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 2) = h(2, 0) = h(1, 3) = h(3, 1) = pair.gamma_g;
  const Eigen::Matrix4d drift =
      symplectic_form(2) * h - 0.5 * noise.gamma * Eigen::Matrix4d::Identity();
  const Eigen::Matrix4d diffusion =
      (2.0 * noise.Nbar + 1.0) * noise.gamma * Eigen::Matrix4d::Identity();

  Eigen::Matrix4d sigma = input.cov();
  Eigen::Vector4d rbar = input.mean();

  const long nsteps = t > 0.0 ? std::max<long>(1, std::lround(std::ceil(t / dt - 1e-12))) : 0;
  const double h_step = nsteps > 0 ? t / static_cast<double>(nsteps) : 0.0;

  auto rhs_cov = [&](const Eigen::Matrix4d& s) -> Eigen::Matrix4d {
    return drift * s + s * drift.transpose() + diffusion;
  };
  for (long step = 0; step < nsteps; ++step) {
    const Eigen::Matrix4d k1s = rhs_cov(sigma);
    const Eigen::Vector4d k1r = drift * rbar;
    const Eigen::Matrix4d k2s = rhs_cov(sigma + 0.5 * h_step * k1s);
    const Eigen::Vector4d k2r = drift * (rbar + 0.5 * h_step * k1r);
    const Eigen::Matrix4d k3s = rhs_cov(sigma + 0.5 * h_step * k2s);
    const Eigen::Vector4d k3r = drift * (rbar + 0.5 * h_step * k2r);
    const Eigen::Matrix4d k4s = rhs_cov(sigma + h_step * k3s);
    const Eigen::Vector4d k4r = drift * (rbar + h_step * k3r);
    sigma += (h_step / 6.0) * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    rbar += (h_step / 6.0) * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    sigma = 0.5 * (sigma + sigma.transpose());

    const auto nu = symplectic_eigenvalues(sigma);
    if (nu.front() < 0.5 - 1e-6)
      throw std::runtime_error("open_evolve: intermediate state unphysical");
  }

  GaussianState out(rbar, sigma);
  GaussianState reduced = partial_trace(out, 1);
  return EvolutionResult{t, std::move(out), std::move(reduced)};
}

std::complex<double> compensation_displacement(std::complex<double> alpha,
                                               const CoupledPairParams& pair,
                                               double gamma, double t) {
  const std::complex<double> i(0.0, 1.0);
  return -i * alpha * std::sin(pair.gamma_g * t) * (-std::expm1(-0.5 * gamma * t));
}

double fidelity_open_closed(const NoiseParams& noise, double gamma, double t) {
  if (t < 0.0) throw std::invalid_argument("fidelity_open_closed: t must be >= 0");
  // 2 e^{gt} / (2n + (4N+3)e^{gt} - 4N - 1), rearranged through expm1 so huge
  // Nbar with tiny gamma*t keeps full precision.
  const double egt = std::exp(gamma * t);
  const double denom =
      2.0 * noise.nbar0 + 2.0 + (4.0 * noise.Nbar + 3.0) * std::expm1(gamma * t);
  return 2.0 * egt / denom;
}

std::vector<std::pair<double, double>> squeezing_transfer_curve(
    const SqueezingSpec& spec, const CoupledPairParams& pair,
    const std::vector<double>& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0)
      throw std::invalid_argument("squeezing_transfer_curve: times must be >= 0");
    if (i > 0 && times[i] < times[i - 1])
      throw std::invalid_argument("squeezing_transfer_curve: times must be sorted");
  }
  const GaussianState input = tensor_product(squeezed_vacuum(spec), vacuum(1));
  std::vector<std::pair<double, double>> curve;
  curve.reserve(times.size());
  for (double t : times) {
    const EvolutionResult r = closed_evolve(input, pair, t);
    curve.emplace_back(t, min_quadrature_variance(r.reduced_mode2, 0));
  }
  return curve;
}

}  // namespace gravbench
