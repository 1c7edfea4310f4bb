#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gravbench/gaussian.hpp"

namespace gravbench {

// Closed (interaction-frame beam splitter) and open (Markovian Lyapunov)
// dynamics of the gravitationally coupled pair.

struct CoupledPairParams {
  // Validates omega > 0 and gamma_g >= 0. A strictly positive gamma_g is
  // required wherever a swap time exists.
  CoupledPairParams(double omega, double gamma_g, double mass = 0.0,
                    double separation_d = 0.0);

  double omega;         // mechanical frequency, rad/s
  double gamma_g;       // gravitational coupling rate, rad/s
  double mass;          // kg, used only for unit conversions
  double separation_d;  // m

  bool rwa_valid() const { return gamma_g / omega < 0.1; }
};

struct NoiseParams {
  NoiseParams(double gamma, double Nbar, double nbar0);

  double gamma;  // phonon decay rate, rad/s
  double Nbar;   // bath thermal occupation
  double nbar0;  // initial thermal occupation of each oscillator
};

struct EvolutionResult {
  double time;
  GaussianState state;          // two modes
  GaussianState reduced_mode2;  // partial_trace(state, 1)
};

/// t_s = (2k+1) pi / (2 gamma_g).
double swap_time(const CoupledPairParams& pair, int k = 0);

/// Applies beamsplitter_map(gamma_g * t).
EvolutionResult closed_evolve(const GaussianState& input, const CoupledPairParams& pair,
                              double t);

/// Fixed-step RK4 integration of
///   d(sigma)/dt = A sigma + sigma A^T + D,   d(rbar)/dt = A rbar,
/// A = Omega H - (gamma/2) I, D = (2 Nbar + 1) gamma I, H the gamma_g coupling
/// matrix. Requires dt * max(gamma, gamma_g) < 1e-2; aborts if an intermediate
/// state turns unphysical (symplectic eigenvalue < 1/2 - 1e-6).
EvolutionResult open_evolve(const GaussianState& input, const CoupledPairParams& pair,
                            const NoiseParams& noise, double t, double dt);

/// Displacement undoing the deterministic amplitude decay of the damped
/// dynamics: alpha_tilde = -i alpha sin(gamma_g t) (1 - e^{-gamma t/2}).
std::complex<double> compensation_displacement(std::complex<double> alpha,
                                               const CoupledPairParams& pair,
                                               double gamma, double t);

/// Closed form of the compensated open-vs-closed overlap:
/// F = 2 e^{gamma t} / (2 nbar + (4 Nbar + 3) e^{gamma t} - 4 Nbar - 1).
double fidelity_open_closed(const NoiseParams& noise, double gamma, double t);

/// Mode-2 minimum quadrature variance under closed evolution from
/// squeezed(spec) (x) vacuum, sampled at the given times.
std::vector<std::pair<double, double>> squeezing_transfer_curve(
    const SqueezingSpec& spec, const CoupledPairParams& pair,
    const std::vector<double>& times);

}  // namespace gravbench
