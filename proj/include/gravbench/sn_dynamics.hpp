#pragma once

#include <complex>

#include "gravbench/ensemble.hpp"
#include "gravbench/gaussian.hpp"
#include "gravbench/quantum_dynamics.hpp"

namespace gravbench {

// Schrodinger-Newton mean-field dynamics: each oscillator is driven by the
// other's average position only, so product states stay products and second
// moments never change.

struct SNParams {
  double C1;             // G m^2 / d^2, N
  double C2;             // G m^2 / d^3, N/m
  double mass;           // kg
  double omega;          // rad/s
  double gamma_g;        // C2 / (m omega), rad/s
  double omega_g;        // sqrt(omega^2 - 2 C2/m)
  double omega_g_tilde;  // sqrt(omega^2 - C2/m)
  double omega_g_plus;   // omega sqrt(1 + kappa gamma_g/omega)
  double omega_g_minus;  // omega sqrt(1 - kappa gamma_g/omega)
  double kappa;          // mean-field coupling factor (1 or 2)
};

SNParams make_sn_params(double mass, double omega, double separation_d,
                        double kappa = 1.0);

/// Builds params from (omega, gamma_g) directly; the implied mass follows
/// from gamma_g = G m / (omega d^3).
SNParams sn_params_from_rates(double omega, double gamma_g, double kappa = 1.0,
                              double separation_d = 2e-4);

struct FirstMoments {
  double x1, p1, x2, p2;  // SI units
};

/// Drive seen by each oscillator after eliminating the mean positions:
/// J(t) = C1 - C1/(m omega_g^2) (1 - cos(omega_g t)).
double drive(const SNParams& params, double t);

/// First moments for vanishing initial expectation values (factor-2
/// normal-mode coupling, frequency omega_g).
FirstMoments moments_zero_init(const SNParams& params, double t);

/// First moments for |alpha> (x) |0>, beat-mode solution at omega_g^+/-.
/// x0 = sqrt(2 hbar/(m omega)) Re(alpha), p0 = sqrt(2 hbar m omega) Im(alpha).
FirstMoments moments_coherent_init(const SNParams& params, std::complex<double> alpha,
                                   double t);

/// Interaction-frame mode amplitude as a real-linear map of alpha:
/// beta(t) = linear * alpha + conjugate * conj(alpha).
struct AmplitudeMap {
  std::complex<double> linear;
  std::complex<double> conjugate;
};
AmplitudeMap sn_mode1_amplitude_map(const SNParams& params, double t);
AmplitudeMap sn_mode2_amplitude_map(const SNParams& params, double t);

/// Reduced SN state of oscillator 2 in the interaction frame: always a
/// coherent state (cov = I/2), mean from moments_coherent_init rotated by
/// +omega t.
GaussianState sn_reduced_mode2(const SNParams& params, std::complex<double> alpha,
                               double t);

/// Average fidelity between the quantum and SN mode-2 outputs over the
/// coherent prior: F_SN(t) = Int d^2a p(a) Tr[rho_{t,A2}(a) rho^SN_{t,A2}(a)].
double sn_quantum_fidelity_analytic(const SNParams& params, const CoupledPairParams& pair,
                                    double lambda, double t);
MCEstimate sn_quantum_fidelity_mc(const SNParams& params, const CoupledPairParams& pair,
                                  const PriorEnsemble& prior, double t, std::int64_t n,
                                  int n_threads = 1);

}  // namespace gravbench
