#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gravbench/gaussian.hpp"

namespace gravbench {

// Brute-force engine on a truncated Fock space. Serves as the independent
// oracle for the Gaussian module and verifies the A_tau bound operator
// numerically.

struct FockOperator {
  int dim = 0;    // truncation dimension per mode
  int modes = 1;  // 1 or 2
  Eigen::MatrixXcd matrix;
};

/// Ket of |alpha> truncated to dim (no renormalization).
Eigen::VectorXcd coherent_vector(std::complex<double> alpha, int dim);

/// |alpha><alpha|; throws if the truncated tail weight exceeds 1e-8.
/// Rule of thumb: dim >= |alpha|^2 + 6|alpha| + 12.
FockOperator fock_coherent(std::complex<double> alpha, int dim);

/// Geometric thermal state diag(nbar^n / (1+nbar)^{n+1}); tail < 1e-8.
FockOperator fock_thermal(double nbar, int dim);

/// Squeezed vacuum with even-photon amplitudes
/// (-e^{i phi} tanh s)^n sqrt((2n)!)/(2^n n!)/sqrt(cosh s), matching the
/// covariance convention of squeezed_vacuum(). Even-photon tails thin out
/// only like tanh^{2n}/sqrt(n), so the enforced tail bound is 1e-5.
FockOperator fock_squeezed(const SqueezingSpec& spec, int dim);

/// Two-mode beam splitter B_theta = exp(theta (b1 b2^dag - b1^dag b2)),
/// exponentiated blockwise over total photon number (scaling-and-squaring on
/// the truncated generator). Exactly photon-number preserving.
FockOperator fock_beamsplitter(double theta, int dim);

/// Tr[a b]; imaginary residue beyond 1e-10 raises.
double fock_overlap(const FockOperator& a, const FockOperator& b);

/// Average input state tau of the coherent prior: Fock-diagonal geometric
/// with ratio 1/(1+lambda).
FockOperator average_input_state(double lambda, int dim);

/// A_tau = chi Int d^2a/pi |g a><g a| (x) |sqrt(chi) a><sqrt(chi) a|,
/// chi = 1 + lambda, assembled by Gauss-Laguerre (radial, in r^2) x uniform
/// trapezoid (angular) quadrature. Node counts must be >= 32. When
/// check_convergence is set, the assembly is repeated with doubled node
/// counts; a max-entry change above 1e-4 raises.
FockOperator build_A_tau(double lambda, double g, int dim, int radial_nodes,
                         int angular_nodes, bool check_convergence = true);

// Utilities used by oracle checks.
FockOperator fock_tensor(const FockOperator& a, const FockOperator& b);
FockOperator fock_partial_trace(const FockOperator& op, int keep);
FockOperator apply_fock_unitary(const FockOperator& u, const FockOperator& rho);
std::vector<double> photon_distribution(const FockOperator& op);
double largest_eigenvalue(const FockOperator& op);

/// Nodes and weights of n-point Gauss-Laguerre quadrature (weight e^{-x}).
std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(int n);

}  // namespace gravbench
