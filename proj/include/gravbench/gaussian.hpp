#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace gravbench {

// Gaussian-state algebra in natural units: hbar = 1, quadrature ordering
// (x1, p1, x2, p2, ...), vacuum variance 1/2.

struct SqueezingSpec {
  double s = 0.0;    // squeezing parameter, dimensionless
  double phi = 0.0;  // squeezing angle, radians
};

/// 2n x 2n symplectic form, block diagonal in [[0,1],[-1,0]] blocks.
Eigen::MatrixXd symplectic_form(int n_modes);

/// Symplectic eigenvalues of a covariance matrix, ascending. All >= 1/2 for
/// physical states, == 1/2 for pure ones.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov);

class GaussianState {
 public:
  // Validates: mean/cov dimensions, cov symmetry (1e-12 relative) and
  // physicality (symplectic eigenvalues >= 1/2 - 1e-9). Throws
  // std::invalid_argument on violation.
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  int n_modes() const { return n_modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

 private:
  int n_modes_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

struct SymplecticMap {
  // Validates S Omega S^T = Omega to 1e-10. Throws std::invalid_argument.
  SymplecticMap(Eigen::MatrixXd matrix, Eigen::VectorXd displacement);

  Eigen::MatrixXd matrix;
  Eigen::VectorXd displacement;
};

GaussianState vacuum(int n_modes);
GaussianState coherent(std::complex<double> alpha);
GaussianState thermal(double nbar);
GaussianState squeezed_vacuum(const SqueezingSpec& spec);

/// Two-mode product state a (x) b.
GaussianState tensor_product(const GaussianState& a, const GaussianState& b);

/// mean -> S mean + d, cov -> S cov S^T.
GaussianState apply_symplectic(const GaussianState& state, const SymplecticMap& map);

/// Two-mode map generated by exp(-i theta (a1 a2^dag + a1^dag a2)), free
/// phases dropped (interaction frame). theta = gamma_g * t.
SymplecticMap beamsplitter_map(double theta);

/// Phase-space rotation on one mode: alpha -> e^{i theta} alpha.
SymplecticMap mode_phase_map(double theta, int mode, int n_modes);

/// Displacement of one mode by beta (adds sqrt(2)(Re, Im) to its mean).
SymplecticMap displacement_map(std::complex<double> beta, int mode, int n_modes);

/// Marginal of the kept mode (0-based).
GaussianState partial_trace(const GaussianState& state, int keep);

bool is_pure(const GaussianState& state, double tol = 1e-8);

/// Tr[rho_a rho_b] = det(s_a + s_b)^{-1/2} exp(-1/2 dr^T (s_a+s_b)^{-1} dr),
/// dr = mean_a - mean_b. Equals the fidelity when at least one state is pure;
/// if neither is, *neither_pure_warning is set (value is still Tr[rho rho]).
double overlap(const GaussianState& a, const GaussianState& b,
               bool* neither_pure_warning = nullptr);

/// Smallest eigenvalue of the mode's 2x2 covariance block, i.e. the minimum
/// variance over all rotated quadratures of that mode.
double min_quadrature_variance(const GaussianState& state, int mode = 0);

}  // namespace gravbench
