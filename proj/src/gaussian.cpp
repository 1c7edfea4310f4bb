#include "gravbench/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gravbench {

namespace {

Eigen::Matrix2d rotation2(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
  const int n = static_cast<int>(cov.rows()) / 2;
  std::vector<double> nu;
  if (n == 1) {
    nu.push_back(std::sqrt(std::max(0.0, cov.determinant())));
    return nu;
  }
  if (n == 2) {
    // Closed form for two modes from the 2x2 block structure. The smaller
    // eigenvalue uses 2 det/(delta + disc), which is (delta - disc)/2 without
    // the cancellation that would otherwise spoil near-pure states.
    const Eigen::Matrix2d a = cov.block<2, 2>(0, 0);
    const Eigen::Matrix2d b = cov.block<2, 2>(2, 2);
    const Eigen::Matrix2d c = cov.block<2, 2>(0, 2);
    const double delta = a.determinant() + b.determinant() + 2.0 * c.determinant();
    const double det = cov.determinant();
    const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * det));
    nu.push_back(std::sqrt(std::max(0.0, 2.0 * det / (delta + disc))));
    nu.push_back(std::sqrt(std::max(0.0, (delta + disc) / 2.0)));
    return nu;
  }
  // General case: eigenvalues of Omega*cov come in +-(i nu) pairs.
  Eigen::EigenSolver<Eigen::MatrixXd> es(symplectic_form(n) * cov, false);
  std::vector<double> imags(2 * n);
  for (int i = 0; i < 2 * n; ++i) imags[i] = std::abs(es.eigenvalues()[i].imag());
  std::sort(imags.begin(), imags.end());
  for (int i = 0; i < n; ++i) nu.push_back(0.5 * (imags[2 * i] + imags[2 * i + 1]));
  return nu;
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() < 2 || mean_.size() % 2 != 0)
    throw std::invalid_argument("GaussianState: mean must have even length >= 2");
  n_modes_ = static_cast<int>(mean_.size()) / 2;
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size())
    throw std::invalid_argument("GaussianState: cov must be 2n x 2n");
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("GaussianState: cov not symmetric");
  const auto nu = symplectic_eigenvalues(cov_);
  if (nu.front() < 0.5 - 1e-9)
    throw std::invalid_argument("GaussianState: unphysical covariance (nu_min < 1/2)");
}

SymplecticMap::SymplecticMap(Eigen::MatrixXd matrix_in, Eigen::VectorXd displacement_in)
    : matrix(std::move(matrix_in)), displacement(std::move(displacement_in)) {
  if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0 ||
      displacement.size() != matrix.rows())
    throw std::invalid_argument("SymplecticMap: bad dimensions");
  const int n = static_cast<int>(matrix.rows()) / 2;
  const Eigen::MatrixXd omega = symplectic_form(n);
  if ((matrix * omega * matrix.transpose() - omega).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("SymplecticMap: S Omega S^T != Omega");
}

GaussianState vacuum(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("vacuum: n_modes must be >= 1");
  return GaussianState(Eigen::VectorXd::Zero(2 * n_modes),
                       0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState coherent(std::complex<double> alpha) {
  Eigen::VectorXd mean(2);
  mean << std::numbers::sqrt2 * alpha.real(), std::numbers::sqrt2 * alpha.imag();
  return GaussianState(mean, 0.5 * Eigen::Matrix2d::Identity());
}

GaussianState thermal(double nbar) {
  if (nbar < 0.0) throw std::invalid_argument("thermal: nbar must be >= 0");
  return GaussianState(Eigen::VectorXd::Zero(2),
                       (nbar + 0.5) * Eigen::Matrix2d::Identity());
}

GaussianState squeezed_vacuum(const SqueezingSpec& spec) {
  if (!std::isfinite(spec.s) || !std::isfinite(spec.phi))
    throw std::invalid_argument("squeezed_vacuum: non-finite spec");
  const Eigen::Matrix2d r = rotation2(spec.phi / 2.0);
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = 0.5 * std::exp(-2.0 * spec.s);
  d(1, 1) = 0.5 * std::exp(2.0 * spec.s);
  return GaussianState(Eigen::VectorXd::Zero(2), r * d * r.transpose());
}

GaussianState tensor_product(const GaussianState& a, const GaussianState& b) {
  const int na = 2 * a.n_modes(), nb = 2 * b.n_modes();
  Eigen::VectorXd mean(na + nb);
  mean << a.mean(), b.mean();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(na + nb, na + nb);
  cov.topLeftCorner(na, na) = a.cov();
  cov.bottomRightCorner(nb, nb) = b.cov();
  return GaussianState(mean, cov);
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticMap& map) {
  if (map.matrix.rows() != 2 * state.n_modes())
    throw std::invalid_argument("apply_symplectic: dimension mismatch");
  return GaussianState(map.matrix * state.mean() + map.displacement,
                       map.matrix * state.cov() * map.matrix.transpose());
}

SymplecticMap beamsplitter_map(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::MatrixXd m(4, 4);
  // Heisenberg solution of exp(-i theta (a1 a2^dag + a1^dag a2)):
  //   x1 -> c x1 + s p2,  p1 -> c p1 - s x2,
  //   x2 -> c x2 + s p1,  p2 -> c p2 - s x1.
  m << c, 0, 0, s,
       0, c, -s, 0,
       0, s, c, 0,
       -s, 0, 0, c;
  return SymplecticMap(m, Eigen::VectorXd::Zero(4));
}

SymplecticMap mode_phase_map(double theta, int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) throw std::invalid_argument("mode_phase_map: bad mode");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  m.block<2, 2>(2 * mode, 2 * mode) = rotation2(theta);
  return SymplecticMap(m, Eigen::VectorXd::Zero(2 * n_modes));
}

SymplecticMap displacement_map(std::complex<double> beta, int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) throw std::invalid_argument("displacement_map: bad mode");
  Eigen::VectorXd d = Eigen::VectorXd::Zero(2 * n_modes);
  d(2 * mode) = std::numbers::sqrt2 * beta.real();
  d(2 * mode + 1) = std::numbers::sqrt2 * beta.imag();
  return SymplecticMap(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes), d);
}

GaussianState partial_trace(const GaussianState& state, int keep) {
  if (keep < 0 || keep >= state.n_modes())
    throw std::invalid_argument("partial_trace: mode index out of range");
  return GaussianState(state.mean().segment<2>(2 * keep),
                       state.cov().block<2, 2>(2 * keep, 2 * keep));
}

bool is_pure(const GaussianState& state, double tol) {
  for (double nu : symplectic_eigenvalues(state.cov()))
    if (std::abs(nu - 0.5) > tol) return false;
  return true;
}

double overlap(const GaussianState& a, const GaussianState& b, bool* neither_pure_warning) {
  if (a.n_modes() != b.n_modes())
    throw std::invalid_argument("overlap: dimension mismatch");
  if (neither_pure_warning) *neither_pure_warning = !is_pure(a) && !is_pure(b);
  const Eigen::MatrixXd sum = a.cov() + b.cov();
  const Eigen::VectorXd dr = a.mean() - b.mean();
  Eigen::LLT<Eigen::MatrixXd> llt(sum);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("overlap: covariance sum not positive definite");
  const Eigen::MatrixXd l = llt.matrixL();
  double logdet = 0.0;
  for (int i = 0; i < l.rows(); ++i) logdet += 2.0 * std::log(l(i, i));
  const double quad = dr.dot(llt.solve(dr));
  return std::exp(-0.5 * quad - 0.5 * logdet);
}

double min_quadrature_variance(const GaussianState& state, int mode) {
  if (mode < 0 || mode >= state.n_modes())
    throw std::invalid_argument("min_quadrature_variance: mode index out of range");
  const Eigen::Matrix2d blk = state.cov().block<2, 2>(2 * mode, 2 * mode);
  const double tr2 = 0.5 * (blk(0, 0) + blk(1, 1));
  const double disc = std::sqrt(std::pow(0.5 * (blk(0, 0) - blk(1, 1)), 2) +
                                blk(0, 1) * blk(1, 0));
  return tr2 - disc;
}

}  // namespace gravbench
