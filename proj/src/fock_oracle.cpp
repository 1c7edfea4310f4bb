#include "gravbench/fock_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace gravbench {

Eigen::VectorXcd coherent_vector(std::complex<double> alpha, int dim) {
  Eigen::VectorXcd v(dim);
  v(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) v(n) = v(n - 1) * alpha / std::sqrt(double(n));
  return v;
}

FockOperator fock_coherent(std::complex<double> alpha, int dim) {
  if (dim < 1) throw std::invalid_argument("fock_coherent: dim must be >= 1");
  const Eigen::VectorXcd v = coherent_vector(alpha, dim);
  const double tail = 1.0 - v.squaredNorm();
  if (tail > 1e-8)
    throw std::invalid_argument("fock_coherent: insufficient dim (tail weight > 1e-8)");
  return FockOperator{dim, 1, v * v.adjoint()};
}

FockOperator fock_thermal(double nbar, int dim) {
  if (nbar < 0.0) throw std::invalid_argument("fock_thermal: nbar must be >= 0");
  if (dim < 1) throw std::invalid_argument("fock_thermal: dim must be >= 1");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const double ratio = nbar / (1.0 + nbar);
  double p = 1.0 / (1.0 + nbar);
  double total = 0.0;
  for (int n = 0; n < dim; ++n) {
    m(n, n) = p;
    total += p;
    p *= ratio;
  }
  if (1.0 - total > 1e-8)
    throw std::invalid_argument("fock_thermal: insufficient dim (tail weight > 1e-8)");
  return FockOperator{dim, 1, std::move(m)};
}

FockOperator fock_squeezed(const SqueezingSpec& spec, int dim) {
  if (dim < 1) throw std::invalid_argument("fock_squeezed: dim must be >= 1");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  const std::complex<double> mu =
      -std::polar(std::tanh(spec.s), spec.phi);  // -e^{i phi} tanh s
  std::complex<double> coef = 1.0 / std::sqrt(std::cosh(spec.s));
  for (int n = 0; 2 * n < dim; ++n) {
    v(2 * n) = coef;
    coef *= mu * std::sqrt((2.0 * n + 1.0) / (2.0 * n + 2.0));
  }
  const double tail = 1.0 - v.squaredNorm();
  if (tail > 1e-5)
    throw std::invalid_argument("fock_squeezed: insufficient dim (tail weight > 1e-5)");
  return FockOperator{dim, 1, v * v.adjoint()};
}

FockOperator fock_beamsplitter(double theta, int dim) {
  if (dim < 2) throw std::invalid_argument("fock_beamsplitter: dim must be >= 2");
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
  // The generator b1 b2^dag - b1^dag b2 conserves n1 + n2, so exponentiate
  // each total-photon block separately. Basis index: n1 * dim + n2.
  for (int total = 0; total <= 2 * (dim - 1); ++total) {
    const int lo = std::max(0, total - (dim - 1));
    const int hi = std::min(total, dim - 1);
    const int size = hi - lo + 1;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    for (int k = 0; k + 1 < size; ++k) {
      const int n1 = lo + k + 1;  // b1 b2^dag : |n1, n2> -> |n1-1, n2+1>
      const int n2 = total - n1;
      const double amp = std::sqrt(double(n1) * double(n2 + 1));
      gen(k, k + 1) = amp;    // <n1-1, n2+1| G |n1, n2>
      gen(k + 1, k) = -amp;   // antisymmetric counterpart
    }
    const Eigen::MatrixXd blk = (theta * gen).exp();
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c)
        b((lo + r) * dim + (total - lo - r), (lo + c) * dim + (total - lo - c)) =
            blk(r, c);
  }
  return FockOperator{dim, 2, std::move(b)};
}

double fock_overlap(const FockOperator& a, const FockOperator& b) {
  if (a.dim != b.dim || a.modes != b.modes)
    throw std::invalid_argument("fock_overlap: operator shape mismatch");
  const std::complex<double> tr = (a.matrix * b.matrix).trace();
  if (std::abs(tr.imag()) > 1e-10)
    throw std::runtime_error("fock_overlap: trace has non-negligible imaginary part");
  return tr.real();
}

FockOperator average_input_state(double lambda, int dim) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("average_input_state: lambda must be > 0");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  double p = lambda / (1.0 + lambda);
  for (int n = 0; n < dim; ++n) {
    m(n, n) = p;
    p /= (1.0 + lambda);
  }
  return FockOperator{dim, 1, std::move(m)};
}

namespace {

Eigen::MatrixXd assemble_A_tau(double lambda, double g, int dim, int radial_nodes,
                               int angular_nodes) {
  const double chi = 1.0 + lambda;
  const double scale = g * g + chi;  // Gaussian decay rate of the integrand in r^2
  const auto [nodes, weights] = gauss_laguerre(radial_nodes);

  // Radial moment table S[p][q] = sum_i w_i (g r_i)^p (sqrt(chi) r_i)^q built
  // from unnormalized coherent monomials; the e^{-(g^2+chi)r^2} Gaussian is
  // absorbed into the Laguerre weight by the substitution w = (g^2+chi) r^2.
  const int pmax = 2 * dim - 2;
  Eigen::MatrixXd s_tab = Eigen::MatrixXd::Zero(pmax + 1, pmax + 1);
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = std::sqrt(nodes[i] / scale);
    std::vector<double> gp(pmax + 1), cp(pmax + 1);
    gp[0] = cp[0] = 1.0;
    for (int p = 1; p <= pmax; ++p) {
      gp[p] = gp[p - 1] * (g * r);
      cp[p] = cp[p - 1] * (std::sqrt(chi) * r);
    }
    for (int p = 0; p <= pmax; ++p)
      for (int q = 0; q <= pmax; ++q) s_tab(p, q) += weights[i] * gp[p] * cp[q];
  }

  std::vector<double> inv_sqrt_fact(dim);
  inv_sqrt_fact[0] = 1.0;
  for (int n = 1; n < dim; ++n)
    inv_sqrt_fact[n] = inv_sqrt_fact[n - 1] / std::sqrt(double(n));

  // The uniform angular sum (1/K) sum_k e^{i phi_k (m1+m2-n1-n2)} equals 1
  // when (m1+m2-n1-n2) is a multiple of K and 0 otherwise; apply it as an
  // exact selection rule.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim * dim, dim * dim);
  const double pref = chi / scale;
  for (int m1 = 0; m1 < dim; ++m1)
    for (int m2 = 0; m2 < dim; ++m2)
      for (int n1 = 0; n1 < dim; ++n1)
        for (int n2 = 0; n2 < dim; ++n2) {
          if ((m1 + m2 - n1 - n2) % angular_nodes != 0) continue;
          a(m1 * dim + m2, n1 * dim + n2) =
              pref * s_tab(m1 + n1, m2 + n2) * inv_sqrt_fact[m1] *
              inv_sqrt_fact[n1] * inv_sqrt_fact[m2] * inv_sqrt_fact[n2];
        }
  return a;
}

}  // namespace

FockOperator build_A_tau(double lambda, double g, int dim, int radial_nodes,
                         int angular_nodes, bool check_convergence) {
  if (!(lambda > 0.0)) throw std::invalid_argument("build_A_tau: lambda must be > 0");
  if (g < 0.0 || g > 1.0) throw std::invalid_argument("build_A_tau: g must be in [0, 1]");
  if (radial_nodes < 32 || angular_nodes < 32)
    throw std::invalid_argument("build_A_tau: node counts must be >= 32");
  Eigen::MatrixXd a = assemble_A_tau(lambda, g, dim, radial_nodes, angular_nodes);
  if (check_convergence) {
    const Eigen::MatrixXd fine =
        assemble_A_tau(lambda, g, dim, 2 * radial_nodes, 2 * angular_nodes);
    if ((a - fine).cwiseAbs().maxCoeff() > 1e-4)
      throw std::runtime_error("build_A_tau: quadrature not converged");
  }
  return FockOperator{dim, 2, a.cast<std::complex<double>>()};
}

FockOperator fock_tensor(const FockOperator& a, const FockOperator& b) {
  if (a.modes != 1 || b.modes != 1 || a.dim != b.dim)
    throw std::invalid_argument("fock_tensor: expects two single-mode operators of equal dim");
  const int d = a.dim;
  Eigen::MatrixXcd m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.block(i * d, j * d, d, d) = a.matrix(i, j) * b.matrix;
  return FockOperator{d, 2, std::move(m)};
}

FockOperator fock_partial_trace(const FockOperator& op, int keep) {
  if (op.modes != 2) throw std::invalid_argument("fock_partial_trace: expects 2 modes");
  if (keep != 0 && keep != 1) throw std::invalid_argument("fock_partial_trace: bad mode");
  const int d = op.dim;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        m(i, j) += keep == 0 ? op.matrix(i * d + k, j * d + k)
                             : op.matrix(k * d + i, k * d + j);
  return FockOperator{d, 1, std::move(m)};
}

FockOperator apply_fock_unitary(const FockOperator& u, const FockOperator& rho) {
  if (u.dim != rho.dim || u.modes != rho.modes)
    throw std::invalid_argument("apply_fock_unitary: shape mismatch");
  return FockOperator{rho.dim, rho.modes, u.matrix * rho.matrix * u.matrix.adjoint()};
}

std::vector<double> photon_distribution(const FockOperator& op) {
  if (op.modes != 1) throw std::invalid_argument("photon_distribution: expects 1 mode");
  std::vector<double> p(op.dim);
  for (int n = 0; n < op.dim; ++n) p[n] = op.matrix(n, n).real();
  return p;
}

double largest_eigenvalue(const FockOperator& op) {
  const Eigen::MatrixXcd herm = 0.5 * (op.matrix + op.matrix.adjoint());
  if (herm.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(herm.real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  // Nodes from the Laguerre Jacobi matrix (diag 2k+1, offdiag k). Weights via
  // w_i = x_i / ((n+1) L_{n+1}(x_i))^2; the eigenvector route would lose the
  // tiny weights of the outer nodes to the solver's absolute error floor.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jac(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) jac(k, k + 1) = jac(k + 1, k) = double(k + 1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac, Eigen::EigenvaluesOnly);
  std::vector<double> nodes(n), weights(n);
  for (int k = 0; k < n; ++k) {
    const double x = es.eigenvalues()(k);
    nodes[k] = x;
    // L_{n+1}(x) by the three-term recurrence, rescaled to dodge overflow.
    double lm = 1.0, lk = 1.0 - x;
    double log_scale = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double ln = ((2.0 * j + 1.0 - x) * lk - j * lm) / (j + 1.0);
      lm = lk;
      lk = ln;
      const double mag = std::max(std::abs(lm), std::abs(lk));
      if (mag > 1e250) {
        lm to_be_scaled;
      }
    }
    const double log_l = std::log(std::abs(lk)) + log_scale;
    weights[k] = std::exp(std::log(x) - 2.0 * (std::log(n + 1.0) + log_l));
  }
  return {nodes, weights};
}

}  // namespace gravbench
