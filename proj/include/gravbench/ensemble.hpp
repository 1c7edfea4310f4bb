#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "gravbench/bounds.hpp"

namespace gravbench {

// Monte-Carlo averaging over the coherent-amplitude prior. The generator is
// counter-based: sample i depends only on (seed, i), so serial and parallel
// runs produce bit-identical streams.

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(n)
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// i-th sample from p(alpha) = (lambda/pi) exp(-lambda |alpha|^2):
/// Re and Im are independent N(0, 1/(2 lambda)).
std::complex<double> sample_prior(const PriorEnsemble& ensemble, std::uint64_t index);

/// Deterministic pairwise summation (reduction order independent of threading).
double pairwise_sum(const std::vector<double>& values);

/// Unbiased sample mean of f over the prior, with standard error. Requires
/// n >= 100; f must map into [0, 1] (violations abort). Result is independent
/// of n_threads.
MCEstimate mc_average_fidelity(const std::function<double(std::complex<double>)>& f,
                               const PriorEnsemble& ensemble, std::int64_t n,
                               int n_threads = 1);

/// Closed form of  Int d^2a (lambda/pi) e^{-lambda|a|^2} e^{-|c1 a + c2 a*|^2}
///   = lambda / sqrt((lambda+A)(lambda+B) - H^2),
/// A = |c1+c2|^2, B = |c1-c2|^2, H = -2 Im(c1 c2*).
double gaussian_average(std::complex<double> c_linear, std::complex<double> c_conjugate,
                        double lambda);

}  // namespace gravbench
