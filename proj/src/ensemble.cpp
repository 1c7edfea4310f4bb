#include "gravbench/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace gravbench {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based stream: mix seed and counter independently, then combine.
std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed) ^ splitmix64(~counter));
}

double to_open_unit(std::uint64_t bits) {
  // 53-bit mantissa, offset by half a ulp so the result lies in (0, 1).
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::complex<double> sample_prior(const PriorEnsemble& ensemble, std::uint64_t index) {
  if (!(ensemble.lambda > 0.0))
    throw std::invalid_argument("sample_prior: lambda must be > 0");
  const double u1 = to_open_unit(counter_bits(ensemble.seed, 2 * index));
  const double u2 = to_open_unit(counter_bits(ensemble.seed, 2 * index + 1));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double sigma = 1.0 / std::sqrt(2.0 * ensemble.lambda);
  const double phase = 2.0 * std::numbers::pi * u2;
  return {sigma * r * std::cos(phase), sigma * r * std::sin(phase)};
}

double pairwise_sum(const std::vector<double>& values) {
  struct Rec {
    static double sum(const double* v, std::size_t n) {
      if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
      }
      const std::size_t h = n / 2;
      return sum(v, h) + sum(v + h, n - h);
    }
  };
  return Rec::sum(values.data(), values.size());
}

MCEstimate mc_average_fidelity(const std::function<double(std::complex<double>)>& f,
                               const PriorEnsemble& ensemble, std::int64_t n,
                               int n_threads) {
  if (n < 100) throw std::invalid_argument("mc_average_fidelity: n must be >= 100");
  if (n_threads < 1) n_threads = 1;

  std::vector<double> vals(static_cast<std::size_t>(n));
  std::atomic<bool> out_of_range{false};
  auto worker = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      const double v = f(sample_prior(ensemble, static_cast<std::uint64_t>(i)));
      if (!(v >= 0.0 && v <= 1.0)) out_of_range = true;
      vals[static_cast<std::size_t>(i)] = v;
    }
  };
  if (n_threads == 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (n + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const std::int64_t lo = t * chunk;
      if (lo >= n) break;
      pool.emplace_back(worker, lo, std::min(n, lo + chunk));
    }
    for (auto& th : pool) th.join();
  }
  if (out_of_range)
    throw std::runtime_error("mc_average_fidelity: kernel returned value outside [0, 1]");

  const double mean = pairwise_sum(vals) / static_cast<double>(n);
  std::vector<double> sq(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double d = vals[i] - mean;
    sq[i] = d * d;
  }
  const double var = n > 1 ? pairwise_sum(sq) / static_cast<double>(n - 1) : 0.0;
  return MCEstimate{mean, std::sqrt(var / static_cast<double>(n)), n, ensemble.seed};
}

double gaussian_average(std::complex<double> c_linear, std::complex<double> c_conjugate,
                        double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("gaussian_average: lambda must be > 0");
  const double a = std::norm(c_linear + c_conjugate);
  const double b = std::norm(c_linear - c_conjugate);
  const double h = -2.0 * std::imag(c_linear * std::conj(c_conjugate));
  const double det = (lambda + a) * (lambda + b) - h * h;
  if (!(det > 0.0))
    throw std::logic_error("gaussian_average: quadratic form not positive definite");
  return lambda / std::sqrt(det);
}

}  // namespace gravbench
