#pragma once

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

// Shared helpers for the test suites. The RK4 integrator here is the
// independent oracle for every closed-form solution under test; it must not
// call into the code paths it checks.

namespace testsupport {

inline std::vector<double> rk4_integrate(
    std::vector<double> y,
    const std::function<std::vector<double>(double, const std::vector<double>&)>& rhs,
    double t0, double t1, int steps) {
  const double h = (t1 - t0) / steps;
  auto axpy = [](const std::vector<double>& a, double s, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  double t = t0;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = rhs(t, y);
    const auto k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    const auto k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    const auto k4 = rhs(t + h, axpy(y, h, k3));
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    t += h;
  }
  return y;
}

struct TestRng {
  explicit TestRng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  std::complex<double> complex_in_disk(double radius) {
    while (true) {
      const double re = uniform(-radius, radius), im = uniform(-radius, radius);
      if (re * re + im * im <= radius * radius) return {re, im};
    }
  }
  std::mt19937_64 gen;
};

// Path of the CLI binary, forwarded by the test runner via --cli-path=...
extern std::string cli_path;

}  // namespace testsupport
