#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "gravbench/bounds.hpp"
#include "gravbench/fock_oracle.hpp"
#include "gravbench/quantum_dynamics.hpp"

using namespace gravbench;

TEST_CASE("amplification_bound") {
  CHECK(amplification_bound(0.3, 0.0) == doctest::Approx(1.0));
  for (double lambda : {1e-3, 0.5, 2.0})
    CHECK(amplification_bound(lambda, 1.0) ==
          doctest::Approx((1.0 + lambda) / (2.0 + lambda)).epsilon(1e-15));
  CHECK_THROWS_AS(amplification_bound(0.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(amplification_bound(0.5, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(amplification_bound(0.0, 0.5), std::invalid_argument);

  SUBCASE("matches the A_tau vacuum element from the Fock oracle") {
    const auto a = build_A_tau(0.5, 0.5, 20, 40, 40, false);
    CHECK(std::abs(a.matrix(0, 0).real() - amplification_bound(0.5, 0.5)) < 1e-3);
  }
}

TEST_CASE("locc_bound") {
  const double gamma_g = 4.74e-4;
  const double ts = std::numbers::pi / (2.0 * gamma_g);
  CHECK(locc_bound(1e-3, gamma_g, 0.0) == doctest::Approx(1.0));
  CHECK(locc_bound(1e-3, gamma_g, ts) == doctest::Approx(1.001 / 2.001).epsilon(1e-12));
  CHECK(locc_bound(1.0, gamma_g, ts) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  SUBCASE("monotone decreasing in t, increasing in lambda") {
    double prev = 1.1;
    for (int i = 1; i <= 40; ++i) {
      const double v = locc_bound(1e-2, gamma_g, ts * i / 40.0);
      CHECK(v < prev);
      prev = v;
    }
    for (double t : {0.2 * ts, 0.7 * ts, ts})
      CHECK(locc_bound(1e-2, gamma_g, t) < locc_bound(1e-1, gamma_g, t));
  }
  SUBCASE("endpoint identity") {
    for (double lambda : {1e-3, 1e-2, 0.3})
      CHECK(std::abs(locc_bound(lambda, gamma_g, ts) -
                     (1.0 + lambda) / (2.0 + lambda)) < 1e-12);
  }
}

TEST_CASE("time_to_fidelity") {
  const double gamma_g = 4.74e-4;
  CHECK(time_to_fidelity(1e-3, 1.0, gamma_g) == doctest::Approx(0.0));

  SUBCASE("quoted run-time target within 2%") {
    const double t = time_to_fidelity(1e-3, 0.9, gamma_g);
    CHECK(std::abs(t - 7.23e2) / 7.23e2 < 0.02);
  }
  SUBCASE("round trip") {
    for (double f : {0.95, 0.8, 0.6, 0.502}) {
      const double t = time_to_fidelity(1e-3, f, gamma_g);
      CHECK(std::abs(locc_bound(1e-3, gamma_g, t) - f) < 1e-10);
    }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(time_to_fidelity(1e-3, 0.4, gamma_g), std::invalid_argument);
    CHECK_THROWS_AS(time_to_fidelity(1e-3, 1.01, gamma_g), std::invalid_argument);
    // endpoint maps to the swap time
    const double fmin = (1.0 + 1e-3) / (2.0 + 1e-3);
    CHECK(time_to_fidelity(1e-3, fmin, gamma_g) ==
          doctest::Approx(std::numbers::pi / (2.0 * gamma_g)).epsilon(1e-12));
  }
}

TEST_CASE("crossing_window") {
  const double gamma_g = 4.74e-4;
  const double ts = std::numbers::pi / (2.0 * gamma_g);
  const int n = 400;
  std::vector<double> times(n);
  for (int i = 0; i < n; ++i) times[i] = ts * i / (n - 1);

  auto bound_vals = [&] {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = locc_bound(1e-3, gamma_g, times[i]);
    return v;
  }();
  const auto bound = make_bound_curve(times, bound_vals, BoundKind::locc_single);

  SUBCASE("unit fidelity exceeds everywhere after t=0") {
    const auto fid = make_bound_curve(times, std::vector<double>(n, 1.0),
                                      BoundKind::external);
    const auto w = crossing_window(fid, bound);
    REQUIRE(w.has_value());
    CHECK(w->first <= times[1]);
    CHECK(w->second == doctest::Approx(times.back()));
  }
  SUBCASE("fidelity below the bound floor gives no window") {
    const auto fid = make_bound_curve(times, std::vector<double>(n, 0.4),
                                      BoundKind::external);
    CHECK_FALSE(crossing_window(fid, bound).has_value());
  }
  SUBCASE("open-dynamics fidelity vs the bound has a window") {
    const NoiseParams noise(1e-13, 1e10, 0.1);
    std::vector<double> fvals(n);
    for (int i = 0; i < n; ++i)
      fvals[i] = fidelity_open_closed(noise, 1e-13, times[i]);
    const auto fid = make_bound_curve(times, fvals, BoundKind::external);
    const auto w = crossing_window(fid, bound);
    REQUIRE(w.has_value());
    CHECK(w->second > w->first);
  }
  SUBCASE("mismatched grids throw") {
    std::vector<double> other(times);
    other[5] += 1.0;
    const auto fid = make_bound_curve(other, std::vector<double>(n, 1.0),
                                      BoundKind::external);
    CHECK_THROWS_AS(crossing_window(fid, bound), std::invalid_argument);
  }
}

TEST_CASE("external curve CSV loader") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "gravbench_test_bound.csv";
  {
    std::ofstream out(path);
    out << "# comment\n t , F \n0.0,1.0\n1.0,0.9\n2.5,0.8\n";
  }
  const auto curve = load_bound_curve_csv(path.string());
  CHECK(curve.kind == BoundKind::external);
  REQUIRE(curve.times.size() == 3);
  CHECK(curve.values[2] == doctest::Approx(0.8));
  fs::remove(path);

  CHECK_THROWS_AS(load_bound_curve_csv("/nonexistent/file.csv"), std::invalid_argument);
}
