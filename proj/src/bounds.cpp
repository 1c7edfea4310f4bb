#include "gravbench/bounds.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gravbench {

BoundCurve make_bound_curve(std::vector<double> times, std::vector<double> values,
                            BoundKind kind) {
  if (times.size() != values.size() || times.empty())
    throw std::invalid_argument("make_bound_curve: size mismatch or empty");
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i] < times[i + 1]))
      throw std::invalid_argument("make_bound_curve: times must be strictly increasing");
  for (double v : values)
    if (!(v > 0.0 && v <= 1.0))
      throw std::invalid_argument("make_bound_curve: values must lie in (0, 1]");
  return BoundCurve{std::move(times), std::move(values), kind};
}

double amplification_bound(double lambda, double g) {
  if (!(lambda > 0.0)) throw std::invalid_argument("amplification_bound: lambda must be > 0");
  if (g < 0.0 || g > 1.0)
    throw std::invalid_argument("amplification_bound: g must lie in [0, 1]");
  return (1.0 + lambda) / (1.0 + lambda + g * g);
}

double locc_bound(double lambda, double gamma_g, double t) {
  if (!(lambda > 0.0)) throw std::invalid_argument("locc_bound: lambda must be > 0");
  if (t < 0.0) throw std::invalid_argument("locc_bound: t must be >= 0");
  const double s = std::sin(gamma_g * t);
  return (1.0 + lambda) / (1.0 + lambda + s * s);
}

double time_to_fidelity(double lambda, double fidelity_target, double gamma_g) {
  if (!(lambda > 0.0)) throw std::invalid_argument("time_to_fidelity: lambda must be > 0");
  if (!(gamma_g > 0.0)) throw std::invalid_argument("time_to_fidelity: gamma_g must be > 0");
  const double fmin = (1.0 + lambda) / (2.0 + lambda);
  if (!(fidelity_target >= fmin && fidelity_target <= 1.0))
    throw std::invalid_argument("time_to_fidelity: target outside [(1+l)/(2+l), 1]");
  const double arg =
      std::sqrt((1.0 + lambda) * (1.0 - fidelity_target) / fidelity_target);
  return std::asin(std::min(1.0, arg)) / gamma_g;
}

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys,
              std::size_t i, double x) {
  const double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + w * (ys[i + 1] - ys[i]);
}

// Root of the interpolated difference on [times[i], times[i+1]], by bisection.
double bisect_crossing(const BoundCurve& f, const BoundCurve& b, std::size_t i,
                       bool rising) {
  double lo = f.times[i], hi = f.times[i + 1];
  const double span = hi - lo;
  auto diff = [&](double t) {
    return interp(f.times, f.values, i, t) - interp(b.times, b.values, i, t);
  };
  while (hi - lo > 1e-6 * std::max(span, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    const bool pos = diff(mid) > 0.0;
    if (pos == rising) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<std::pair<double, double>> crossing_window(const BoundCurve& fidelity,
                                                         const BoundCurve& bound) {
  if (fidelity.times.size() != bound.times.size())
    throw std::invalid_argument("crossing_window: mismatched grids");
  for (std::size_t i = 0; i < fidelity.times.size(); ++i)
    if (fidelity.times[i] != bound.times[i])
      throw std::invalid_argument("crossing_window: mismatched grids");

  const std::size_t n = fidelity.times.size();
  std::optional<std::pair<double, double>> best;
  std::size_t i = 0;
  while (i < n) {
    if (fidelity.values[i] > bound.values[i]) {
      std::size_t j = i;
      while (j + 1 < n && fidelity.values[j + 1] > bound.values[j + 1]) ++j;
      double t0 = fidelity.times[i];
      double t1 = fidelity.times[j];
      if (i > 0) t0 = bisect_crossing(fidelity, bound, i - 1, /*rising=*/true);
      if (j + 1 < n) t1 = bisect_crossing(fidelity, bound, j, /*rising=*/false);
      if (!best || (t1 - t0) > (best->second - best->first)) best = {t0, t1};
      i = j + 1;
    } else {
      ++i;
    }
  }
  return best;
}

BoundCurve load_bound_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_bound_curve_csv: cannot open " + path);
  std::string line;
  bool header_seen = false;
  std::vector<double> ts, fs;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      std::string squashed;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) squashed += c;
      if (squashed != "t,F")
        throw std::invalid_argument("load_bound_curve_csv: expected header 't,F'");
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b))
      throw std::invalid_argument("load_bound_curve_csv: malformed row: " + line);
    ts.push_back(std::stod(a));
    fs.push_back(std::stod(b));
  }
  if (!header_seen) throw std::invalid_argument("load_bound_curve_csv: missing header");
  return make_bound_curve(std::move(ts), std::move(fs), BoundKind::external);
}

}  // namespace gravbench
