#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gravbench {

// Classical (LOCC / measure-and-prepare) simulation fidelity bounds for the
// coherent-state ensemble p(alpha) = (lambda/pi) exp(-lambda |alpha|^2).

struct PriorEnsemble {
  double lambda = 1e-3;  // inverse width of the Gaussian amplitude prior
  std::uint64_t seed = 0;
};

enum class BoundKind { locc_single, teleportation, external };

struct BoundCurve {
  std::vector<double> times;   // strictly increasing
  std::vector<double> values;  // in (0, 1]
  BoundKind kind = BoundKind::locc_single;
};

/// Validating constructor for BoundCurve.
BoundCurve make_bound_curve(std::vector<double> times, std::vector<double> values,
                            BoundKind kind);

/// Classical fidelity threshold for |alpha> -> |g alpha>, 0 <= g <= 1:
/// (1+lambda)/(1+lambda+g^2).
double amplification_bound(double lambda, double g);

/// Threshold for the beam-splitter dynamics at time t, g = sin(gamma_g t):
/// (1+lambda)/(1+lambda+sin^2(gamma_g t)). Monotone decreasing on [0, t_s].
double locc_bound(double lambda, double gamma_g, double t);

/// Inverse of locc_bound on [ (1+lambda)/(2+lambda), 1 ]:
/// t = asin(sqrt((1+lambda)(1-F)/F)) / gamma_g.
double time_to_fidelity(double lambda, double fidelity_target, double gamma_g);

/// Maximal interval (t0, t1) on which `fidelity` strictly exceeds `bound`.
/// Both curves must share the time grid. Crossings between grid points are
/// located by bisection on the linear interpolant (1e-6 relative in t).
std::optional<std::pair<double, double>> crossing_window(const BoundCurve& fidelity,
                                                         const BoundCurve& bound);

/// Load an externally supplied bound curve from a two-column CSV with header
/// `t,F` (comment lines starting with '#' are skipped).
BoundCurve load_bound_curve_csv(const std::string& path);

}  // namespace gravbench
