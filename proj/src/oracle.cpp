#include "weber/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weber/errors.hpp"

namespace weber {

Vector subgradient_of_f(const ProblemInstance& instance, const Vector& x,
                        double eta_anchor) {
  if (x.size() != instance.dimension()) {
    throw DimensionError("point dimension does not match the instance");
  }
  const AnchorSet& anchors = instance.anchors();
  const auto [j, dist] = anchors.nearest_anchor(x);
  if (dist < eta_anchor) {
    // Minimal-norm element of R_j + w_j B(0,1).
    const Vector r = anchor_residual_vector(instance, j);
    const double r_norm = r.norm();
    if (r_norm <= anchors.weight(j)) return Vector::Zero(x.size());
    return r * (1.0 - anchors.weight(j) / r_norm);
  }
  Vector g = Vector::Zero(x.size());
  for (int i = 0; i < anchors.size(); ++i) {
    const Vector diff = x - anchors.anchor(i);
    g += anchors.weight(i) * diff / diff.norm();
  }
  return g;
}

SolveResult projected_subgradient(const ProblemInstance& instance,
                                  const OracleConfig& config) {
  if (!(config.step_scale > 0.0) || config.iterations <= 0) {
    throw Error("oracle step scale and iteration count must be > 0");
  }
  if (instance.collinear()) {
    throw CollinearError("oracle requires a non-collinear instance");
  }
  Vector y =
      project(instance.constraint(), instance.anchors().weighted_mean());
  SolveResult result;
  result.x_final = y;
  result.objective = evaluate_objective(instance, y);
  for (long k = 1; k <= config.iterations; ++k) {
    const Vector g = subgradient_of_f(instance, y);
    y = project(instance.constraint(),
                y - (config.step_scale / std::sqrt(static_cast<double>(k))) * g);
    const double fy = evaluate_objective(instance, y);
    if (fy < result.objective) {
      result.objective = fy;
      result.x_final = y;
    }
  }
  result.status = SolveStatus::kMaxIterations;
  result.iterations = static_cast<int>(std::min<long>(
      config.iterations, std::numeric_limits<int>::max()));
  return result;
}

Vector grid_search_2d(const ProblemInstance& instance,
                      const OracleConfig& config) {
  if (instance.dimension() != 2) {
    throw DimensionError("grid search supports dimension 2 only");
  }
  if (config.grid_resolution < 3) {
    throw Error("grid resolution must be >= 3");
  }
  Vector lower = config.grid_lower;
  Vector upper = config.grid_upper;
  if (lower.size() == 0 || upper.size() == 0) {
    // Anchor bounding box with a half-spread pad on each side.
    lower = Vector::Constant(2, std::numeric_limits<double>::infinity());
    upper = -lower;
    for (const Vector& a : instance.anchors().anchors()) {
      lower = lower.cwiseMin(a);
      upper = upper.cwiseMax(a);
    }
    const double pad = 0.5 * (1.0 + (upper - lower).norm());
    lower.array() -= pad;
    upper.array() += pad;
  }
  if (lower.size() != 2 || upper.size() != 2) {
    throw DimensionError("grid bounds must be 2-dimensional");
  }

  const int res = config.grid_resolution;
  Vector best_point;
  double best_value = std::numeric_limits<double>::infinity();
  const auto scan = [&](const Vector& lo, const Vector& hi) {
    for (int ix = 0; ix < res; ++ix) {
      for (int iy = 0; iy < res; ++iy) {
        Vector p(2);
        p[0] = lo[0] + (hi[0] - lo[0]) * ix / (res - 1);
        p[1] = lo[1] + (hi[1] - lo[1]) * iy / (res - 1);
        const Vector z = project(instance.constraint(), p);
        const double fz = evaluate_objective(instance, z);
        const bool better =
            fz < best_value ||
            (fz == best_value &&
             (z[0] < best_point[0] ||
              (z[0] == best_point[0] && z[1] < best_point[1])));
        if (better) {
          best_value = fz;
          best_point = z;
        }
      }
    }
  };

  scan(lower, upper);
  Vector half_width = 0.5 * (upper - lower);
  for (int zoom = 0; zoom < 3; ++zoom) {
    half_width /= 10.0;
    scan(best_point - half_width, best_point + half_width);
  }
  return best_point;
}

}  // namespace weber
