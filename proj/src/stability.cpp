#include "weber/stability.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "weber/errors.hpp"

namespace weber {

namespace {

// Solver settings for evaluating m(a) and M(a).
Tolerances tightened(Tolerances tol) {
  tol.epsilon = 1e-12;
  return tol;
}

SolveResult solve_tightened(const ProblemInstance& instance,
                            const Tolerances& tol) {
  if (instance.collinear()) {
    throw CollinearError(
        "the optimal value function is defined off collinear anchor tuples");
  }
  SolveOptions options;
  options.record_iterates = false;
  return solve(instance, tightened(tol), options);
}

// Rebuilds the instance with anchors displaced by the given joint vector.
// Returns nothing when the perturbed anchors are collinear (or collapse),
// so probes can flag and skip rather than fail.
std::optional<ProblemInstance> perturbed_instance(
    const ProblemInstance& instance, const Vector& joint_displacement) {
  const AnchorSet& base = instance.anchors();
  const int m = base.size();
  const int n = base.dimension();
  std::vector<Vector> anchors;
  anchors.reserve(m);
  for (int i = 0; i < m; ++i) {
    anchors.push_back(base.anchor(i) + joint_displacement.segment(i * n, n));
  }
  try {
    ProblemInstance perturbed(AnchorSet(anchors, base.weights()),
                              instance.constraint());
    if (perturbed.collinear()) return std::nullopt;
    return perturbed;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

void PerturbationSpec::validate(int joint_dim) const {
  if (deltas.empty()) throw Error("perturbation deltas must be nonempty");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] < 0.0 || !std::isfinite(deltas[i])) {
      throw Error("perturbation deltas must be nonnegative");
    }
    if (i > 0 && deltas[i] >= deltas[i - 1]) {
      throw Error("perturbation deltas must be strictly decreasing");
    }
  }
  if (directions.empty()) throw Error("perturbation directions must be nonempty");
  for (const Vector& d : directions) {
    if (d.size() != joint_dim) {
      throw DimensionError("perturbation directions must live in the m*n space");
    }
    if (std::abs(d.norm() - 1.0) > 1e-12) {
      throw Error("perturbation directions must be unit norm");
    }
  }
}

std::vector<Vector> PerturbationSpec::random_directions(int count,
                                                        std::uint64_t seed,
                                                        int joint_dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vector> directions;
  directions.reserve(count);
  while (static_cast<int>(directions.size()) < count) {
    Vector d(joint_dim);
    for (int i = 0; i < joint_dim; ++i) d[i] = gauss(rng);
    const double norm = d.norm();
    if (norm == 0.0) continue;
    directions.push_back(d / norm);
  }
  return directions;
}

Vector PerturbationSpec::embed_anchor_direction(int anchor_index,
                                                const Vector& direction,
                                                int m) {
  const int n = static_cast<int>(direction.size());
  if (anchor_index < 0 || anchor_index >= m) {
    throw DimensionError("anchor index out of range");
  }
  Vector joint = Vector::Zero(m * n);
  joint.segment(anchor_index * n, n) = direction / direction.norm();
  return joint;
}

double optimal_value(const ProblemInstance& instance, Tolerances tol) {
  return solve_tightened(instance, tol).objective;
}

Vector solution_map(const ProblemInstance& instance, Tolerances tol) {
  return solve_tightened(instance, tol).x_final;
}

std::vector<Vector> value_subgradient(const ProblemInstance& instance,
                                      Tolerances tol) {
  const Vector solution = solution_map(instance, tol);
  const AnchorSet& anchors = instance.anchors();
  if (anchors.nearest_anchor(solution).second < tol.eta_anchor) {
    throw AnchorProximityError(
        "the optimal value subdifferential is set-valued at anchor "
        "solutions; only the smooth branch is provided");
  }
  std::vector<Vector> blocks;
  blocks.reserve(anchors.size());
  for (int i = 0; i < anchors.size(); ++i) {
    const Vector diff = solution - anchors.anchor(i);
    blocks.push_back(-anchors.weight(i) * diff / diff.norm());
  }
  return blocks;
}

double finite_difference_check(const ProblemInstance& instance, double h,
                               Tolerances tol) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error("finite difference width must be > 0");
  }
  const std::vector<Vector> blocks = value_subgradient(instance, tol);
  const int m = instance.anchors().size();
  const int n = instance.dimension();
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int d = 0; d < n; ++d) {
      Vector displacement = Vector::Zero(m * n);
      displacement[i * n + d] = h;
      const auto plus = perturbed_instance(instance, displacement);
      const auto minus = perturbed_instance(instance, -displacement);
      if (!plus || !minus) continue;  // skipped coordinate
      const double central = (optimal_value(*plus, tol) -
                              optimal_value(*minus, tol)) /
                             (2.0 * h);
      worst = std::max(worst, std::abs(central - blocks[i][d]));
    }
  }
  return worst;
}

StabilityReport continuity_probe(const ProblemInstance& instance,
                                 const PerturbationSpec& spec,
                                 Tolerances tol) {
  const int joint_dim = instance.anchors().size() * instance.dimension();
  spec.validate(joint_dim);
  StabilityReport report;
  report.base_solution = solution_map(instance, tol);
  report.base_value = evaluate_objective(instance, report.base_solution);
  for (std::size_t dir = 0; dir < spec.directions.size(); ++dir) {
    for (double delta : spec.deltas) {
      StabilityRow row;
      row.delta = delta;
      row.direction = static_cast<int>(dir);
      const auto perturbed =
          perturbed_instance(instance, delta * spec.directions[dir]);
      if (!perturbed) {
        row.skipped = true;
        report.rows.push_back(row);
        continue;
      }
      const SolveResult solved = solve_tightened(*perturbed, tol);
      row.solution_deviation = (solved.x_final - report.base_solution).norm();
      row.value_deviation = std::abs(solved.objective - report.base_value);
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace weber
