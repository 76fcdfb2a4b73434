#pragma once

#include <cstdint>
#include <vector>

#include "weber/weiszfeld.hpp"

namespace weber {

/// Perturbation schedule for the continuity probe. Directions live in the
/// joint m*n anchor space and must be unit norm; deltas are strictly
/// decreasing and nonnegative.
struct PerturbationSpec {
  std::vector<double> deltas;
  std::vector<Vector> directions;
  bool per_anchor = false;

  void validate(int joint_dim) const;

  /// `count` random unit directions in the joint space, seeded.
  static std::vector<Vector> random_directions(int count, std::uint64_t seed,
                                               int joint_dim);
  /// Embeds an n-dimensional unit direction into the block of one anchor.
  static Vector embed_anchor_direction(int anchor_index,
                                       const Vector& direction, int m);
};

struct StabilityRow {
  double delta = 0.0;
  int direction = 0;
  double solution_deviation = 0.0;  // ||M(a') - M(a)||
  double value_deviation = 0.0;     // |m(a') - m(a)|
  bool skipped = false;             // perturbation left the admissible set
};

struct StabilityReport {
  Vector base_solution;
  double base_value = 0.0;
  std::vector<StabilityRow> rows;  // sorted by delta descending per direction
};

/// The optimal value m(a): f at a solve with epsilon tightened to 1e-12.
double optimal_value(const ProblemInstance& instance, Tolerances tol = {});

/// The solution map M(a): the argmin from the same tightened solve.
Vector solution_map(const ProblemInstance& instance, Tolerances tol = {});

/// The m anchor blocks of the subdifferential of the optimal value
/// function, -w_i (M(a) - a_i) / ||M(a) - a_i||; single-valued exactly when
/// M(a) is not an anchor, and this throws AnchorProximityError otherwise
/// (the set-valued anchor branch is out of scope).
std::vector<Vector> value_subgradient(const ProblemInstance& instance,
                                      Tolerances tol = {});

/// Max over all m*n anchor coordinates of |central difference of m -
/// subgradient entry| at width h. Coordinates whose perturbed instances
/// leave the admissible set are skipped.
double finite_difference_check(const ProblemInstance& instance, double h = 1e-5,
                               Tolerances tol = {});

/// Solves the instance perturbed by delta * direction for every (delta,
/// direction) pair and reports ||M(a') - M(a)|| and |m(a') - m(a)|.
/// Perturbations that land on collinear anchors are flagged, not errored.
StabilityReport continuity_probe(const ProblemInstance& instance,
                                 const PerturbationSpec& spec,
                                 Tolerances tol = {});

}  // namespace weber
