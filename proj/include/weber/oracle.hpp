#pragma once

#include <cstdint>

#include "weber/weiszfeld.hpp"

namespace weber {

/// Settings for the validation oracles. The subgradient method uses step
/// step_scale / sqrt(k); the 2-D grid search scans grid_resolution points
/// per axis over [grid_lower, grid_upper] (derived from the anchor bounding
/// box when left empty).
struct OracleConfig {
  double step_scale = 0.5;
  long iterations = 200000;
  Vector grid_lower;
  Vector grid_upper;
  int grid_resolution = 401;
  std::uint64_t seed = 1;
};

/// A subgradient of f at x: the gradient sum w_i (x - a_i) / ||x - a_i||
/// off the anchors, and at a_j the minimal-norm element of
/// R_j + w_j B(0,1), namely R_j max(0, 1 - w_j / ||R_j||).
Vector subgradient_of_f(const ProblemInstance& instance, const Vector& x,
                        double eta_anchor = 1e-12);

/// Projected subgradient descent with diminishing steps and best-iterate
/// tracking. Deliberately plain; used only to validate the main solver.
SolveResult projected_subgradient(const ProblemInstance& instance,
                                  const OracleConfig& config);

/// Exhaustive 2-D search: evaluates f at the projection of every grid point
/// of the bounding box, then refines with three successive 10x zooms around
/// the best point. Ties break toward the lexicographically smaller point.
Vector grid_search_2d(const ProblemInstance& instance,
                      const OracleConfig& config);

}  // namespace weber
