#pragma once

#include <Eigen/Core>

namespace weber {

/// Point in finite-dimensional real space. Entries must be finite.
using Vector = Eigen::VectorXd;

/// Returns true if every entry of x is finite (no NaN/Inf).
inline bool is_finite(const Vector& x) { return x.allFinite(); }

/// Solver tolerances. epsilon is the step-norm stopping tolerance,
/// eta_anchor the anchor-proximity threshold below which the anchor branch
/// of the Weiszfeld map fires, delta_escape the initial anchor-escape step.
struct Tolerances {
  double epsilon = 1e-8;
  double eta_anchor = 1e-12;
  int max_iter = 10000;
  double delta_escape = 1e-6;

  /// Throws Error unless every field is strictly positive.
  void validate() const;
};

}  // namespace weber
