#pragma once

#include <vector>

#include "weber/convex_sets.hpp"
#include "weber/types.hpp"

namespace weber {

/// The anchors a_1..a_m with their positive weights. Coincident anchors are
/// merged at construction by summing weights, which preserves the objective
/// exactly; after merging m >= 2 is required.
class AnchorSet {
 public:
  AnchorSet(std::vector<Vector> anchors, std::vector<double> weights);

  int size() const { return static_cast<int>(anchors_.size()); }
  int dimension() const { return static_cast<int>(anchors_[0].size()); }
  const Vector& anchor(int i) const { return anchors_[i]; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<Vector>& anchors() const { return anchors_; }
  const std::vector<double>& weights() const { return weights_; }

  double total_weight() const;
  Vector weighted_mean() const;

  /// Index and distance of the anchor nearest to x.
  std::pair<int, double> nearest_anchor(const Vector& x) const;

 private:
  std::vector<Vector> anchors_;
  std::vector<double> weights_;
};

/// True iff all the difference vectors a_i - a_1 lie within tol of a single
/// one-dimensional subspace, decided by orthogonalizing each difference
/// against the first and comparing the relative residual to tol. Two
/// distinct anchors are always collinear.
bool check_collinear(const std::vector<Vector>& anchors, double tol = 1e-10);

/// The full problem: anchors, weights and the constraint set. Immutable;
/// safe to share across concurrent solves. The collinearity flag is
/// computed at construction.
class ProblemInstance {
 public:
  ProblemInstance(AnchorSet anchors, ConstraintSet constraint);

  const AnchorSet& anchors() const { return anchors_; }
  const ConstraintSet& constraint() const { return constraint_; }
  int dimension() const { return anchors_.dimension(); }
  bool collinear() const { return collinear_; }

 private:
  AnchorSet anchors_;
  ConstraintSet constraint_;
  bool collinear_;
};

/// f(x) = sum_i w_i ||x - a_i||. Ignores the constraint; feasibility is
/// reported separately.
double evaluate_objective(const ProblemInstance& instance, const Vector& x);

/// The Weiszfeld map T. Off the anchors returns the distance-weighted mean
/// (sum w_i a_i / ||x - a_i||) / (sum w_i / ||x - a_i||); within eta_anchor
/// of an anchor returns that anchor exactly. Always lands in the convex
/// hull of the anchors.
Vector weiszfeld_map(const ProblemInstance& instance, const Vector& x,
                     double eta_anchor = 1e-12);

/// L(x) = sum_i w_i / ||x - a_i||, the curvature weight of the quadratic
/// surrogate. Requires min_i ||x - a_i|| >= eta_anchor.
double lipschitz_weight(const ProblemInstance& instance, const Vector& x,
                        double eta_anchor = 1e-12);

/// The quadratic surrogate h(x, x_ref) = sum_i w_i ||x - a_i||^2 /
/// ||x_ref - a_i||. Satisfies h(x_ref, x_ref) = f(x_ref) and
/// h(x, x_ref) >= 2 f(x) - f(x_ref). Requires x_ref off the anchors.
double auxiliary_value(const ProblemInstance& instance, const Vector& x,
                       const Vector& x_ref, double eta_anchor = 1e-12);

}  // namespace weber
