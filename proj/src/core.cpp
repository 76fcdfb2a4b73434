#include "weber/core.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "weber/errors.hpp"

namespace weber {

void Tolerances::validate() const {
  if (!(epsilon > 0.0) || !(eta_anchor > 0.0) || !(delta_escape > 0.0) ||
      max_iter <= 0) {
    throw Error("tolerances must be strictly positive");
  }
}

AnchorSet::AnchorSet(std::vector<Vector> anchors, std::vector<double> weights) {
  if (anchors.size() != weights.size()) {
    throw DimensionError("anchor and weight counts differ");
  }
  if (anchors.size() < 2) {
    throw Error("at least two anchors are required");
  }
  const Eigen::Index dim = anchors[0].size();
  if (dim < 1) throw DimensionError("anchor dimension must be >= 1");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (anchors[i].size() != dim) {
      throw DimensionError("anchor " + std::to_string(i) +
                           " has mismatched dimension");
    }
    if (!is_finite(anchors[i])) {
      throw Error("anchor " + std::to_string(i) + " has non-finite entries");
    }
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw Error("weight " + std::to_string(i) + " must be finite and > 0");
    }
  }
  // Merge exact duplicates by summing weights; preserves f exactly.
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    bool merged = false;
    for (std::size_t k = 0; k < anchors_.size() && !merged; ++k) {
      if (anchors_[k] == anchors[i]) {
        weights_[k] += weights[i];
        merged = true;
      }
    }
    if (!merged) {
      anchors_.push_back(std::move(anchors[i]));
      weights_.push_back(weights[i]);
    }
  }
  if (anchors_.size() < 2) {
    throw Error("at least two distinct anchors are required");
  }
}

double AnchorSet::total_weight() const {
  double total = 0.0;
  for (double w : weights_) total += w;
  return total;
}

Vector AnchorSet::weighted_mean() const {
  Vector mean = Vector::Zero(dimension());
  for (int i = 0; i < size(); ++i) mean += weights_[i] * anchors_[i];
  return mean / total_weight();
}

std::pair<int, double> AnchorSet::nearest_anchor(const Vector& x) const {
  int best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    const double d = (x - anchors_[i]).norm();
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return {best, best_dist};
}

bool check_collinear(const std::vector<Vector>& anchors, double tol) {
  if (anchors.size() < 2) {
    throw Error("collinearity needs at least two anchors");
  }
  Vector axis;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    const Vector diff = anchors[i] - anchors[0];
    const double norm = diff.norm();
    if (norm == 0.0) continue;
    if (axis.size() == 0) {
      axis = diff / norm;
      continue;
    }
    const Vector residual = diff - diff.dot(axis) * axis;
    if (residual.norm() > tol * norm) return false;
  }
  return true;
}

ProblemInstance::ProblemInstance(AnchorSet anchors, ConstraintSet constraint)
    : anchors_(std::move(anchors)),
      constraint_(std::move(constraint)),
      collinear_(check_collinear(anchors_.anchors())) {
  if (constraint_.dimension() != anchors_.dimension()) {
    throw DimensionError("constraint dimension " +
                         std::to_string(constraint_.dimension()) +
                         " does not match anchor dimension " +
                         std::to_string(anchors_.dimension()));
  }
}

namespace {

void require_dim(const ProblemInstance& instance, const Vector& x) {
  if (x.size() != instance.dimension()) {
    throw DimensionError("point dimension " + std::to_string(x.size()) +
                         " does not match instance dimension " +
                         std::to_string(instance.dimension()));
  }
}

}  // namespace

double evaluate_objective(const ProblemInstance& instance, const Vector& x) {
  require_dim(instance, x);
  const AnchorSet& a = instance.anchors();
  double value = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    value += a.weight(i) * (x - a.anchor(i)).norm();
  }
  return value;
}

Vector weiszfeld_map(const ProblemInstance& instance, const Vector& x,
                     double eta_anchor) {
  require_dim(instance, x);
  const AnchorSet& a = instance.anchors();
  const auto [j, dist] = a.nearest_anchor(x);
  if (dist < eta_anchor) return a.anchor(j);
  Vector numerator = Vector::Zero(x.size());
  double denominator = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double coeff = a.weight(i) / (x - a.anchor(i)).norm();
    numerator += coeff * a.anchor(i);
    denominator += coeff;
  }
  return numerator / denominator;
}

double lipschitz_weight(const ProblemInstance& instance, const Vector& x,
                        double eta_anchor) {
  require_dim(instance, x);
  const AnchorSet& a = instance.anchors();
  if (a.nearest_anchor(x).second < eta_anchor) {
    throw AnchorProximityError("lipschitz_weight is undefined at an anchor");
  }
  double total = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    total += a.weight(i) / (x - a.anchor(i)).norm();
  }
  return total;
}

double auxiliary_value(const ProblemInstance& instance, const Vector& x,
                       const Vector& x_ref, double eta_anchor) {
  require_dim(instance, x);
  require_dim(instance, x_ref);
  const AnchorSet& a = instance.anchors();
  if (a.nearest_anchor(x_ref).second < eta_anchor) {
    throw AnchorProximityError(
        "auxiliary_value needs a reference point off the anchors");
  }
  double value = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    value += a.weight(i) * (x - a.anchor(i)).squaredNorm() /
             (x_ref - a.anchor(i)).norm();
  }
  return value;
}

}  // namespace weber
