#pragma once

#include <random>
#include <vector>

#include "weber/types.hpp"

namespace weber {

enum class SetKind {
  kFree,
  kBall,
  kBox,
  kHalfspace,
  kHyperplane,
  kOrthant,
  kSimplex,
};

const char* to_string(SetKind kind);

/// Closed convex constraint set with exact projection, membership and
/// normal-cone distance. A closed catalog rather than a projection oracle:
/// the anchor optimality test needs normal-cone geometry that a black-box
/// projector cannot supply.
///
/// Halfspace is { x : <normal, x> <= offset }, Hyperplane { x : <normal, x>
/// = offset }, Simplex { x : x >= 0, sum x = scale }.
class ConstraintSet {
 public:
  static ConstraintSet MakeFree(int dim);
  static ConstraintSet MakeBall(Vector center, double radius);
  static ConstraintSet MakeBox(Vector lower, Vector upper);
  static ConstraintSet MakeHalfspace(Vector normal, double offset);
  static ConstraintSet MakeHyperplane(Vector normal, double offset);
  static ConstraintSet MakeOrthant(int dim);
  static ConstraintSet MakeSimplex(int dim, double scale);

  SetKind kind() const { return kind_; }
  int dimension() const { return dim_; }

  const Vector& center() const { return a_; }
  double radius() const { return s_; }
  const Vector& lower() const { return a_; }
  const Vector& upper() const { return b_; }
  const Vector& normal() const { return a_; }
  double offset() const { return s_; }
  double scale() const { return s_; }

 private:
  ConstraintSet(SetKind kind, int dim) : kind_(kind), dim_(dim) {}

  SetKind kind_;
  int dim_ = 0;
  Vector a_;  // center / lower / normal, by kind
  Vector b_;  // upper
  double s_ = 0.0;  // radius / offset / scale
};

/// Euclidean projection onto the set. Idempotent; identity on members.
Vector project(const ConstraintSet& set, const Vector& x);

/// Membership test: ||x - project(set, x)|| <= tol.
bool contains(const ConstraintSet& set, const Vector& x, double tol = 1e-9);

/// Euclidean distance from v to the normal cone N(x, C). Requires
/// contains(set, x, 1e-9); throws InfeasiblePointError otherwise.
/// Exact closed forms per variant; the simplex case enumerates active
/// supports, which caps that variant at small dimensions.
double normal_cone_distance(const ConstraintSet& set, const Vector& x,
                            const Vector& v);

/// Draws a random member of the set. `scale` sets the spread of the
/// underlying Gaussian/exponential draws; deterministic given rng state.
Vector sample_feasible(const ConstraintSet& set, std::mt19937_64& rng,
                       double scale = 1.0);

/// Extreme points useful as witnesses in variational-inequality sampling:
/// the vertices of bounded variants and far points along unbounded
/// directions. `direction` selects the support-maximizing vertex where the
/// set is bounded; `around` anchors the construction for unbounded sets.
std::vector<Vector> extreme_points(const ConstraintSet& set,
                                   const Vector& around,
                                   const Vector& direction);

}  // namespace weber
