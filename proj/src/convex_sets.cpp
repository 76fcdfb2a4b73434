#include "weber/convex_sets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "weber/errors.hpp"

namespace weber {

namespace {

// Activity tolerance for deciding which constraints are tight at a point.
// One order looser than projection round-off, matching the membership
// default.
constexpr double kActiveTol = 1e-9;

// Support enumeration for the simplex normal cone becomes 2^dim in the
// worst case; the catalog caps the variant accordingly.
constexpr int kSimplexMaxDim = 12;

void require_dim(const ConstraintSet& set, const Vector& x) {
  if (x.size() != set.dimension()) {
    throw DimensionError("constraint set dimension " +
                         std::to_string(set.dimension()) +
                         " does not match vector dimension " +
                         std::to_string(x.size()));
  }
}

void require_finite(const Vector& x, const char* label) {
  if (!is_finite(x)) {
    throw Error(std::string(label) + " has non-finite entries");
  }
}

// Projection onto { y >= 0, sum y = scale } by sorting and thresholding.
Vector project_simplex(const Vector& x, double scale) {
  const int n = static_cast<int>(x.size());
  std::vector<double> u(x.data(), x.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (int k = 0; k < n; ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - scale) / (k + 1);
    if (u[k] - candidate > 0.0) theta = candidate;
  }
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = std::max(x[i] - theta, 0.0);
  return out;
}

// Distance from v to the ray { t * direction : t >= 0 }, direction nonzero.
double distance_to_ray(const Vector& v, const Vector& direction) {
  const double t = std::max(0.0, v.dot(direction) / direction.squaredNorm());
  return (v - t * direction).norm();
}

// Distance from v to the simplex normal cone
//   { g : g_i = mu on the support, g_i <= mu off it },
// by enumerating which off-support coordinates sit at the common level mu.
// Exactly one subset is consistent; the scan keeps the best anyway.
double simplex_cone_distance(const Vector& x, const Vector& v) {
  const int n = static_cast<int>(x.size());
  std::vector<int> support, zero;
  for (int i = 0; i < n; ++i) {
    (x[i] > kActiveTol ? support : zero).push_back(i);
  }
  const int nz = static_cast<int>(zero.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nz); ++mask) {
    double sum = 0.0;
    int count = static_cast<int>(support.size());
    for (int i : support) sum += v[i];
    for (int z = 0; z < nz; ++z) {
      if (mask >> z & 1) {
        sum += v[zero[z]];
        ++count;
      }
    }
    if (count == 0) continue;
    const double mu = sum / count;
    bool consistent = true;
    for (int z = 0; z < nz && consistent; ++z) {
      if (mask >> z & 1) {
        consistent = v[zero[z]] >= mu - 1e-12;  // clamped coordinates stick out
      } else {
        consistent = v[zero[z]] <= mu + 1e-12;  // free coordinates stay below
      }
    }
    if (!consistent) continue;
    double dist2 = 0.0;
    for (int i : support) dist2 += (v[i] - mu) * (v[i] - mu);
    for (int z = 0; z < nz; ++z) {
      if (mask >> z & 1) {
        dist2 += (v[zero[z]] - mu) * (v[zero[z]] - mu);
      }
    }
    best = std::min(best, dist2);
  }
  return std::sqrt(best);
}

}  // namespace

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::kFree: return "free";
    case SetKind::kBall: return "ball";
    case SetKind::kBox: return "box";
    case SetKind::kHalfspace: return "halfspace";
    case SetKind::kHyperplane: return "hyperplane";
    case SetKind::kOrthant: return "orthant";
    case SetKind::kSimplex: return "simplex";
  }
  return "unknown";
}

ConstraintSet ConstraintSet::MakeFree(int dim) {
  if (dim < 1) throw DimensionError("set dimension must be >= 1");
  return ConstraintSet(SetKind::kFree, dim);
}

ConstraintSet ConstraintSet::MakeBall(Vector center, double radius) {
  if (center.size() < 1) throw DimensionError("set dimension must be >= 1");
  require_finite(center, "ball center");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error("ball radius must be finite and > 0");
  }
  ConstraintSet set(SetKind::kBall, static_cast<int>(center.size()));
  set.a_ = std::move(center);
  set.s_ = radius;
  return set;
}

ConstraintSet ConstraintSet::MakeBox(Vector lower, Vector upper) {
  if (lower.size() < 1) throw DimensionError("set dimension must be >= 1");
  if (lower.size() != upper.size()) {
    throw DimensionError("box bounds have mismatched dimensions");
  }
  require_finite(lower, "box lower bound");
  require_finite(upper, "box upper bound");
  if ((lower.array() > upper.array()).any()) {
    throw Error("box requires lower <= upper componentwise");
  }
  ConstraintSet set(SetKind::kBox, static_cast<int>(lower.size()));
  set.a_ = std::move(lower);
  set.b_ = std::move(upper);
  return set;
}

ConstraintSet ConstraintSet::MakeHalfspace(Vector normal, double offset) {
  if (normal.size() < 1) throw DimensionError("set dimension must be >= 1");
  require_finite(normal, "halfspace normal");
  if (!std::isfinite(offset)) throw Error("halfspace offset must be finite");
  if (normal.norm() == 0.0) throw Error("halfspace normal must be nonzero");
  ConstraintSet set(SetKind::kHalfspace, static_cast<int>(normal.size()));
  set.a_ = std::move(normal);
  set.s_ = offset;
  return set;
}

ConstraintSet ConstraintSet::MakeHyperplane(Vector normal, double offset) {
  if (normal.size() < 1) throw DimensionError("set dimension must be >= 1");
  require_finite(normal, "hyperplane normal");
  if (!std::isfinite(offset)) throw Error("hyperplane offset must be finite");
  if (normal.norm() == 0.0) throw Error("hyperplane normal must be nonzero");
  ConstraintSet set(SetKind::kHyperplane, static_cast<int>(normal.size()));
  set.a_ = std::move(normal);
  set.s_ = offset;
  return set;
}

ConstraintSet ConstraintSet::MakeOrthant(int dim) {
  if (dim < 1) throw DimensionError("set dimension must be >= 1");
  return ConstraintSet(SetKind::kOrthant, dim);
}

ConstraintSet ConstraintSet::MakeSimplex(int dim, double scale) {
  if (dim < 1) throw DimensionError("set dimension must be >= 1");
  if (dim > kSimplexMaxDim) {
    throw DimensionError("simplex variant is capped at dimension " +
                         std::to_string(kSimplexMaxDim));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error("simplex scale must be finite and > 0");
  }
  ConstraintSet set(SetKind::kSimplex, dim);
  set.s_ = scale;
  return set;
}

Vector project(const ConstraintSet& set, const Vector& x) {
  require_dim(set, x);
  switch (set.kind()) {
    case SetKind::kFree:
      return x;
    case SetKind::kBall: {
      const Vector r = x - set.center();
      const double d = r.norm();
      if (d <= set.radius()) return x;
      return set.center() + (set.radius() / d) * r;
    }
    case SetKind::kBox:
      return x.cwiseMax(set.lower()).cwiseMin(set.upper());
    case SetKind::kHalfspace: {
      const double violation = set.normal().dot(x) - set.offset();
      if (violation <= 0.0) return x;
      return x - (violation / set.normal().squaredNorm()) * set.normal();
    }
    case SetKind::kHyperplane: {
      const double residual = set.normal().dot(x) - set.offset();
      return x - (residual / set.normal().squaredNorm()) * set.normal();
    }
    case SetKind::kOrthant:
      return x.cwiseMax(0.0);
    case SetKind::kSimplex:
      return project_simplex(x, set.scale());
  }
  throw Error("unreachable set kind");
}

bool contains(const ConstraintSet& set, const Vector& x, double tol) {
  return (x - project(set, x)).norm() <= tol;
}

double normal_cone_distance(const ConstraintSet& set, const Vector& x,
                            const Vector& v) {
  require_dim(set, x);
  require_dim(set, v);
  if (!contains(set, x, kActiveTol)) {
    throw InfeasiblePointError(
        "normal_cone_distance requires a feasible base point");
  }
  switch (set.kind()) {
    case SetKind::kFree:
      return v.norm();
    case SetKind::kBall: {
      const Vector r = x - set.center();
      if (r.norm() < set.radius() - kActiveTol) return v.norm();
      return distance_to_ray(v, r);
    }
    case SetKind::kBox: {
      double dist2 = 0.0;
      for (int i = 0; i < x.size(); ++i) {
        const bool at_lower = x[i] - set.lower()[i] <= kActiveTol;
        const bool at_upper = set.upper()[i] - x[i] <= kActiveTol;
        if (at_lower && at_upper) continue;       // pinned: any value allowed
        if (at_upper) {
          dist2 += std::pow(std::min(v[i], 0.0), 2);
        } else if (at_lower) {
          dist2 += std::pow(std::max(v[i], 0.0), 2);
        } else {
          dist2 += v[i] * v[i];
        }
      }
      return std::sqrt(dist2);
    }
    case SetKind::kHalfspace: {
      if (set.normal().dot(x) - set.offset() < -kActiveTol * set.normal().norm()) {
        return v.norm();  // interior
      }
      return distance_to_ray(v, set.normal());
    }
    case SetKind::kHyperplane: {
      const Vector n = set.normal();
      return (v - (v.dot(n) / n.squaredNorm()) * n).norm();
    }
    case SetKind::kOrthant: {
      double dist2 = 0.0;
      for (int i = 0; i < x.size(); ++i) {
        if (x[i] <= kActiveTol) {
          dist2 += std::pow(std::max(v[i], 0.0), 2);
        } else {
          dist2 += v[i] * v[i];
        }
      }
      return std::sqrt(dist2);
    }
    case SetKind::kSimplex:
      return simplex_cone_distance(x, v);
  }
  throw Error("unreachable set kind");
}

Vector sample_feasible(const ConstraintSet& set, std::mt19937_64& rng,
                       double scale) {
  const int n = set.dimension();
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector g(n);
  for (int i = 0; i < n; ++i) g[i] = scale * gauss(rng);
  switch (set.kind()) {
    case SetKind::kFree:
      return g;
    case SetKind::kBall: {
      // Uniform direction, radius biased toward the boundary.
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double norm = g.norm();
      if (norm == 0.0) return set.center();
      return set.center() + (set.radius() * std::pow(unif(rng), 1.0 / n) / norm) * g;
    }
    case SetKind::kBox: {
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      Vector out(n);
      for (int i = 0; i < n; ++i) {
        out[i] = set.lower()[i] + unif(rng) * (set.upper()[i] - set.lower()[i]);
      }
      return out;
    }
    case SetKind::kHalfspace:
    case SetKind::kHyperplane:
      return project(set, g);
    case SetKind::kOrthant:
      return g.cwiseAbs();
    case SetKind::kSimplex: {
      // Normalized exponentials are uniform on the simplex.
      std::exponential_distribution<double> expo(1.0);
      Vector e(n);
      for (int i = 0; i < n; ++i) e[i] = expo(rng);
      const double total = e.sum();
      if (total == 0.0) return project(set, g);
      return (set.scale() / total) * e;
    }
  }
  throw Error("unreachable set kind");
}

std::vector<Vector> extreme_points(const ConstraintSet& set,
                                   const Vector& around,
                                   const Vector& direction) {
  const int n = set.dimension();
  std::vector<Vector> points;
  switch (set.kind()) {
    case SetKind::kFree:
    case SetKind::kHyperplane:
      break;  // no extreme points
    case SetKind::kHalfspace:
      break;
    case SetKind::kBall: {
      const double dn = direction.norm();
      if (dn > 0.0) points.push_back(set.center() + (set.radius() / dn) * direction);
      for (int i = 0; i < n; ++i) {
        Vector e = set.center();
        e[i] += set.radius();
        points.push_back(e);
        e[i] -= 2.0 * set.radius();
        points.push_back(e);
      }
      break;
    }
    case SetKind::kBox: {
      Vector support(n);
      for (int i = 0; i < n; ++i) {
        support[i] = direction[i] > 0.0 ? set.upper()[i] : set.lower()[i];
      }
      points.push_back(support);
      if (n <= 12) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          Vector corner(n);
          for (int i = 0; i < n; ++i) {
            corner[i] = (mask >> i & 1) ? set.upper()[i] : set.lower()[i];
          }
          points.push_back(corner);
        }
      } else {
        const Vector base = project(set, around);
        for (int i = 0; i < n; ++i) {
          Vector lo = base, hi = base;
          lo[i] = set.lower()[i];
          hi[i] = set.upper()[i];
          points.push_back(lo);
          points.push_back(hi);
        }
      }
      break;
    }
    case SetKind::kOrthant: {
      points.push_back(Vector::Zero(n));
      const double reach = 1e3 * (1.0 + around.norm());
      for (int i = 0; i < n; ++i) {
        points.push_back(reach * Vector::Unit(n, i));
      }
      break;
    }
    case SetKind::kSimplex: {
      for (int i = 0; i < n; ++i) {
        points.push_back(set.scale() * Vector::Unit(n, i));
      }
      break;
    }
  }
  return points;
}

}  // namespace weber
