#include "weber/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "weber/errors.hpp"

namespace weber {

namespace {

constexpr double kFeasibilityTol = 1e-9;
// Slack absorbed into the anchor-case comparison d <= w_j.
constexpr double kAnchorSlack = 1e-9;

void require_feasible(const ProblemInstance& instance, const Vector& x,
                      const char* op) {
  if (!contains(instance.constraint(), x, kFeasibilityTol)) {
    throw InfeasiblePointError(std::string(op) +
                               " requires a feasible point");
  }
}

}  // namespace

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kFixedPoint: return "fixed_point";
    case CertificateKind::kVariationalInequality: return "variational_inequality";
    case CertificateKind::kAnchorCase: return "anchor_case";
  }
  return "unknown";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kOptimal: return "optimal";
    case Verdict::kNotOptimal: return "not_optimal";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

double fixed_point_residual(const ProblemInstance& instance, const Vector& x,
                            double eta_anchor) {
  require_feasible(instance, x, "fixed_point_residual");
  if (instance.anchors().nearest_anchor(x).second < eta_anchor) {
    throw AnchorProximityError(
        "fixed_point_residual is undefined at an anchor; use "
        "anchor_optimality");
  }
  return (project(instance.constraint(), weiszfeld_map(instance, x, eta_anchor)) - x)
      .norm();
}

double vi_certificate(const ProblemInstance& instance, const Vector& x,
                      int samples, std::uint64_t seed, double eta_anchor) {
  require_feasible(instance, x, "vi_certificate");
  if (instance.anchors().nearest_anchor(x).second < eta_anchor) {
    throw AnchorProximityError(
        "vi_certificate is undefined at an anchor; use anchor_optimality");
  }
  const Vector displacement = weiszfeld_map(instance, x, eta_anchor) - x;
  double worst = 0.0;
  // Spread the samples over the anchor scale so far feasible points are
  // represented for unbounded sets.
  double scale = 1.0 + x.norm();
  for (const Vector& a : instance.anchors().anchors()) {
    scale = std::max(scale, 1.0 + (a - x).norm());
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vector z = sample_feasible(instance.constraint(), rng, scale);
    worst = std::max(worst, displacement.dot(z - x));
  }
  for (const Vector& z :
       extreme_points(instance.constraint(), x, displacement)) {
    worst = std::max(worst, displacement.dot(z - x));
  }
  return worst;
}

Vector anchor_residual_vector(const ProblemInstance& instance, int j) {
  const AnchorSet& a = instance.anchors();
  if (j < 0 || j >= a.size()) {
    throw DimensionError("anchor index out of range");
  }
  Vector r = Vector::Zero(instance.dimension());
  for (int i = 0; i < a.size(); ++i) {
    if (i == j) continue;
    const Vector diff = a.anchor(j) - a.anchor(i);
    r += a.weight(i) * diff / diff.norm();
  }
  return r;
}

Certificate anchor_optimality(const ProblemInstance& instance, int j) {
  Certificate cert;
  cert.kind = CertificateKind::kAnchorCase;
  cert.anchor_index = j;
  const AnchorSet& a = instance.anchors();
  if (j < 0 || j >= a.size()) {
    throw DimensionError("anchor index out of range");
  }
  const Vector& aj = a.anchor(j);
  const double infeasibility = (aj - project(instance.constraint(), aj)).norm();
  if (infeasibility > kFeasibilityTol) {
    // An infeasible anchor cannot solve the problem.
    cert.residual = infeasibility;
    cert.margin = -infeasibility;
    cert.verdict = Verdict::kNotOptimal;
    return cert;
  }
  const Vector r = anchor_residual_vector(instance, j);
  const double d = normal_cone_distance(instance.constraint(), aj, -r);
  cert.residual = d;
  cert.margin = a.weight(j) - d;
  cert.verdict = d <= a.weight(j) + kAnchorSlack ? Verdict::kOptimal
                                                 : Verdict::kNotOptimal;
  return cert;
}

Certificate certify(const ProblemInstance& instance, const Vector& x,
                    double tol, double eta_anchor) {
  require_feasible(instance, x, "certify");
  const auto [j, dist] = instance.anchors().nearest_anchor(x);
  if (dist < eta_anchor) return anchor_optimality(instance, j);
  Certificate cert;
  cert.kind = CertificateKind::kFixedPoint;
  cert.residual = fixed_point_residual(instance, x, eta_anchor);
  cert.margin = tol - cert.residual;
  cert.verdict =
      cert.residual <= tol ? Verdict::kOptimal : Verdict::kNotOptimal;
  return cert;
}

}  // namespace weber
