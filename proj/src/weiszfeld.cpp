#include "weber/weiszfeld.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "weber/errors.hpp"

namespace weber {

namespace {

constexpr double kFeasibilityTol = 1e-9;
constexpr int kEscapeHalvings = 60;

// ||P_C(T(x)) - x|| without the guard machinery; the anchor branch of the
// map keeps this well defined everywhere.
double raw_residual(const ProblemInstance& instance, const Vector& x,
                    double eta_anchor) {
  return (project(instance.constraint(),
                  weiszfeld_map(instance, x, eta_anchor)) -
          x)
      .norm();
}

}  // namespace

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kMaxIterations: return "max_iterations";
    case SolveStatus::kAnchorOptimal: return "anchor_optimal";
    case SolveStatus::kCollinearRefused: return "collinear_refused";
  }
  return "unknown";
}

Vector step(const ProblemInstance& instance, const Vector& x,
            double eta_anchor) {
  if (instance.anchors().nearest_anchor(x).second < eta_anchor) {
    throw AnchorProximityError("step is undefined at an anchor");
  }
  return project(instance.constraint(), weiszfeld_map(instance, x, eta_anchor));
}

Vector anchor_escape(const ProblemInstance& instance, int j,
                     const Tolerances& tol, double f_cap) {
  tol.validate();
  const AnchorSet& anchors = instance.anchors();
  if (j < 0 || j >= anchors.size()) {
    throw DimensionError("anchor index out of range");
  }
  const Vector& aj = anchors.anchor(j);
  const Vector r = anchor_residual_vector(instance, j);
  const double r_norm = r.norm();
  if (r_norm == 0.0) {
    throw EscapeError("anchor " + std::to_string(j) +
                      " has a vanishing residual vector; nothing to escape");
  }
  const Vector direction = -r / r_norm;
  const double f_anchor = evaluate_objective(instance, aj);
  const double target = std::min(f_anchor, f_cap);
  double t = tol.delta_escape;
  for (int k = 0; k < kEscapeHalvings; ++k, t *= 0.5) {
    const Vector trial = project(instance.constraint(), aj + t * direction);
    if ((trial - aj).norm() < tol.eta_anchor) continue;  // projected back on
    if (evaluate_objective(instance, trial) < target) return trial;
  }
  throw EscapeError("anchor escape found no descent from anchor " +
                    std::to_string(j) +
                    "; the anchor test and the escape disagree");
}

// Trace rows 0..n-2 describe the transitions iterates[t] -> iterates[t+1];
// the final row carries the terminal point with step_norm 0. Non-map
// transitions (escapes and anchor snaps) are flagged so invariant checks
// that assume the pure iteration can skip them.
SolveResult solve(const ProblemInstance& instance, const Tolerances& tol,
                  const SolveOptions& options) {
  tol.validate();
  SolveResult result;

  Vector x;
  if (options.x0.has_value()) {
    if (options.x0->size() != instance.dimension()) {
      throw DimensionError("x0 dimension does not match the instance");
    }
    if (!is_finite(*options.x0)) {
      throw Error("x0 has non-finite entries");
    }
    if (!contains(instance.constraint(), *options.x0, kFeasibilityTol)) {
      throw InfeasiblePointError("x0 is not feasible");
    }
    x = *options.x0;
  } else {
    x = project(instance.constraint(), instance.anchors().weighted_mean());
  }

  if (instance.collinear() && !options.allow_collinear) {
    result.x_final = x;
    result.objective = evaluate_objective(instance, x);
    result.status = SolveStatus::kCollinearRefused;
    result.iterations = 0;
    return result;
  }

  const auto finish = [&](const Vector& final_point, SolveStatus status,
                          int anchor_index) {
    result.x_final = final_point;
    result.objective = evaluate_objective(instance, final_point);
    result.status = status;
    result.anchor_index = anchor_index;
    result.iterations = static_cast<int>(result.trace.size());
    result.trace.push_back({result.iterations, result.objective, 0.0,
                            raw_residual(instance, final_point, tol.eta_anchor),
                            false});
  };

  if (options.record_iterates) result.iterates.push_back(x);

  for (int k = 0; k < tol.max_iter; ++k) {
    const auto [j, dist] = instance.anchors().nearest_anchor(x);
    if (dist < tol.eta_anchor) {
      const Certificate cert = anchor_optimality(instance, j);
      const double f_here = evaluate_objective(instance, x);
      if (cert.verdict == Verdict::kOptimal) {
        const Vector& aj = instance.anchors().anchor(j);
        result.trace.push_back({k, f_here, (x - aj).norm(),
                                raw_residual(instance, x, tol.eta_anchor),
                                true});
        if (options.record_iterates) result.iterates.push_back(aj);
        finish(aj, SolveStatus::kAnchorOptimal, j);
        return result;
      }
      const Vector escaped = anchor_escape(instance, j, tol, f_here);
      result.trace.push_back({k, f_here, (x - escaped).norm(),
                              raw_residual(instance, x, tol.eta_anchor), true});
      x = escaped;
      if (options.record_iterates) result.iterates.push_back(x);
      continue;
    }

    const Vector next =
        project(instance.constraint(), weiszfeld_map(instance, x, tol.eta_anchor));
    const double step_norm = (x - next).norm();
    result.trace.push_back(
        {k, evaluate_objective(instance, x), step_norm, step_norm, false});
    if (options.record_iterates) result.iterates.push_back(next);

    if (step_norm <= tol.epsilon) {
      // The step rule can fire while the iterate is still drifting toward an
      // anchor optimum; certify the nearby anchor and report it exactly.
      const auto [jn, dn] = instance.anchors().nearest_anchor(next);
      if (dn <= std::max(tol.eta_anchor, 10.0 * tol.epsilon)) {
        const Certificate cert = anchor_optimality(instance, jn);
        const Vector& aj = instance.anchors().anchor(jn);
        if (cert.verdict == Verdict::kOptimal &&
            evaluate_objective(instance, aj) <=
                evaluate_objective(instance, next)) {
          TraceRecord& last = result.trace.back();
          last.step_norm = (x - aj).norm();
          last.escape = true;
          if (options.record_iterates) {
            result.iterates.back() = aj;
          }
          finish(aj, SolveStatus::kAnchorOptimal, jn);
          return result;
        }
        if (dn < tol.eta_anchor) {
          // Landed on an anchor that is not optimal; let the anchor branch
          // escape on the next pass instead of declaring convergence.
          x = next;
          continue;
        }
      }
      finish(next, SolveStatus::kConverged, -1);
      return result;
    }
    x = next;
  }

  finish(x, SolveStatus::kMaxIterations, -1);
  return result;
}

}  // namespace weber
