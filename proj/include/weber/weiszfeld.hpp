#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "weber/certify.hpp"
#include "weber/core.hpp"

namespace weber {

enum class SolveStatus { kConverged, kMaxIterations, kAnchorOptimal, kCollinearRefused };

const char* to_string(SolveStatus status);

/// One row per iteration k: the objective at x_k, the step to x_{k+1} and
/// the fixed-point residual ||P_C(T(x_k)) - x_k||. The two norms coincide
/// except on anchor-escape steps, which are flagged.
struct TraceRecord {
  int iter = 0;
  double objective = 0.0;
  double step_norm = 0.0;
  double fixed_point_residual = 0.0;
  bool escape = false;
};

struct SolveResult {
  Vector x_final;
  double objective = 0.0;
  SolveStatus status = SolveStatus::kMaxIterations;
  int anchor_index = -1;  // AnchorOptimal only
  int iterations = 0;
  std::vector<TraceRecord> trace;
  /// x_0 .. x_final, recorded when SolveOptions::record_iterates is set.
  std::vector<Vector> iterates;
};

struct SolveOptions {
  std::optional<Vector> x0;
  bool allow_collinear = false;
  bool record_iterates = true;
};

/// One projected Weiszfeld step P_C(T(x)). Requires x off the anchors.
Vector step(const ProblemInstance& instance, const Vector& x,
            double eta_anchor = 1e-12);

/// The projected Weiszfeld iteration x_{k+1} = P_C(T(x_k)) with the
/// step-norm stopping rule ||x_k - x_{k+1}|| <= epsilon.
///
/// Anchor handling: an iterate within eta_anchor of a_j triggers the
/// anchor-case optimality test; a certified anchor is returned exactly as
/// AnchorOptimal, otherwise anchor_escape restarts the iteration from a
/// strictly better point. On step-rule convergence next to an anchor
/// (within max(eta_anchor, 10 epsilon)) the same test runs and a certified
/// anchor is returned exactly, so anchor optima are reported as such rather
/// than as nearby Converged points.
///
/// Default start is P_C(weighted anchor mean). A provided x0 must be
/// feasible. Collinear instances are refused unless allow_collinear is set.
SolveResult solve(const ProblemInstance& instance, const Tolerances& tol = {},
                  const SolveOptions& options = {});

/// Finds a feasible point strictly below f(a_j) by backtracking from a_j
/// along -R_j, projecting each trial. Requires that anchor_optimality(j)
/// said not optimal; throws EscapeError if 60 halvings find no descent.
/// When f_cap is finite the accepted point also descends below it.
Vector anchor_escape(const ProblemInstance& instance, int j,
                     const Tolerances& tol = {},
                     double f_cap = std::numeric_limits<double>::infinity());

}  // namespace weber
