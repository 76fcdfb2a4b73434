#pragma once

#include <cstdint>

#include "weber/core.hpp"

namespace weber {

enum class CertificateKind { kFixedPoint, kVariationalInequality, kAnchorCase };
enum class Verdict { kOptimal, kNotOptimal, kInconclusive };

const char* to_string(CertificateKind kind);
const char* to_string(Verdict verdict);

/// Optimality evidence. Off the anchors the fixed-point residual
/// ||P_C(T(x)) - x|| decides; at an anchor a_j the test is whether the
/// pulled-back subgradient -R_j lies within w_j of the normal cone, with
/// margin = w_j - dist(-R_j, N(a_j, C)).
struct Certificate {
  CertificateKind kind = CertificateKind::kFixedPoint;
  int anchor_index = -1;  // AnchorCase only
  double residual = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::kInconclusive;
};

/// ||P_C(T(x)) - x||. Requires x feasible and off the anchors.
double fixed_point_residual(const ProblemInstance& instance, const Vector& x,
                            double eta_anchor = 1e-12);

inline constexpr std::uint64_t kViDefaultSeed = 0x5eb3a9d1c4f7u;

/// max over sampled feasible z (plus catalog extreme points) of
/// <T(x) - x, z - x>, clipped below at zero. Near zero certifies case (i) of
/// the optimality split. Deterministic for a given seed.
double vi_certificate(const ProblemInstance& instance, const Vector& x,
                      int samples = 500, std::uint64_t seed = kViDefaultSeed,
                      double eta_anchor = 1e-12);

/// Sum over i != j of w_i (a_j - a_i) / ||a_j - a_i||, the anchor-case
/// pulled-back subgradient.
Vector anchor_residual_vector(const ProblemInstance& instance, int j);

/// Anchor-case optimality test at a_j: optimal iff
/// dist(-R_j, N(a_j, C)) <= w_j + 1e-9; the w_j-ball absorbs the norm
/// subdifferential at the anchor. An infeasible anchor is never optimal.
Certificate anchor_optimality(const ProblemInstance& instance, int j);

/// Dispatch: within eta_anchor of an anchor delegates to anchor_optimality;
/// otherwise a fixed-point certificate with verdict Optimal iff the
/// residual is <= tol. Requires x feasible.
Certificate certify(const ProblemInstance& instance, const Vector& x,
                    double tol, double eta_anchor = 1e-12);

}  // namespace weber
