#pragma once

#include <optional>
#include <string>

#include "weber/certify.hpp"
#include "weber/core.hpp"
#include "weber/stability.hpp"
#include "weber/weiszfeld.hpp"

namespace weber {

/// A parsed instance document: the problem plus any tolerances block.
struct ParsedInstance {
  ProblemInstance instance;
  Tolerances tolerances;
  bool has_tolerances = false;
};

/// Parses the JSON instance document. Throws ParseError with the offending
/// field path on schema violations; duplicate anchors are merged per the
/// anchor-set policy.
ParsedInstance parse_instance(const std::string& text);

/// Serializes an instance back to the document schema. Floats carry 17
/// significant digits so parse(serialize(i)) reproduces i exactly.
std::string serialize_instance(const ProblemInstance& instance,
                               const std::optional<Tolerances>& tol = {});

/// The solve result document: final point, objective, status, iteration
/// count, certificate and feasibility. Byte-deterministic.
std::string serialize_result(const ProblemInstance& instance,
                             const SolveResult& result,
                             const Certificate& certificate);

/// Certificate document used by the certify subcommand.
std::string serialize_certificate(const Certificate& certificate);

/// Iteration trace as CSV: header iter,f,step_norm,residual.
std::string trace_to_csv(const std::vector<TraceRecord>& trace);

/// Stability report as CSV: header delta,dir,dM,dm,flag.
std::string stability_to_csv(const StabilityReport& report);

/// Formats one double with up to 17 significant digits (round-trip exact).
std::string format_double(double value);

}  // namespace weber
