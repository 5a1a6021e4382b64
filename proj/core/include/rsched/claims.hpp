#pragma once

#include "rsched/reduction_output.hpp"

#include <string>
#include <vector>

namespace rsched {

struct ClaimResult {
  std::string id;
  bool passed = true;
  std::string witness;  // offending machines/jobs when the claim fails
};

struct ClaimReport {
  std::vector<ClaimResult> results;

  bool all_passed() const;
  /// nullptr when the report has no claim with that id.
  const ClaimResult* find(const std::string& id) const;
};

/// Evaluates the structural claims that apply to the reduction kind.
///
///   simple: total-size, job-count, composition, same-config,
///           truth-opposition, clause-count, variable-signal
///   rai:    total-size, job-count, tjob-placement, vjob-placement,
///           bridge-placement, highway-placement, cjob-distribution,
///           same-config, truth-opposition, clause-count, signal
///   lst, rar6:  total-size, pattern
///   rar3, rar2: total-size, job-count, triple-pattern, element-correspondence
///   gb, rar4:   truth-job-exclusive, clause-witness
///   bhaskara:   makespan-bound
///   embeddings: no claims
///
/// Throws ValidationError when σ misses the load precondition (every load
/// equal to T for the exact-load kinds, makespan at most T for gb/rar4) and
/// ScheduleViolation for ineligible placements.
ClaimReport check_claims(const ReductionOutput& out, const Schedule& schedule);

}  // namespace rsched
