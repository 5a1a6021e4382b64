#pragma once

// Glue shared by the CLI subcommands: reduction dispatch and the end-to-end
// roundtrip check.

#include "rsched/reduction_output.hpp"
#include "rsched/solver.hpp"

#include <string>
#include <vector>

namespace rsched::cli {

struct ReduceParams {
  Rational eps{1};
  Rational K{10};
};

/// Throws Error when the source does not match what the kind consumes.
ReductionOutput make_reduction(ReductionKind kind, const SourceProblem& source, const ReduceParams& params = {});

struct RoundtripReport {
  bool pass = false;
  bool budget = false;
  std::vector<std::string> lines;
};

/// Oracle on the source, solver on the reduction; on yes-instances the
/// builder schedule must meet the target and pass every claim, and the
/// solver's schedule must extract to a certificate of the source.
RoundtripReport roundtrip(ReductionKind kind, const SourceProblem& source, const SolveBudget& budget,
                          const ReduceParams& params = {});

}  // namespace rsched::cli
