#pragma once

#include "rsched/instance.hpp"
#include "rsched/matching.hpp"
#include "rsched/sat.hpp"
#include "rsched/text_format.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace rsched {

enum class ReductionKind {
  Simple,
  Rai,
  Lst,
  Rar6,
  GraphBalancing,
  Rar4,
  Rar3,
  Rar2,
  Rai2Rar2,
  Ra2RarM,
  Rar2Lrs,
  Bhaskara,
};

/// CLI names: simple, rai, lst, rar6, gb, rar4, rar3, rar2, rai2rar2,
/// ra2rarm, rar2lrs, bhaskara.
std::string_view to_string(ReductionKind kind);
ReductionKind parse_reduction_kind(std::string_view name);

using SourceProblem = std::variant<std::monostate, StarFormula, CNFFormula, ThreeDM, ThreeDMStar, AnyInstance>;

struct ReductionOutput {
  ReductionKind kind = ReductionKind::Simple;
  AnyInstance instance;
  std::optional<Rational> target;
  SourceProblem source;
};

std::string emit_source(const SourceProblem& source);
/// Dispatches on the header word: STAR, CNF, 3DM, 3DMSTAR, else an instance.
SourceProblem parse_source(std::string_view text);

InstanceDocument to_document(const ReductionOutput& out);
/// Needs a `# reduction` directive; the source is optional.
ReductionOutput from_document(const InstanceDocument& doc);

/// RA view of an instance: RAI drops the order, RAR materializes eligibility.
/// Throws Error for LRS, which has no eligibility relation.
RAInstance restricted_view(const AnyInstance& instance);

}  // namespace rsched
