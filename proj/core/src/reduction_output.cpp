#include "rsched/reduction_output.hpp"

#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "text_util.hpp"

#include <array>
#include <sstream>

namespace rsched {

namespace {

constexpr std::array<std::pair<ReductionKind, std::string_view>, 12> kNames{{
    {ReductionKind::Simple, "simple"},
    {ReductionKind::Rai, "rai"},
    {ReductionKind::Lst, "lst"},
    {ReductionKind::Rar6, "rar6"},
    {ReductionKind::GraphBalancing, "gb"},
    {ReductionKind::Rar4, "rar4"},
    {ReductionKind::Rar3, "rar3"},
    {ReductionKind::Rar2, "rar2"},
    {ReductionKind::Rai2Rar2, "rai2rar2"},
    {ReductionKind::Ra2RarM, "ra2rarm"},
    {ReductionKind::Rar2Lrs, "rar2lrs"},
    {ReductionKind::Bhaskara, "bhaskara"},
}};

}  // namespace

std::string_view to_string(ReductionKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

ReductionKind parse_reduction_kind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw ParseError(0, "unknown reduction kind '" + std::string(name) + "'");
}

std::string emit_source(const SourceProblem& source) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<S, AnyInstance>) {
          return emit_instance(s);
        } else {
          return emit(s);
        }
      },
      source);
}

SourceProblem parse_source(std::string_view text) {
  for (const auto& line : detail::tokenize(text)) {
    if (line.comment) continue;
    const auto& word = line.tokens.front();
    if (word == "STAR") return parse_star(text);
    if (word == "CNF") return parse_cnf(text);
    if (word == "3DM") return parse_3dm(text);
    if (word == "3DMSTAR") return parse_3dm_star(text);
    return parse_instance(text);
  }
  return std::monostate{};
}

InstanceDocument to_document(const ReductionOutput& out) {
  InstanceDocument doc;
  doc.instance = out.instance;
  doc.target = out.target;
  doc.reduction = std::string(to_string(out.kind));
  std::istringstream lines(emit_source(out.source));
  for (std::string line; std::getline(lines, line);) doc.source.push_back(line);
  return doc;
}

ReductionOutput from_document(const InstanceDocument& doc) {
  if (!doc.reduction) throw ParseError(0, "missing '# reduction' directive");
  ReductionOutput out;
  out.kind = parse_reduction_kind(*doc.reduction);
  out.instance = doc.instance;
  out.target = doc.target;
  std::string text;
  for (const auto& line : doc.source) text += line + '\n';
  out.source = parse_source(text);
  return out;
}

RAInstance restricted_view(const AnyInstance& instance) {
  if (const auto* ra = std::get_if<RAInstance>(&instance)) return *ra;
  if (const auto* rai = std::get_if<RAIInstance>(&instance)) return rai->base();
  if (const auto* rar = std::get_if<RARInstance>(&instance)) return to_restricted_assignment(*rar);
  throw Error("LRS instances have no eligibility relation");
}

}  // namespace rsched
