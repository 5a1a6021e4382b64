#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsched {

/// Role a job or machine plays inside a reduction gadget.
enum class GadgetKind {
  CJob,
  TJob,
  VJob,
  BJob,
  HJob,
  CMach,
  TMach,
  GMach,
  BMachIn,
  BMachOut,
  PrivateLoad,
  ElementJob,
  DummyJob,
  TruthJob,
  ClauseJob,
  DummyClause,
  Triplet,
  ClauseMach,
  LiteralMach,
};

std::string_view to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(std::string_view text);

/// Provenance tag carried by generated jobs and machines.
///
/// `indices` follow the gadget's natural subscripts (all 1-based), e.g.
/// `VJob {j,t}`, `HJob {j,t,j'}`, `CMach {i,s}`. `config` is the truth
/// configuration (true = top) and is present only on jobs that come in a
/// top/bottom pair.
struct GadgetMeta {
  GadgetKind kind = GadgetKind::PrivateLoad;
  std::vector<int> indices;
  std::optional<bool> config;

  friend bool operator==(const GadgetMeta&, const GadgetMeta&) = default;
  friend auto operator<=>(const GadgetMeta& a, const GadgetMeta& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.indices <=> b.indices; c != 0) return c;
    return a.config <=> b.config;
  }
};

/// "<kind> <i,j,k|-> <T|F|->", the payload of a `# meta` line.
std::string format_meta(const GadgetMeta& meta);
GadgetMeta parse_meta(std::string_view kind, std::string_view indices, std::string_view config);

}  // namespace rsched
