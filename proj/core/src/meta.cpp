#include "rsched/meta.hpp"

#include "rsched/error.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace rsched {

namespace {

constexpr std::array<std::pair<GadgetKind, std::string_view>, 19> kKindNames{{
    {GadgetKind::CJob, "CJob"},
    {GadgetKind::TJob, "TJob"},
    {GadgetKind::VJob, "VJob"},
    {GadgetKind::BJob, "BJob"},
    {GadgetKind::HJob, "HJob"},
    {GadgetKind::CMach, "CMach"},
    {GadgetKind::TMach, "TMach"},
    {GadgetKind::GMach, "GMach"},
    {GadgetKind::BMachIn, "BMachIn"},
    {GadgetKind::BMachOut, "BMachOut"},
    {GadgetKind::PrivateLoad, "PrivateLoad"},
    {GadgetKind::ElementJob, "ElementJob"},
    {GadgetKind::DummyJob, "DummyJob"},
    {GadgetKind::TruthJob, "TruthJob"},
    {GadgetKind::ClauseJob, "ClauseJob"},
    {GadgetKind::DummyClause, "DummyClause"},
    {GadgetKind::Triplet, "Triplet"},
    {GadgetKind::ClauseMach, "ClauseMach"},
    {GadgetKind::LiteralMach, "LiteralMach"},
}};

}  // namespace

std::string_view to_string(GadgetKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames)
    if (name == text) return k;
  throw ParseError(0, "unknown gadget kind '" + std::string(text) + "'");
}

std::string format_meta(const GadgetMeta& meta) {
  std::string out(to_string(meta.kind));
  out += ' ';
  if (meta.indices.empty()) {
    out += '-';
  } else {
    for (std::size_t k = 0; k < meta.indices.size(); ++k) {
      if (k != 0) out += ',';
      out += std::to_string(meta.indices[k]);
    }
  }
  out += ' ';
  out += !meta.config ? "-" : (*meta.config ? "T" : "F");
  return out;
}

GadgetMeta parse_meta(std::string_view kind, std::string_view indices, std::string_view config) {
  GadgetMeta meta;
  meta.kind = parse_gadget_kind(kind);
  if (indices != "-") {
    std::size_t start = 0;
    while (start <= indices.size()) {
      const auto comma = indices.find(',', start);
      const auto piece = indices.substr(start, comma == std::string_view::npos ? indices.npos : comma - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
        throw ParseError(0, "malformed meta indices '" + std::string(indices) + "'");
      meta.indices.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (config == "T") {
    meta.config = true;
  } else if (config == "F") {
    meta.config = false;
  } else if (config != "-") {
    throw ParseError(0, "malformed meta config '" + std::string(config) + "'");
  }
  return meta;
}

}  // namespace rsched
