#pragma once

#include "rsched/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsched {

/// Everything an instance file can carry besides the instance itself.
///
///   # reduction <kind>
///   # target <T>
///   # source <line of the source problem>      (repeated)
///   # meta <id> <kind> <i,j,..|-> <T|F|->      (repeated)
///   RA <m> <n> | RAI <m> <n> | RAR <R> <m> <n> | LRS <D> <m> <n>
///   ...records...
///   SCHED
///   assign <job> <machine>                     (repeated)
struct InstanceDocument {
  AnyInstance instance;
  std::optional<Rational> target;
  std::optional<std::string> reduction;
  std::vector<std::string> source;
  std::optional<Schedule> schedule;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

InstanceDocument parse_document(std::string_view text);
std::string emit_document(const InstanceDocument& doc);

AnyInstance parse_instance(std::string_view text);
std::string emit_instance(const AnyInstance& instance);

/// Reads the first SCHED block in `text`; anything before it is skipped so
/// solver output ("FOUND" + block) and whole documents both parse.
Schedule parse_schedule(std::string_view text, const AnyInstance& instance);
std::string emit_schedule(const AnyInstance& instance, const Schedule& schedule);

}  // namespace rsched
