#pragma once

#include "rsched/instance.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace rsched {

struct SolveBudget {
  std::uint64_t max_nodes = 200'000'000;
  double max_seconds = 600.0;
  std::size_t enum_cap = 1000;
  /// Workers splitting the top-level branches; 1 keeps everything on the
  /// calling thread.
  unsigned workers = 1;
  /// When the sizes sum to |M| T, makespan and min-load at T both mean every
  /// load equals T, so those calls run the exact-load search. Clearing this
  /// keeps their own searches; the cross-checks use it.
  bool use_load_identity = true;
};

enum class Outcome { Found, None, BudgetExceeded };
std::string_view to_string(Outcome outcome);

enum class SolveMode { Makespan, Exact, MinLoad };
std::string_view to_string(SolveMode mode);
/// Accepts makespan, exact, santa (alias min-load).
SolveMode parse_solve_mode(std::string_view text);

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
  bool digit_mode = false;
};

struct SolveResult {
  Outcome outcome = Outcome::None;
  std::optional<Schedule> schedule;
  SolveStats stats;
};

/// Schedule with every load at most T. Delegates to the exact search when the
/// sizes sum to |M| T.
SolveResult decide_makespan(const RAInstance& instance, const Rational& target, const SolveBudget& budget = {});
/// Schedule with every load equal to T. Throws ValidationError unless the
/// sizes sum to |M| T.
SolveResult decide_exact_load(const RAInstance& instance, const Rational& target, const SolveBudget& budget = {});
/// Schedule with every load at least T.
SolveResult decide_min_load(const RAInstance& instance, const Rational& target, const SolveBudget& budget = {});

SolveResult solve(const RAInstance& instance, const Rational& target, SolveMode mode, const SolveBudget& budget = {});
/// RAI and RAR instances are solved through their eligible sets; LRS throws.
SolveResult solve(const AnyInstance& instance, const Rational& target, SolveMode mode, const SolveBudget& budget = {});

struct Enumeration {
  /// Sorted; identical jobs are interchangeable, so each class of schedules
  /// equal up to swapping such jobs appears once.
  std::vector<Schedule> schedules;
  /// True when the search finished with at most enum_cap schedules.
  bool complete = false;
  bool budget_exceeded = false;
  SolveStats stats;
};

/// Throws ValidationError unless the sizes sum to |M| T.
Enumeration enumerate_exact(const RAInstance& instance, const Rational& target, const SolveBudget& budget = {});

}  // namespace rsched
