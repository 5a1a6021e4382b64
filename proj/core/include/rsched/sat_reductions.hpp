#pragma once

#include "rsched/reduction_output.hpp"

#include <array>
#include <vector>

namespace rsched {

inline constexpr std::int64_t kSimpleTarget = 322;
inline constexpr std::int64_t kRaiTarget = 3111111112;

/// Restricted assignment instance with target 322. Machines are listed as
/// TMach_{j,1}, TMach_{j,2} for every j, then CMach_{i,1..3} for every i.
ReductionOutput reduce_simple(const StarFormula& f);

/// Interval instance with target 3111111112, machines listed in block order
/// (T_1, S_1, P_2, T_2, S_2, ..., P_n, T_n, S_n, C_1, ..., C_2m).
ReductionOutput reduce_rai(const StarFormula& f);

/// Throws ValidationError if `assignment` does not satisfy the source.
Schedule build_schedule_simple(const ReductionOutput& out, const std::vector<bool>& assignment);
Schedule build_schedule_rai(const ReductionOutput& out, const std::vector<bool>& assignment);

/// Reads x_j off the gadget job on CMach_{κ(j,1)}. Throws ValidationError
/// naming the first failed claim when σ is not a load-T schedule of the
/// expected shape.
std::vector<bool> extract_assignment_simple(const ReductionOutput& out, const Schedule& schedule);
std::vector<bool> extract_assignment_rai(const ReductionOutput& out, const Schedule& schedule);

/// Graph balancing instance (target 2, at most two eligible machines per
/// job) from a modified 3-SAT formula.
ReductionOutput reduce_graph_balancing(const CNFFormula& f);
/// The same eligibility expressed with four resources.
ReductionOutput model_rar4(const CNFFormula& f);
Schedule build_schedule_gb(const ReductionOutput& out, const std::vector<bool>& assignment);
/// x_j = true iff e_j runs on u_{j,0}.
std::vector<bool> extract_assignment_gb(const ReductionOutput& out, const Schedule& schedule);

/// Base-10 digits of a non-negative integer, most significant first, padded
/// to `width`. Throws ValidationError if the value does not fit.
std::vector<int> decimal_digits(const Rational& value, std::size_t width);

/// Every size has digits <= 2 and at most `max_jobs` jobs fit on one machine
/// at load T, so digit-wise sums never carry (2 * 4 < 10).
struct DigitSafety {
  int max_digit = 0;
  std::size_t max_jobs_per_machine = 0;
  bool carry_free = false;
};
DigitSafety digit_safety(const ReductionOutput& out);

}  // namespace rsched
