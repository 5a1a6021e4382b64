#pragma once

#include "rsched/error.hpp"
#include "rsched/instance.hpp"

#include <string_view>
#include <vector>

namespace rsched {

/// True iff the job's demand is at most the machine's capacity in every
/// resource. Throws std::out_of_range on bad indices.
bool eligibility(const RARInstance& rar, std::size_t job, std::size_t machine);
/// Same, by id. Throws Error on unknown ids.
bool eligibility(const RARInstance& rar, std::string_view job, std::string_view machine);

/// Materializes the eligible sets. Throws UnschedulableJobs listing every job
/// that fits on no machine.
RAInstance to_restricted_assignment(const RARInstance& rar);

/// Every (job, machine) pair in `schedule` that breaks eligibility.
std::vector<ScheduleViolation::Pair> find_violations(const RAInstance& instance, const Schedule& schedule);

/// Throws ScheduleViolation for ineligible placements and ValidationError for
/// a schedule that is not a total map onto known machines.
LoadProfile evaluate(const RAInstance& instance, const Schedule& schedule);
LoadProfile evaluate(const RAIInstance& instance, const Schedule& schedule);
LoadProfile evaluate(const RARInstance& instance, const Schedule& schedule);
/// LRS has no eligibility relation; only totality is checked.
LoadProfile evaluate(const LRSInstance& instance, const Schedule& schedule);
LoadProfile evaluate(const AnyInstance& instance, const Schedule& schedule);

/// True iff every eligible set is a run of consecutive machines in `order`.
/// Throws ValidationError when `order` is not a permutation of the machines.
bool is_interval(const RAInstance& instance, const std::vector<std::size_t>& order);

/// Raises each demand to the smallest capacity that covers it (per resource)
/// and rank-compresses every resource to {1,...,k}. The eligibility relation
/// is unchanged. Throws UnschedulableJobs when some demand exceeds every
/// capacity of its resource.
RARInstance normalize(const RARInstance& rar);

/// Sum of all sizes (private loads included) equals |M| * target.
bool total_size_check(const RAInstance& instance, const Rational& target);

Rational lrs_processing_time(const LRSInstance& lrs, std::size_t job, std::size_t machine);

}  // namespace rsched
