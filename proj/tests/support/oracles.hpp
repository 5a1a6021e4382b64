#pragma once

// Reference implementations the tests compare the library against. They are
// deliberately naive and share no code with the solver or the reductions.

#include "rsched/instance.hpp"
#include "rsched/matching.hpp"
#include "rsched/sat.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rsched::testing {

enum class LoadGoal { AtMost, Exactly, AtLeast };

/// Depth-first over jobs in input order, every eligible machine tried, with a
/// memo of (job, load vector) states already shown to fail.
bool naive_feasible(const RAInstance& instance, const Rational& target, LoadGoal goal);

/// Plain 2^n sweep over star formulas, checking exactly-1 / exactly-2 counts.
bool naive_star_sat(const StarFormula& f);
bool naive_one_in_three_sat(const OneInThreeFormula& f);
bool naive_cnf_sat(const CNFFormula& f);

/// Every subset of the triplets, checked for an exact cover of A, B, C.
bool naive_match(const ThreeDM& d);
/// Same over E1 then E2 and the six element sets.
bool naive_match(const ThreeDMStar& d);

/// job id -> set of eligible machine ids.
using EligibleById = std::map<std::string, std::set<std::string>>;
EligibleById eligible_by_id(const RAInstance& instance);
/// Straight from the definition: demand <= capacity in every coordinate.
EligibleById eligible_by_id(const RARInstance& instance);

/// Sum of sizes, recomputed from the job list.
Rational total_size(const RAInstance& instance);

/// Loads recomputed from the raw assignment without calling evaluate.
std::vector<Rational> naive_loads(const RAInstance& instance, const Schedule& schedule);

}  // namespace rsched::testing
