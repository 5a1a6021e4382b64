#include "rsched/evaluate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rsched {

ScheduleViolation::ScheduleViolation(std::vector<Pair> pairs)
    : Error([&] {
        std::string msg = "ineligible assignment:";
        for (const auto& [job, machine] : pairs) msg += " " + job + "->" + machine;
        return msg;
      }()),
      pairs_(std::move(pairs)) {}

UnschedulableJobs::UnschedulableJobs(std::vector<std::string> jobs)
    : Error([&] {
        std::string msg = "jobs eligible nowhere:";
        for (const auto& job : jobs) msg += " " + job;
        return msg;
      }()),
      jobs_(std::move(jobs)) {}

bool eligibility(const RARInstance& rar, std::size_t job, std::size_t machine) {
  const auto& demand = rar.job(job).demand;
  const auto& capacity = rar.machine(machine).capacity;
  for (std::size_t r = 0; r < rar.resource_count(); ++r)
    if (demand[r] > capacity[r]) return false;
  return true;
}

bool eligibility(const RARInstance& rar, std::string_view job, std::string_view machine) {
  return eligibility(rar, rar.job_index(job), rar.machine_index(machine));
}

RAInstance to_restricted_assignment(const RARInstance& rar) {
  std::vector<Machine> machines;
  machines.reserve(rar.machine_count());
  for (const auto& m : rar.machines()) machines.push_back({m.id, m.tag});

  std::vector<Job> jobs;
  std::vector<std::vector<std::size_t>> eligible;
  std::vector<std::string> stranded;
  for (std::size_t j = 0; j < rar.job_count(); ++j) {
    const auto& job = rar.job(j);
    jobs.push_back({job.id, job.size, job.tag});
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < rar.machine_count(); ++i)
      if (eligibility(rar, j, i)) set.push_back(i);
    if (set.empty()) stranded.push_back(job.id);
    eligible.push_back(std::move(set));
  }
  if (!stranded.empty()) throw UnschedulableJobs(std::move(stranded));
  return RAInstance(std::move(machines), std::move(jobs), std::move(eligible));
}

namespace {

void check_total(std::size_t jobs, std::size_t machines, const Schedule& schedule) {
  if (schedule.assignment.size() != jobs)
    throw ValidationError("schedule covers " + std::to_string(schedule.assignment.size()) + " of " +
                          std::to_string(jobs) + " jobs");
  for (const auto i : schedule.assignment)
    if (i >= machines) throw ValidationError("schedule references an unknown machine");
}

LoadProfile finish(std::vector<Rational> load) {
  LoadProfile profile;
  if (!load.empty()) {
    profile.makespan = *std::max_element(load.begin(), load.end());
    profile.min_load = *std::min_element(load.begin(), load.end());
  }
  profile.load = std::move(load);
  return profile;
}

}  // namespace

std::vector<ScheduleViolation::Pair> find_violations(const RAInstance& instance, const Schedule& schedule) {
  check_total(instance.job_count(), instance.machine_count(), schedule);
  std::vector<ScheduleViolation::Pair> bad;
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const auto i = schedule.assignment[j];
    if (!instance.is_eligible(j, i)) bad.emplace_back(instance.job(j).id, instance.machine(i).id);
  }
  return bad;
}

LoadProfile evaluate(const RAInstance& instance, const Schedule& schedule) {
  if (auto bad = find_violations(instance, schedule); !bad.empty()) throw ScheduleViolation(std::move(bad));
  std::vector<Rational> load(instance.machine_count());
  for (std::size_t j = 0; j < instance.job_count(); ++j) load[schedule.assignment[j]] += instance.job(j).size;
  return finish(std::move(load));
}

LoadProfile evaluate(const RAIInstance& instance, const Schedule& schedule) {
  return evaluate(instance.base(), schedule);
}

LoadProfile evaluate(const RARInstance& instance, const Schedule& schedule) {
  check_total(instance.job_count(), instance.machine_count(), schedule);
  std::vector<ScheduleViolation::Pair> bad;
  std::vector<Rational> load(instance.machine_count());
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const auto i = schedule.assignment[j];
    if (!eligibility(instance, j, i)) bad.emplace_back(instance.job(j).id, instance.machine(i).id);
    load[i] += instance.job(j).size;
  }
  if (!bad.empty()) throw ScheduleViolation(std::move(bad));
  return finish(std::move(load));
}

LoadProfile evaluate(const LRSInstance& instance, const Schedule& schedule) {
  check_total(instance.job_count(), instance.machine_count(), schedule);
  std::vector<Rational> load(instance.machine_count());
  for (std::size_t j = 0; j < instance.job_count(); ++j)
    load[schedule.assignment[j]] += lrs_processing_time(instance, j, schedule.assignment[j]);
  return finish(std::move(load));
}

LoadProfile evaluate(const AnyInstance& instance, const Schedule& schedule) {
  return std::visit([&](const auto& inst) { return evaluate(inst, schedule); }, instance);
}

bool is_interval(const RAInstance& instance, const std::vector<std::size_t>& order) {
  const std::size_t m = instance.machine_count();
  if (order.size() != m) throw ValidationError("order is not a permutation of the machines");
  std::vector<std::size_t> position(m, m);
  for (std::size_t p = 0; p < m; ++p) {
    if (order[p] >= m || position[order[p]] != m) throw ValidationError("order is not a permutation of the machines");
    position[order[p]] = p;
  }
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const auto& set = instance.eligible(j);
    std::size_t lo = m;
    std::size_t hi = 0;
    for (const auto i : set) {
      lo = std::min(lo, position[i]);
      hi = std::max(hi, position[i]);
    }
    if (hi - lo + 1 != set.size()) return false;
  }
  return true;
}

RARInstance normalize(const RARInstance& rar) {
  const std::size_t resources = rar.resource_count();
  std::vector<RARMachine> machines = rar.machines();
  std::vector<RARJob> jobs = rar.jobs();
  std::vector<std::string> stranded;

  for (std::size_t r = 0; r < resources; ++r) {
    std::set<Rational> capacities;
    for (const auto& m : rar.machines()) capacities.insert(m.capacity[r]);

    std::map<Rational, std::int64_t> rank;
    std::int64_t next = 1;
    for (const auto& c : capacities) rank.emplace(c, next++);

    for (auto& m : machines) m.capacity[r] = Rational(rank.at(m.capacity[r]));
    for (auto& job : jobs) {
      const auto it = capacities.lower_bound(job.demand[r]);
      if (it == capacities.end()) {
        if (std::find(stranded.begin(), stranded.end(), job.id) == stranded.end()) stranded.push_back(job.id);
        continue;
      }
      job.demand[r] = Rational(rank.at(*it));
    }
  }
  if (!stranded.empty()) throw UnschedulableJobs(std::move(stranded));
  return RARInstance(resources, std::move(machines), std::move(jobs));
}

bool total_size_check(const RAInstance& instance, const Rational& target) {
  return instance.total_size() == Rational(static_cast<std::int64_t>(instance.machine_count())) * target;
}

Rational lrs_processing_time(const LRSInstance& lrs, std::size_t job, std::size_t machine) {
  const auto& s = lrs.job(job).size;
  const auto& v = lrs.machine(machine).speed;
  Rational p;
  for (std::size_t k = 0; k < lrs.dimension(); ++k) p += s[k] * v[k];
  return p;
}

}  // namespace rsched
