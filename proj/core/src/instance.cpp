#include "rsched/instance.hpp"

#include "rsched/error.hpp"

#include <algorithm>
#include <numeric>

namespace rsched {

namespace {

template <typename Map, typename Key>
std::optional<std::size_t> lookup(const Map& map, const Key& key) {
  const auto it = map.find(key);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

void check_nonnegative(const std::vector<Rational>& values, const std::string& what) {
  for (const auto& v : values)
    if (v.sign() < 0) throw ValidationError(what + " has a negative entry " + v.to_string());
}

}  // namespace

void IdIndex::add_machine(std::size_t index, const std::string& id, const std::optional<GadgetMeta>& tag) {
  if (id.empty()) throw ValidationError("empty machine id");
  if (!machine_ids_.emplace(id, index).second) throw ValidationError("duplicate machine id '" + id + "'");
  if (tag && !machine_tags_.emplace(*tag, index).second)
    throw ValidationError("duplicate machine tag " + format_meta(*tag));
}

void IdIndex::add_job(std::size_t index, const std::string& id, const std::optional<GadgetMeta>& tag) {
  if (id.empty()) throw ValidationError("empty job id");
  if (!job_ids_.emplace(id, index).second) throw ValidationError("duplicate job id '" + id + "'");
  if (tag && !job_tags_.emplace(*tag, index).second)
    throw ValidationError("duplicate job tag " + format_meta(*tag));
}

std::optional<std::size_t> IdIndex::machine(std::string_view id) const {
  return lookup(machine_ids_, std::string(id));
}
std::optional<std::size_t> IdIndex::job(std::string_view id) const { return lookup(job_ids_, std::string(id)); }
std::optional<std::size_t> IdIndex::machine(const GadgetMeta& tag) const { return lookup(machine_tags_, tag); }
std::optional<std::size_t> IdIndex::job(const GadgetMeta& tag) const { return lookup(job_tags_, tag); }

// --- RAInstance ------------------------------------------------------------

RAInstance::RAInstance(std::vector<Machine> machines, std::vector<Job> jobs,
                       std::vector<std::vector<std::size_t>> eligible)
    : machines_(std::move(machines)), jobs_(std::move(jobs)), eligible_(std::move(eligible)) {
  if (eligible_.size() != jobs_.size()) throw ValidationError("eligible sets do not match job count");
  for (std::size_t i = 0; i < machines_.size(); ++i) index_.add_machine(i, machines_[i].id, machines_[i].tag);
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    index_.add_job(j, jobs_[j].id, jobs_[j].tag);
    if (jobs_[j].size.sign() < 0) throw ValidationError("job '" + jobs_[j].id + "' has negative size");
    auto& set = eligible_[j];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) throw ValidationError("job '" + jobs_[j].id + "' has an empty eligible set");
    if (set.back() >= machines_.size())
      throw ValidationError("job '" + jobs_[j].id + "' is eligible on an unknown machine");
  }
}

bool RAInstance::is_eligible(std::size_t j, std::size_t i) const {
  const auto& set = eligible_.at(j);
  return std::binary_search(set.begin(), set.end(), i);
}

std::size_t RAInstance::machine_index(std::string_view id) const {
  if (auto i = index_.machine(id)) return *i;
  throw Error("unknown machine '" + std::string(id) + "'");
}

std::size_t RAInstance::job_index(std::string_view id) const {
  if (auto j = index_.job(id)) return *j;
  throw Error("unknown job '" + std::string(id) + "'");
}

Rational RAInstance::total_size() const {
  Rational total;
  for (const auto& job : jobs_) total += job.size;
  return total;
}

std::size_t RAInstanceBuilder::add_machine(std::string id, std::optional<GadgetMeta> tag) {
  machines_.push_back({std::move(id), std::move(tag)});
  return machines_.size() - 1;
}

std::size_t RAInstanceBuilder::add_job(std::string id, Rational size, std::vector<std::size_t> eligible,
                                       std::optional<GadgetMeta> tag) {
  jobs_.push_back({std::move(id), std::move(size), std::move(tag)});
  eligible_.push_back(std::move(eligible));
  return jobs_.size() - 1;
}

RAInstance RAInstanceBuilder::build() && {
  return RAInstance(std::move(machines_), std::move(jobs_), std::move(eligible_));
}

// --- RAIInstance -----------------------------------------------------------

RAIInstance::RAIInstance(RAInstance base, std::vector<std::size_t> order, std::vector<Interval> intervals)
    : base_(std::move(base)), order_(std::move(order)), intervals_(std::move(intervals)) {
  const std::size_t m = base_.machine_count();
  if (order_.size() != m) throw ValidationError("machine order is not a permutation");
  position_.assign(m, m);
  for (std::size_t p = 0; p < m; ++p) {
    if (order_[p] >= m || position_[order_[p]] != m) throw ValidationError("machine order is not a permutation");
    position_[order_[p]] = p;
  }
  if (intervals_.size() != base_.job_count()) throw ValidationError("intervals do not match job count");
  for (std::size_t j = 0; j < intervals_.size(); ++j) {
    const auto [first, last] = intervals_[j];
    if (first > last || last >= m) throw ValidationError("job '" + base_.job(j).id + "' has a malformed interval");
    std::vector<std::size_t> expected(order_.begin() + static_cast<std::ptrdiff_t>(first),
                                      order_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    std::sort(expected.begin(), expected.end());
    if (expected != base_.eligible(j))
      throw ValidationError("job '" + base_.job(j).id + "' eligible set is not its interval");
  }
}

RAIInstance RAIInstance::from_intervals(std::vector<Machine> machines, std::vector<Job> jobs,
                                        std::vector<Interval> intervals) {
  if (intervals.size() != jobs.size()) throw ValidationError("intervals do not match job count");
  const std::size_t m = machines.size();
  std::vector<std::vector<std::size_t>> eligible;
  eligible.reserve(jobs.size());
  for (const auto& [first, last] : intervals) {
    if (first > last || last >= m) throw ValidationError("malformed interval");
    std::vector<std::size_t> set(last - first + 1);
    std::iota(set.begin(), set.end(), first);
    eligible.push_back(std::move(set));
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  return RAIInstance(RAInstance(std::move(machines), std::move(jobs), std::move(eligible)), std::move(order),
                     std::move(intervals));
}

// --- RARInstance -----------------------------------------------------------

RARInstance::RARInstance(std::size_t resource_count, std::vector<RARMachine> machines, std::vector<RARJob> jobs)
    : resource_count_(resource_count), machines_(std::move(machines)), jobs_(std::move(jobs)) {
  for (std::size_t i = 0; i < machines_.size(); ++i) {
    index_.add_machine(i, machines_[i].id, machines_[i].tag);
    if (machines_[i].capacity.size() != resource_count_)
      throw ValidationError("machine '" + machines_[i].id + "' capacity vector has wrong length");
  }
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    index_.add_job(j, jobs_[j].id, jobs_[j].tag);
    if (jobs_[j].demand.size() != resource_count_)
      throw ValidationError("job '" + jobs_[j].id + "' demand vector has wrong length");
    if (jobs_[j].size.sign() < 0) throw ValidationError("job '" + jobs_[j].id + "' has negative size");
  }
}

std::size_t RARInstance::machine_index(std::string_view id) const {
  if (auto i = index_.machine(id)) return *i;
  throw Error("unknown machine '" + std::string(id) + "'");
}

std::size_t RARInstance::job_index(std::string_view id) const {
  if (auto j = index_.job(id)) return *j;
  throw Error("unknown job '" + std::string(id) + "'");
}

// --- LRSInstance -----------------------------------------------------------

LRSInstance::LRSInstance(std::size_t dimension, std::vector<LRSMachine> machines, std::vector<LRSJob> jobs)
    : dimension_(dimension), machines_(std::move(machines)), jobs_(std::move(jobs)) {
  for (std::size_t i = 0; i < machines_.size(); ++i) {
    index_.add_machine(i, machines_[i].id, machines_[i].tag);
    if (machines_[i].speed.size() != dimension_)
      throw ValidationError("machine '" + machines_[i].id + "' speed vector has wrong length");
    check_nonnegative(machines_[i].speed, "machine '" + machines_[i].id + "'");
  }
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    index_.add_job(j, jobs_[j].id, jobs_[j].tag);
    if (jobs_[j].size.size() != dimension_)
      throw ValidationError("job '" + jobs_[j].id + "' size vector has wrong length");
    check_nonnegative(jobs_[j].size, "job '" + jobs_[j].id + "'");
  }
}

std::size_t LRSInstance::machine_index(std::string_view id) const {
  if (auto i = index_.machine(id)) return *i;
  throw Error("unknown machine '" + std::string(id) + "'");
}

std::size_t LRSInstance::job_index(std::string_view id) const {
  if (auto j = index_.job(id)) return *j;
  throw Error("unknown job '" + std::string(id) + "'");
}

// --- variant helpers -------------------------------------------------------

namespace {

const RAInstance* as_ra(const AnyInstance& instance) {
  if (const auto* ra = std::get_if<RAInstance>(&instance)) return ra;
  if (const auto* rai = std::get_if<RAIInstance>(&instance)) return &rai->base();
  return nullptr;
}

}  // namespace

std::size_t machine_count(const AnyInstance& instance) {
  return std::visit(
      [](const auto& inst) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(inst)>, RAIInstance>)
          return inst.base().machine_count();
        else
          return inst.machine_count();
      },
      instance);
}

std::size_t job_count(const AnyInstance& instance) {
  return std::visit(
      [](const auto& inst) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(inst)>, RAIInstance>)
          return inst.base().job_count();
        else
          return inst.job_count();
      },
      instance);
}

const std::string& machine_id(const AnyInstance& instance, std::size_t i) {
  if (const auto* ra = as_ra(instance)) return ra->machine(i).id;
  if (const auto* rar = std::get_if<RARInstance>(&instance)) return rar->machine(i).id;
  return std::get<LRSInstance>(instance).machine(i).id;
}

const std::string& job_id(const AnyInstance& instance, std::size_t j) {
  if (const auto* ra = as_ra(instance)) return ra->job(j).id;
  if (const auto* rar = std::get_if<RARInstance>(&instance)) return rar->job(j).id;
  return std::get<LRSInstance>(instance).job(j).id;
}

std::size_t machine_index(const AnyInstance& instance, std::string_view id) {
  if (const auto* ra = as_ra(instance)) return ra->machine_index(id);
  if (const auto* rar = std::get_if<RARInstance>(&instance)) return rar->machine_index(id);
  return std::get<LRSInstance>(instance).machine_index(id);
}

std::size_t job_index(const AnyInstance& instance, std::string_view id) {
  if (const auto* ra = as_ra(instance)) return ra->job_index(id);
  if (const auto* rar = std::get_if<RARInstance>(&instance)) return rar->job_index(id);
  return std::get<LRSInstance>(instance).job_index(id);
}

}  // namespace rsched
