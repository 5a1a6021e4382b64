#pragma once

#include "rsched/meta.hpp"
#include "rsched/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace rsched {

struct Machine {
  std::string id;
  std::optional<GadgetMeta> tag;

  friend bool operator==(const Machine&, const Machine&) = default;
};

struct Job {
  std::string id;
  Rational size;
  std::optional<GadgetMeta> tag;

  friend bool operator==(const Job&, const Job&) = default;
};

/// Lookup tables shared by every instance flavour: id -> index and
/// tag -> index for jobs and machines.
class IdIndex {
 public:
  void add_machine(std::size_t index, const std::string& id, const std::optional<GadgetMeta>& tag);
  void add_job(std::size_t index, const std::string& id, const std::optional<GadgetMeta>& tag);

  std::optional<std::size_t> machine(std::string_view id) const;
  std::optional<std::size_t> job(std::string_view id) const;
  std::optional<std::size_t> machine(const GadgetMeta& tag) const;
  std::optional<std::size_t> job(const GadgetMeta& tag) const;

 private:
  std::unordered_map<std::string, std::size_t> machine_ids_;
  std::unordered_map<std::string, std::size_t> job_ids_;
  std::map<GadgetMeta, std::size_t> machine_tags_;
  std::map<GadgetMeta, std::size_t> job_tags_;
};

/// Restricted assignment: every job carries an explicit eligible machine set.
/// Private loads are ordinary jobs with a singleton eligible set.
class RAInstance {
 public:
  RAInstance() = default;
  /// Validates ids, sizes and eligible sets; eligible lists are sorted and
  /// deduplicated.
  RAInstance(std::vector<Machine> machines, std::vector<Job> jobs,
             std::vector<std::vector<std::size_t>> eligible);

  std::size_t machine_count() const { return machines_.size(); }
  std::size_t job_count() const { return jobs_.size(); }
  const std::vector<Machine>& machines() const { return machines_; }
  const std::vector<Job>& jobs() const { return jobs_; }
  const Machine& machine(std::size_t i) const { return machines_.at(i); }
  const Job& job(std::size_t j) const { return jobs_.at(j); }
  const std::vector<std::size_t>& eligible(std::size_t j) const { return eligible_.at(j); }
  bool is_eligible(std::size_t j, std::size_t i) const;

  /// Throws Error on an unknown id.
  std::size_t machine_index(std::string_view id) const;
  std::size_t job_index(std::string_view id) const;
  std::optional<std::size_t> find_machine(const GadgetMeta& tag) const { return index_.machine(tag); }
  std::optional<std::size_t> find_job(const GadgetMeta& tag) const { return index_.job(tag); }

  Rational total_size() const;

  friend bool operator==(const RAInstance& a, const RAInstance& b) {
    return a.machines_ == b.machines_ && a.jobs_ == b.jobs_ && a.eligible_ == b.eligible_;
  }

 private:
  std::vector<Machine> machines_;
  std::vector<Job> jobs_;
  std::vector<std::vector<std::size_t>> eligible_;
  IdIndex index_;
};

class RAInstanceBuilder {
 public:
  std::size_t add_machine(std::string id, std::optional<GadgetMeta> tag = std::nullopt);
  std::size_t add_job(std::string id, Rational size, std::vector<std::size_t> eligible,
                      std::optional<GadgetMeta> tag = std::nullopt);
  std::size_t machine_count() const { return machines_.size(); }
  RAInstance build() &&;

 private:
  std::vector<Machine> machines_;
  std::vector<Job> jobs_;
  std::vector<std::vector<std::size_t>> eligible_;
};

/// Closed range of positions in a machine order (0-based, inclusive).
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Interval restrictions: a total machine order plus, per job, the range of
/// consecutive machines it may run on.
class RAIInstance {
 public:
  RAIInstance() = default;
  /// `order[p]` is the machine at position p. Throws ValidationError unless
  /// every eligible set is exactly the machines order[first..last].
  RAIInstance(RAInstance base, std::vector<std::size_t> order, std::vector<Interval> intervals);

  /// Machines are taken to be ordered as listed; eligible sets are derived.
  static RAIInstance from_intervals(std::vector<Machine> machines, std::vector<Job> jobs,
                                    std::vector<Interval> intervals);

  const RAInstance& base() const { return base_; }
  const std::vector<std::size_t>& order() const { return order_; }
  const Interval& interval(std::size_t j) const { return intervals_.at(j); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t position(std::size_t machine) const { return position_.at(machine); }

  friend bool operator==(const RAIInstance& a, const RAIInstance& b) {
    return a.base_ == b.base_ && a.order_ == b.order_ && a.intervals_ == b.intervals_;
  }

 private:
  RAInstance base_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<Interval> intervals_;
};

struct RARMachine {
  std::string id;
  std::vector<Rational> capacity;
  std::optional<GadgetMeta> tag;

  friend bool operator==(const RARMachine&, const RARMachine&) = default;
};

struct RARJob {
  std::string id;
  Rational size;
  std::vector<Rational> demand;
  std::optional<GadgetMeta> tag;

  friend bool operator==(const RARJob&, const RARJob&) = default;
};

/// Resource restrictions: job j may run on machine i iff its demand vector is
/// component-wise at most the capacity vector of i.
class RARInstance {
 public:
  RARInstance() = default;
  RARInstance(std::size_t resource_count, std::vector<RARMachine> machines, std::vector<RARJob> jobs);

  std::size_t resource_count() const { return resource_count_; }
  std::size_t machine_count() const { return machines_.size(); }
  std::size_t job_count() const { return jobs_.size(); }
  const std::vector<RARMachine>& machines() const { return machines_; }
  const std::vector<RARJob>& jobs() const { return jobs_; }
  const RARMachine& machine(std::size_t i) const { return machines_.at(i); }
  const RARJob& job(std::size_t j) const { return jobs_.at(j); }

  std::size_t machine_index(std::string_view id) const;
  std::size_t job_index(std::string_view id) const;
  std::optional<std::size_t> find_machine(const GadgetMeta& tag) const { return index_.machine(tag); }
  std::optional<std::size_t> find_job(const GadgetMeta& tag) const { return index_.job(tag); }

  friend bool operator==(const RARInstance& a, const RARInstance& b) {
    return a.resource_count_ == b.resource_count_ && a.machines_ == b.machines_ && a.jobs_ == b.jobs_;
  }

 private:
  std::size_t resource_count_ = 0;
  std::vector<RARMachine> machines_;
  std::vector<RARJob> jobs_;
  IdIndex index_;
};

struct LRSMachine {
  std::string id;
  std::vector<Rational> speed;
  std::optional<GadgetMeta> tag;

  friend bool operator==(const LRSMachine&, const LRSMachine&) = default;
};

struct LRSJob {
  std::string id;
  std::vector<Rational> size;
  std::optional<GadgetMeta> tag;

  friend bool operator==(const LRSJob&, const LRSJob&) = default;
};

/// Low-rank unrelated scheduling: p_ij is the inner product of the job's size
/// vector with the machine's speed vector.
class LRSInstance {
 public:
  LRSInstance() = default;
  LRSInstance(std::size_t dimension, std::vector<LRSMachine> machines, std::vector<LRSJob> jobs);

  std::size_t dimension() const { return dimension_; }
  std::size_t machine_count() const { return machines_.size(); }
  std::size_t job_count() const { return jobs_.size(); }
  const std::vector<LRSMachine>& machines() const { return machines_; }
  const std::vector<LRSJob>& jobs() const { return jobs_; }
  const LRSMachine& machine(std::size_t i) const { return machines_.at(i); }
  const LRSJob& job(std::size_t j) const { return jobs_.at(j); }

  std::size_t machine_index(std::string_view id) const;
  std::size_t job_index(std::string_view id) const;
  std::optional<std::size_t> find_machine(const GadgetMeta& tag) const { return index_.machine(tag); }
  std::optional<std::size_t> find_job(const GadgetMeta& tag) const { return index_.job(tag); }

  friend bool operator==(const LRSInstance& a, const LRSInstance& b) {
    return a.dimension_ == b.dimension_ && a.machines_ == b.machines_ && a.jobs_ == b.jobs_;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<LRSMachine> machines_;
  std::vector<LRSJob> jobs_;
  IdIndex index_;
};

using AnyInstance = std::variant<RAInstance, RAIInstance, RARInstance, LRSInstance>;

/// Total map job index -> machine index.
struct Schedule {
  std::vector<std::size_t> assignment;

  friend bool operator==(const Schedule&, const Schedule&) = default;
  friend auto operator<=>(const Schedule&, const Schedule&) = default;
};

struct LoadProfile {
  std::vector<Rational> load;
  Rational makespan;
  Rational min_load;
};

std::size_t machine_count(const AnyInstance& instance);
std::size_t job_count(const AnyInstance& instance);
const std::string& machine_id(const AnyInstance& instance, std::size_t i);
const std::string& job_id(const AnyInstance& instance, std::size_t j);
std::size_t machine_index(const AnyInstance& instance, std::string_view id);
std::size_t job_index(const AnyInstance& instance, std::string_view id);

}  // namespace rsched
