#include "rsched/solver.hpp"

#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/reduction_output.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace rsched {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Found:
      return "FOUND";
    case Outcome::None:
      return "NONE";
    case Outcome::BudgetExceeded:
      return "BUDGET";
  }
  return "?";
}

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Makespan:
      return "makespan";
    case SolveMode::Exact:
      return "exact";
    case SolveMode::MinLoad:
      return "santa";
  }
  return "?";
}

SolveMode parse_solve_mode(std::string_view text) {
  if (text == "makespan") return SolveMode::Makespan;
  if (text == "exact") return SolveMode::Exact;
  if (text == "santa" || text == "min-load") return SolveMode::MinLoad;
  throw Error("unknown solve mode '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kMaxWidth = 19;
constexpr std::size_t kSubsetCandidates = 64;
constexpr std::int64_t kSubsetRange = 8192;

enum class Verdict { Found, None, Budget };

// Integer view of the instance shared by all workers.
struct Problem {
  std::size_t m = 0;
  std::size_t n = 0;
  SolveMode mode = SolveMode::Exact;
  std::int64_t target = 0;
  std::vector<std::int64_t> size;
  std::vector<std::vector<std::uint32_t>> eligible;
  std::vector<std::vector<std::uint32_t>> candidates;  // machine -> eligible jobs
  std::vector<std::uint32_t> rank;                     // position of the job id in sorted order
  std::vector<std::uint32_t> group_prev;               // previous identical job or kUnassigned
  std::vector<std::uint32_t> group_next;
  bool symmetry = true;

  bool digit_mode = false;
  std::size_t width = 0;
  std::vector<std::array<std::int8_t, kMaxWidth>> digits;
  std::array<std::int8_t, kMaxWidth> target_digits{};
};

std::array<std::int8_t, kMaxWidth> to_digits(std::int64_t v, std::size_t width) {
  std::array<std::int8_t, kMaxWidth> d{};
  for (std::size_t c = 0; c < width; ++c) {
    d[c] = static_cast<std::int8_t>(v % 10);
    v /= 10;
  }
  return d;
}

std::size_t max_jobs_at_target(const Problem& p) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < p.m; ++i) {
    std::vector<std::int64_t> s;
    for (const auto j : p.candidates[i]) s.push_back(p.size[j]);
    std::sort(s.begin(), s.end());
    std::int64_t sum = 0;
    std::size_t count = 0;
    for (const auto x : s) {
      if (sum + x > p.target) break;
      sum += x;
      ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

Problem prepare(const RAInstance& ra, const Rational& target, SolveMode mode) {
  if (target.sign() < 0) throw ValidationError("target must be non-negative");
  Problem p;
  p.m = ra.machine_count();
  p.n = ra.job_count();
  p.mode = mode;
  if (p.m >= kUnassigned || p.n >= kUnassigned) throw Error("instance too large for the solver");

  BigInt scale = target.denominator();
  for (const auto& job : ra.jobs()) {
    const BigInt d = job.size.denominator();
    scale = scale / boost::multiprecision::gcd(scale, d) * d;
  }
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  auto scaled = [&](const Rational& v) {
    const BigInt s = v.numerator() * (scale / v.denominator());
    if (s > limit) throw Error("sizes too large for the solver after scaling");
    return static_cast<std::int64_t>(s);
  };
  p.target = scaled(target);
  BigInt total = 0;
  for (const auto& job : ra.jobs()) {
    p.size.push_back(scaled(job.size));
    total += p.size.back();
  }
  if (total > limit) throw Error("total size too large for the solver");

  p.candidates.resize(p.m);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::vector<std::uint32_t> e;
    for (const auto i : ra.eligible(j)) e.push_back(static_cast<std::uint32_t>(i));
    for (const auto i : e) p.candidates[i].push_back(static_cast<std::uint32_t>(j));
    p.eligible.push_back(std::move(e));
  }

  std::vector<std::uint32_t> by_id(p.n);
  std::iota(by_id.begin(), by_id.end(), 0U);
  std::sort(by_id.begin(), by_id.end(), [&](auto a, auto b) { return ra.job(a).id < ra.job(b).id; });
  p.rank.resize(p.n);
  for (std::size_t k = 0; k < p.n; ++k) p.rank[by_id[k]] = static_cast<std::uint32_t>(k);

  p.group_prev.assign(p.n, kUnassigned);
  p.group_next.assign(p.n, kUnassigned);
  using Key = std::tuple<std::int64_t, std::vector<std::uint32_t>, int>;
  std::map<Key, std::uint32_t> last;
  for (std::size_t j = 0; j < p.n; ++j) {
    const int kind = ra.job(j).tag ? static_cast<int>(ra.job(j).tag->kind) : -1;
    Key key{p.size[j], p.eligible[j], kind};
    if (auto it = last.find(key); it != last.end()) {
      p.group_prev[j] = it->second;
      p.group_next[it->second] = static_cast<std::uint32_t>(j);
      it->second = static_cast<std::uint32_t>(j);
    } else {
      last.emplace(std::move(key), static_cast<std::uint32_t>(j));
    }
  }
  // Dominance moves in the min-load search do not commute with a fixed order
  // among identical jobs.
  p.symmetry = mode != SolveMode::MinLoad;

  if (mode == SolveMode::Exact && p.target > 0) {
    p.width = 0;
    for (auto v = p.target; v > 0; v /= 10) ++p.width;
    bool ok = p.width <= kMaxWidth;
    int max_digit = 0;
    for (std::size_t j = 0; j < p.n && ok; ++j) {
      if (p.size[j] > p.target) continue;
      for (auto v = p.size[j]; v > 0; v /= 10) max_digit = std::max(max_digit, static_cast<int>(v % 10));
    }
    if (ok && static_cast<std::size_t>(max_digit) * max_jobs_at_target(p) <= 9) {
      p.digit_mode = true;
      p.target_digits = to_digits(p.target, p.width);
      for (std::size_t j = 0; j < p.n; ++j)
        p.digits.push_back(p.size[j] > p.target ? std::array<std::int8_t, kMaxWidth>{} : to_digits(p.size[j], p.width));
    }
  }
  return p;
}

// Budget and cancellation shared by the workers of one call.
struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline;
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
};

class Search {
 public:
  Search(const Problem& p, Shared& shared, std::size_t branch)
      : p_(p), shared_(shared), branch_(branch), assign_(p.n, kUnassigned), load_(p.m, 0), cand_sum_(p.m, 0),
        cand_count_(p.m, 0), unassigned_(p.n) {
    for (std::size_t i = 0; i < p.m; ++i) {
      for (const auto j : p.candidates[i]) cand_sum_[i] += p.size[j];
      cand_count_[i] = p.candidates[i].size();
    }
    if (p.digit_mode) {
      resid_.assign(p.m, p.target_digits);
      cand_digit_.assign(p.m, {});
      for (std::size_t i = 0; i < p.m; ++i)
        for (const auto j : p.candidates[i])
          for (std::size_t c = 0; c < p.width; ++c) cand_digit_[i][c] += p.digits[j][c];
    }
  }

  // Enumeration sink; nullptr for decision mode.
  void collect_into(std::vector<Schedule>* out, std::size_t cap) {
    collected_ = out;
    cap_ = cap;
  }

  Verdict run() { return dfs(); }

  // Root branching for worker splitting: the chosen job and its options.
  bool root_choice(std::uint32_t& job, std::vector<std::uint32_t>& options) {
    if (unassigned_ == 0 || !globally_feasible()) return false;
    return choose(job, options);
  }

  void assign(std::uint32_t j, std::uint32_t i) {
    assign_[j] = i;
    load_[i] += p_.size[j];
    --unassigned_;
    for (const auto k : p_.eligible[j]) {
      cand_sum_[k] -= p_.size[j];
      --cand_count_[k];
    }
    if (p_.digit_mode) {
      for (std::size_t c = 0; c < p_.width; ++c) resid_[i][c] = static_cast<std::int8_t>(resid_[i][c] - p_.digits[j][c]);
      for (const auto k : p_.eligible[j])
        for (std::size_t c = 0; c < p_.width; ++c) cand_digit_[k][c] -= p_.digits[j][c];
    }
  }

  void unassign(std::uint32_t j) {
    const auto i = assign_[j];
    assign_[j] = kUnassigned;
    load_[i] -= p_.size[j];
    ++unassigned_;
    for (const auto k : p_.eligible[j]) {
      cand_sum_[k] += p_.size[j];
      ++cand_count_[k];
    }
    if (p_.digit_mode) {
      for (std::size_t c = 0; c < p_.width; ++c) resid_[i][c] = static_cast<std::int8_t>(resid_[i][c] + p_.digits[j][c]);
      for (const auto k : p_.eligible[j])
        for (std::size_t c = 0; c < p_.width; ++c) cand_digit_[k][c] += p_.digits[j][c];
    }
  }

  Schedule schedule() const { return Schedule{{assign_.begin(), assign_.end()}}; }
  bool overflowed() const { return overflow_; }

 private:
  bool out_of_budget() {
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) return true;
    const auto count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > shared_.max_nodes || ((count & 255U) == 0 && Clock::now() > shared_.deadline)) {
      shared_.out_of_budget = true;
      return true;
    }
    return false;
  }

  bool cancelled() const { return shared_.best_branch.load(std::memory_order_relaxed) < branch_; }

  // Machines the symmetry order still allows for j: at or after the nearest
  // placed earlier twin, at or before the nearest placed later twin.
  std::pair<std::uint32_t, std::uint32_t> symmetry_window(std::uint32_t j) const {
    std::uint32_t lo = 0, hi = kUnassigned;
    if (!p_.symmetry) return {lo, hi};
    for (auto k = p_.group_prev[j]; k != kUnassigned; k = p_.group_prev[k])
      if (assign_[k] != kUnassigned) {
        lo = assign_[k];
        break;
      }
    for (auto k = p_.group_next[j]; k != kUnassigned; k = p_.group_next[k])
      if (assign_[k] != kUnassigned) {
        hi = assign_[k];
        break;
      }
    return {lo, hi};
  }

  bool fits(std::uint32_t j, std::uint32_t i) const {
    if (p_.mode == SolveMode::MinLoad) return true;
    if (load_[i] + p_.size[j] > p_.target) return false;
    if (p_.digit_mode)
      for (std::size_t c = 0; c < p_.width; ++c)
        if (p_.digits[j][c] > resid_[i][c]) return false;
    return true;
  }

  // Options for job j in search order; returns the count only when `out`
  // is null.
  std::size_t options(std::uint32_t j, std::vector<std::uint32_t>* out) const {
    const auto [lo, hi] = symmetry_window(j);
    std::size_t count = 0;
    if (p_.mode == SolveMode::MinLoad) {
      bool dumped = false;
      for (const auto i : p_.eligible[j]) {
        if (load_[i] >= p_.target) {
          if (dumped) continue;
          dumped = true;
        }
        ++count;
        if (out) out->push_back(i);
      }
      return count;
    }
    for (const auto i : p_.eligible[j]) {
      if (i < lo || i > hi || !fits(j, i)) continue;
      ++count;
      if (out) out->push_back(i);
    }
    if (out && p_.mode == SolveMode::Makespan)
      std::stable_sort(out->begin(), out->end(), [&](auto a, auto b) { return load_[a] < load_[b]; });
    return count;
  }

  bool choose(std::uint32_t& best, std::vector<std::uint32_t>& opts) {
    best = kUnassigned;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t j = 0; j < p_.n; ++j) {
      if (assign_[j] != kUnassigned) continue;
      const auto count = options(j, nullptr);
      if (count == 0) return false;
      const bool better = count < best_count ||
                          (count == best_count && (p_.size[j] > p_.size[best] ||
                                                   (p_.size[j] == p_.size[best] && p_.rank[j] < p_.rank[best])));
      if (better) {
        best = j;
        best_count = count;
      }
    }
    opts.clear();
    options(best, &opts);
    return true;
  }

  bool subset_reachable(std::size_t i, std::int64_t residual) const {
    std::bitset<kSubsetRange + 1> reach;
    reach[0] = true;
    for (const auto j : p_.candidates[i]) {
      if (assign_[j] != kUnassigned || p_.size[j] > residual) continue;
      reach |= reach << static_cast<std::size_t>(p_.size[j]);
      if (reach[static_cast<std::size_t>(residual)]) return true;
    }
    return reach[static_cast<std::size_t>(residual)];
  }

  bool globally_feasible() const {
    std::int64_t remaining = 0;
    for (std::uint32_t j = 0; j < p_.n; ++j)
      if (assign_[j] == kUnassigned) remaining += p_.size[j];
    switch (p_.mode) {
      case SolveMode::Exact:
        for (std::size_t i = 0; i < p_.m; ++i) {
          const auto residual = p_.target - load_[i];
          if (residual == 0) continue;
          if (cand_sum_[i] < residual) return false;
          if (p_.digit_mode) {
            for (std::size_t c = 0; c < p_.width; ++c)
              if (cand_digit_[i][c] < resid_[i][c]) return false;
          } else if (cand_count_[i] <= kSubsetCandidates && residual <= kSubsetRange && !subset_reachable(i, residual)) {
            return false;
          }
        }
        return true;
      case SolveMode::Makespan: {
        std::int64_t room = 0;
        for (std::size_t i = 0; i < p_.m; ++i) room += p_.target - load_[i];
        return remaining <= room;
      }
      case SolveMode::MinLoad: {
        std::int64_t deficit = 0;
        for (std::size_t i = 0; i < p_.m; ++i) {
          if (load_[i] >= p_.target) continue;
          if (load_[i] + cand_sum_[i] < p_.target) return false;
          deficit += p_.target - load_[i];
        }
        return remaining >= deficit;
      }
    }
    return true;
  }

  bool leaf_ok() const {
    if (p_.mode == SolveMode::MinLoad)
      return std::all_of(load_.begin(), load_.end(), [&](auto l) { return l >= p_.target; });
    if (p_.mode == SolveMode::Exact)
      return std::all_of(load_.begin(), load_.end(), [&](auto l) { return l == p_.target; });
    return true;
  }

  Verdict dfs() {
    if (out_of_budget()) return Verdict::Budget;
    if (cancelled()) return Verdict::None;
    if (unassigned_ == 0) {
      if (!leaf_ok()) return Verdict::None;
      if (!collected_) return Verdict::Found;
      if (collected_->size() >= cap_) {
        overflow_ = true;
        return Verdict::Found;
      }
      collected_->push_back(schedule());
      return Verdict::None;
    }
    if (!globally_feasible()) return Verdict::None;
    std::uint32_t j = 0;
    std::vector<std::uint32_t> opts;
    if (!choose(j, opts)) return Verdict::None;
    for (const auto i : opts) {
      assign(j, i);
      const auto v = dfs();
      if (v != Verdict::None) return v;  // the caller reads the schedule before unwinding
      unassign(j);
    }
    return Verdict::None;
  }

  const Problem& p_;
  Shared& shared_;
  std::size_t branch_;
  std::vector<std::uint32_t> assign_;
  std::vector<std::int64_t> load_;
  std::vector<std::int64_t> cand_sum_;
  std::vector<std::size_t> cand_count_;
  std::vector<std::array<std::int8_t, kMaxWidth>> resid_;
  std::vector<std::array<std::int32_t, kMaxWidth>> cand_digit_;
  std::size_t unassigned_;
  std::vector<Schedule>* collected_ = nullptr;
  std::size_t cap_ = 0;
  bool overflow_ = false;
};

struct BranchResult {
  Verdict verdict = Verdict::None;
  std::optional<Schedule> schedule;
  std::vector<Schedule> collected;
  bool overflow = false;
};

// Runs the search, splitting the root branches across workers when asked.
// With `cap` set, collects load-T leaves instead of stopping at the first.
std::vector<BranchResult> run(const Problem& p, const SolveBudget& budget, Shared& shared,
                              std::optional<std::size_t> cap) {
  auto finish = [&](Search& s, Verdict v, BranchResult& r) {
    r.verdict = v;
    r.overflow = s.overflowed();
    if (v == Verdict::Found && !cap) r.schedule = s.schedule();
  };

  Search root(p, shared, 0);
  std::uint32_t job = 0;
  std::vector<std::uint32_t> options;
  const bool split = budget.workers > 1 && root.root_choice(job, options) && options.size() > 1;
  if (!split) {
    std::vector<BranchResult> out(1);
    if (cap) root.collect_into(&out[0].collected, *cap);
    finish(root, root.run(), out[0]);
    return out;
  }

  std::vector<BranchResult> out(options.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const auto b = next.fetch_add(1);
      if (b >= options.size()) return;
      Search s(p, shared, b);
      if (cap) s.collect_into(&out[b].collected, *cap);
      s.assign(job, options[b]);
      finish(s, s.run(), out[b]);
      if (out[b].verdict == Verdict::Found && !cap) {
        auto cur = shared.best_branch.load();
        while (b < cur && !shared.best_branch.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  std::vector<std::thread> threads;
  const auto count = std::min<std::size_t>(budget.workers, options.size());
  for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return out;
}

SolveResult decide(const RAInstance& ra, const Rational& target, SolveMode mode, const SolveBudget& budget) {
  const auto start = Clock::now();
  const auto p = prepare(ra, target, mode);
  Shared shared;
  shared.max_nodes = budget.max_nodes;
  shared.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.max_seconds));
  const auto branches = run(p, budget, shared, std::nullopt);

  SolveResult result;
  result.outcome = Outcome::None;
  for (const auto& b : branches) {
    if (b.verdict == Verdict::Found) {
      result.outcome = Outcome::Found;
      result.schedule = b.schedule;
      break;
    }
    if (b.verdict == Verdict::Budget) {
      result.outcome = Outcome::BudgetExceeded;
      break;
    }
  }
  result.stats.nodes = shared.nodes.load();
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.stats.digit_mode = p.digit_mode;
  return result;
}

void require_total(const RAInstance& ra, const Rational& target) {
  if (!total_size_check(ra, target))
    throw ValidationError("precondition violated: sizes sum to " + ra.total_size().to_string() + ", not |M| * " +
                          target.to_string());
}

bool total_matches(const RAInstance& ra, const Rational& target) {
  return ra.total_size() == Rational(static_cast<std::int64_t>(ra.machine_count())) * target;
}

}  // namespace

SolveResult decide_exact_load(const RAInstance& instance, const Rational& target, const SolveBudget& budget) {
  require_total(instance, target);
  return decide(instance, target, SolveMode::Exact, budget);
}

SolveResult decide_makespan(const RAInstance& instance, const Rational& target, const SolveBudget& budget) {
  if (budget.use_load_identity && total_matches(instance, target))
    return decide(instance, target, SolveMode::Exact, budget);
  if (instance.total_size() > Rational(static_cast<std::int64_t>(instance.machine_count())) * target) {
    SolveResult r;
    r.outcome = Outcome::None;
    return r;
  }
  return decide(instance, target, SolveMode::Makespan, budget);
}

SolveResult decide_min_load(const RAInstance& instance, const Rational& target, const SolveBudget& budget) {
  if (budget.use_load_identity && total_matches(instance, target))
    return decide(instance, target, SolveMode::Exact, budget);
  if (instance.total_size() < Rational(static_cast<std::int64_t>(instance.machine_count())) * target) {
    SolveResult r;
    r.outcome = Outcome::None;
    return r;
  }
  return decide(instance, target, SolveMode::MinLoad, budget);
}

SolveResult solve(const RAInstance& instance, const Rational& target, SolveMode mode, const SolveBudget& budget) {
  switch (mode) {
    case SolveMode::Makespan:
      return decide_makespan(instance, target, budget);
    case SolveMode::Exact:
      return decide_exact_load(instance, target, budget);
    case SolveMode::MinLoad:
      return decide_min_load(instance, target, budget);
  }
  throw Error("unknown solve mode");
}

SolveResult solve(const AnyInstance& instance, const Rational& target, SolveMode mode, const SolveBudget& budget) {
  if (std::holds_alternative<LRSInstance>(instance)) throw Error("the solver handles RA, RAI and RAR instances only");
  return solve(restricted_view(instance), target, mode, budget);
}

Enumeration enumerate_exact(const RAInstance& instance, const Rational& target, const SolveBudget& budget) {
  require_total(instance, target);
  const auto start = Clock::now();
  const auto p = prepare(instance, target, SolveMode::Exact);
  Shared shared;
  shared.max_nodes = budget.max_nodes;
  shared.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.max_seconds));
  const auto branches = run(p, budget, shared, budget.enum_cap);

  Enumeration e;
  bool overflow = false;
  for (const auto& b : branches) {
    e.budget_exceeded = e.budget_exceeded || b.verdict == Verdict::Budget;
    overflow = overflow || b.overflow;
    e.schedules.insert(e.schedules.end(), b.collected.begin(), b.collected.end());
  }
  std::sort(e.schedules.begin(), e.schedules.end());
  if (e.schedules.size() > budget.enum_cap) {
    e.schedules.resize(budget.enum_cap);
    overflow = true;
  }
  e.complete = !overflow && !e.budget_exceeded;
  e.stats.nodes = shared.nodes.load();
  e.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  e.stats.digit_mode = p.digit_mode;
  return e;
}

}  // namespace rsched
