#include "rsched/sat_reductions.hpp"

#include "rsched/claims.hpp"
#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"

#include <algorithm>
#include <map>

namespace rsched {

namespace {

using Digits = std::array<int, 10>;  // count, B, H, C, T, V1..V4, last

std::int64_t from_digits(const Digits& d) {
  std::int64_t v = 0;
  for (const int x : d) v = v * 10 + x;
  return v;
}

GadgetMeta tag(GadgetKind kind, std::vector<int> indices, std::optional<bool> config = std::nullopt) {
  return GadgetMeta{kind, std::move(indices), config};
}

std::string cfg(bool top) { return top ? "T" : "F"; }

std::string name(std::string_view prefix, std::initializer_list<int> indices) {
  std::string out(prefix);
  for (const int i : indices) out += "_" + std::to_string(i);
  return out;
}

const StarFormula& star_source(const ReductionOutput& out) {
  if (const auto* f = std::get_if<StarFormula>(&out.source)) return *f;
  throw ValidationError("reduction output does not carry its 3-SAT* source");
}

const CNFFormula& cnf_source(const ReductionOutput& out) {
  if (const auto* f = std::get_if<CNFFormula>(&out.source)) return *f;
  throw ValidationError("reduction output does not carry its CNF source");
}

std::size_t need_job(const RAInstance& ra, const GadgetMeta& meta) {
  if (auto j = ra.find_job(meta)) return *j;
  throw ValidationError("instance has no job tagged " + format_meta(meta));
}

std::size_t need_machine(const RAInstance& ra, const GadgetMeta& meta) {
  if (auto i = ra.find_machine(meta)) return *i;
  throw ValidationError("instance has no machine tagged " + format_meta(meta));
}

bool literal_value(const StarFormula& f, const std::vector<bool>& a, int i, int s) {
  return f.clauses[static_cast<std::size_t>(i - 1)].lits[static_cast<std::size_t>(s - 1)].value(a);
}

// Configurations of the three clause jobs of C_i.
std::array<bool, 3> clause_job_configs(const StarClause& c) {
  return {true, c.kind == ClauseKind::TwoInThree, false};
}

// Hands each CMach_{i,s} a clause job whose configuration matches the value
// the literal at (i,s) contributes.
void place_clause_jobs(const RAInstance& ra, const StarFormula& f, const std::vector<bool>& a,
                       std::vector<std::size_t>& assignment) {
  for (int i = 1; i <= static_cast<int>(f.clauses.size()); ++i) {
    const auto configs = clause_job_configs(f.clauses[static_cast<std::size_t>(i - 1)]);
    std::array<bool, 3> used{};
    for (int s = 1; s <= 3; ++s) {
      const bool want = literal_value(f, a, i, s);
      int pick = -1;
      for (int k = 0; k < 3 && pick < 0; ++k)
        if (!used[static_cast<std::size_t>(k)] && configs[static_cast<std::size_t>(k)] == want) pick = k;
      if (pick < 0) throw ValidationError("clause " + std::to_string(i) + " is not fulfilled");
      used[static_cast<std::size_t>(pick)] = true;
      assignment[need_job(ra, tag(GadgetKind::CJob, {i, pick + 1}, want))] =
          need_machine(ra, tag(GadgetKind::CMach, {i, s}));
    }
  }
}

void place_private_loads(const RAInstance& ra, std::vector<std::size_t>& assignment) {
  for (std::size_t j = 0; j < ra.job_count(); ++j)
    if (ra.eligible(j).size() == 1) assignment[j] = ra.eligible(j).front();
}

Schedule finish(const RAInstance& ra, std::vector<std::size_t> assignment) {
  for (std::size_t j = 0; j < assignment.size(); ++j)
    if (assignment[j] >= ra.machine_count()) throw Error("builder left job '" + ra.job(j).id + "' unplaced");
  return Schedule{std::move(assignment)};
}

void require_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto report = check_claims(out, schedule);
  for (const auto& r : report.results)
    if (!r.passed) throw ValidationError("claim " + r.id + " fails: " + r.witness);
}

}  // namespace

std::vector<int> decimal_digits(const Rational& value, std::size_t width) {
  if (!value.is_integer() || value.sign() < 0) throw ValidationError("digits need a non-negative integer");
  BigInt v = value.numerator();
  std::vector<int> digits(width, 0);
  for (std::size_t k = width; k-- > 0;) {
    digits[k] = static_cast<int>(v % 10);
    v /= 10;
  }
  if (v != 0) throw ValidationError(value.to_string() + " has more than " + std::to_string(width) + " digits");
  return digits;
}

// --- simple ------------------------------------------------------------------

ReductionOutput reduce_simple(const StarFormula& f) {
  const auto kappa = kappa_of(f);
  const int n = f.n;
  const int clauses = static_cast<int>(f.clauses.size());
  RAInstanceBuilder b;

  std::vector<std::array<std::size_t, 2>> tmach(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    for (int q = 1; q <= 2; ++q)
      tmach[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(q - 1)] =
          b.add_machine(name("TMach", {j, q}), tag(GadgetKind::TMach, {j, q}));
  std::vector<std::array<std::size_t, 3>> cmach(static_cast<std::size_t>(clauses));
  for (int i = 1; i <= clauses; ++i)
    for (int s = 1; s <= 3; ++s)
      cmach[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s - 1)] =
          b.add_machine(name("CMach", {i, s}), tag(GadgetKind::CMach, {i, s}));
  auto cm = [&](std::pair<int, int> slot) {
    return cmach[static_cast<std::size_t>(slot.first - 1)][static_cast<std::size_t>(slot.second - 1)];
  };

  for (int i = 1; i <= clauses; ++i)
    for (int s = 1; s <= 3; ++s) {
      const auto m = cm({i, s});
      b.add_job("PL_" + name("CMach", {i, s}), 111, {m}, tag(GadgetKind::PrivateLoad, {static_cast<int>(m) + 1}));
    }
  for (int i = 1; i <= clauses; ++i) {
    const auto configs = clause_job_configs(f.clauses[static_cast<std::size_t>(i - 1)]);
    const auto& row = cmach[static_cast<std::size_t>(i - 1)];
    for (int s = 1; s <= 3; ++s) {
      const bool top = configs[static_cast<std::size_t>(s - 1)];
      b.add_job(name("CJob", {i, s}) + "_" + cfg(top), top ? 100 : 101, {row.begin(), row.end()},
                tag(GadgetKind::CJob, {i, s}, top));
    }
  }
  for (int j = 1; j <= n; ++j) {
    const auto& tm = tmach[static_cast<std::size_t>(j - 1)];
    for (const bool top : {true, false})
      b.add_job(name("TJob", {j}) + "_" + cfg(top), top ? 100 : 102, {tm[0], tm[1]}, tag(GadgetKind::TJob, {j}, top));
  }
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      for (const bool top : {true, false})
        b.add_job(name("VJob", {j, t}) + "_" + cfg(top), top ? 111 : 110,
                  {tmach[static_cast<std::size_t>(j - 1)][t <= 2 ? 0 : 1], cm(kappa.at(j, t))},
                  tag(GadgetKind::VJob, {j, t}, top));

  return ReductionOutput{ReductionKind::Simple, std::move(b).build(), Rational(kSimpleTarget), f};
}

Schedule build_schedule_simple(const ReductionOutput& out, const std::vector<bool>& a) {
  const auto& f = star_source(out);
  const auto& ra = std::get<RAInstance>(out.instance);
  if (a.size() != static_cast<std::size_t>(f.n) || !satisfies(f, a))
    throw ValidationError("assignment does not fulfil the formula");
  const auto kappa = kappa_of(f);
  std::vector<std::size_t> assignment(ra.job_count(), ra.machine_count());
  place_private_loads(ra, assignment);
  place_clause_jobs(ra, f, a, assignment);
  for (int j = 1; j <= f.n; ++j) {
    const bool x = a[static_cast<std::size_t>(j - 1)];
    const auto t1 = need_machine(ra, tag(GadgetKind::TMach, {j, 1}));
    const auto t2 = need_machine(ra, tag(GadgetKind::TMach, {j, 2}));
    // The variable jobs left on TMach_{j,1} carry the opposite of x_j.
    assignment[need_job(ra, tag(GadgetKind::TJob, {j}, !x))] = t1;
    assignment[need_job(ra, tag(GadgetKind::TJob, {j}, x))] = t2;
    for (int t = 1; t <= 4; ++t) {
      const bool up = t <= 2 ? x : !x;
      const auto [i, s] = kappa.at(j, t);
      assignment[need_job(ra, tag(GadgetKind::VJob, {j, t}, up))] = need_machine(ra, tag(GadgetKind::CMach, {i, s}));
      assignment[need_job(ra, tag(GadgetKind::VJob, {j, t}, !up))] = t <= 2 ? t1 : t2;
    }
  }
  return finish(ra, std::move(assignment));
}

std::vector<bool> extract_assignment_simple(const ReductionOutput& out, const Schedule& schedule) {
  const auto& f = star_source(out);
  const auto& ra = std::get<RAInstance>(out.instance);
  require_claims(out, schedule);
  const auto kappa = kappa_of(f);
  std::vector<bool> a(static_cast<std::size_t>(f.n));
  for (int j = 1; j <= f.n; ++j) {
    const auto [i, s] = kappa.at(j, 1);
    const auto machine = need_machine(ra, tag(GadgetKind::CMach, {i, s}));
    const auto top = need_job(ra, tag(GadgetKind::VJob, {j, 1}, true));
    const auto bottom = need_job(ra, tag(GadgetKind::VJob, {j, 1}, false));
    if (schedule.assignment[top] == machine) {
      a[static_cast<std::size_t>(j - 1)] = true;
    } else if (schedule.assignment[bottom] == machine) {
      a[static_cast<std::size_t>(j - 1)] = false;
    } else {
      throw ValidationError("no variable job of x_" + std::to_string(j) + " on " + ra.machine(machine).id);
    }
  }
  return a;
}

// --- refined (interval) ------------------------------------------------------

ReductionOutput reduce_rai(const StarFormula& f) {
  const auto kappa = kappa_of(f);
  const int n = f.n;
  const int clauses = static_cast<int>(f.clauses.size());

  std::vector<Machine> machines;
  std::vector<Digits> loads;
  std::map<GadgetMeta, std::size_t> pos;
  auto add = [&](GadgetMeta meta, std::string id, const Digits& load) {
    pos[meta] = machines.size();
    machines.push_back({std::move(id), std::move(meta)});
    loads.push_back(load);
  };
  constexpr Digits kTMach1{0, 1, 1, 1, 0, 0, 0, 1, 1, 0};
  constexpr Digits kTMach2{0, 1, 1, 1, 0, 1, 1, 0, 0, 0};
  constexpr Digits kBridge{1, 0, 0, 1, 1, 1, 1, 1, 1, 1};
  constexpr Digits kClause{1, 1, 0, 0, 1, 1, 1, 1, 1, 1};
  auto gateway = [](int t) {
    Digits d{1, 1, 0, 1, 1, 1, 1, 1, 1, 1};
    d[static_cast<std::size_t>(4 + t)] = 0;
    return d;
  };

  for (int j = 1; j <= n; ++j) {
    if (j > 1) {
      std::vector<std::pair<int, int>> in;
      for (int jp = 1; jp < j; ++jp)
        for (int t = 1; t <= 4; ++t) in.emplace_back(jp, t);
      std::sort(in.begin(), in.end(), [&](auto x, auto y) {
        return kappa.at(x.first, x.second) < kappa.at(y.first, y.second);
      });
      for (const auto& [jp, t] : in)
        add(tag(GadgetKind::BMachIn, {jp, t, j}), name("BMachIn", {jp, t, j}), kBridge);
    }
    add(tag(GadgetKind::TMach, {j, 1}), name("TMach", {j, 1}), kTMach1);
    add(tag(GadgetKind::TMach, {j, 2}), name("TMach", {j, 2}), kTMach2);

    // (owner j', t, is gateway)
    std::vector<std::array<int, 3>> succ;
    for (int t = 1; t <= 4; ++t) succ.push_back({j, t, 1});
    for (int jp = 1; jp < j; ++jp)
      for (int t = 1; t <= 4; ++t) succ.push_back({jp, t, 0});
    std::sort(succ.begin(), succ.end(), [&](const auto& x, const auto& y) {
      return kappa.at(x[0], x[1]) > kappa.at(y[0], y[1]);
    });
    for (const auto& [jp, t, gate] : succ) {
      if (gate != 0)
        add(tag(GadgetKind::GMach, {j, t}), name("GMach", {j, t}), gateway(t));
      else
        add(tag(GadgetKind::BMachOut, {jp, t, j}), name("BMachOut", {jp, t, j}), kBridge);
    }
  }
  for (int i = 1; i <= clauses; ++i)
    for (int s = 1; s <= 3; ++s) add(tag(GadgetKind::CMach, {i, s}), name("CMach", {i, s}), kClause);

  auto at = [&](GadgetKind kind, std::vector<int> idx) { return pos.at(tag(kind, std::move(idx))); };

  std::vector<Job> jobs;
  std::vector<Interval> intervals;
  auto job = [&](std::string id, const Digits& d, std::size_t first, std::size_t last, GadgetMeta meta) {
    jobs.push_back({std::move(id), Rational(from_digits(d)), std::move(meta)});
    intervals.push_back({first, last});
  };

  for (std::size_t p = 0; p < machines.size(); ++p)
    job("PL_" + machines[p].id, loads[p], p, p, tag(GadgetKind::PrivateLoad, {static_cast<int>(p) + 1}));

  for (int i = 1; i <= clauses; ++i) {
    const auto configs = clause_job_configs(f.clauses[static_cast<std::size_t>(i - 1)]);
    for (int s = 1; s <= 3; ++s) {
      const bool top = configs[static_cast<std::size_t>(s - 1)];
      job(name("CJob", {i, s}) + "_" + cfg(top), {1, 0, 0, 1, 0, 0, 0, 0, 0, top ? 0 : 1},
          at(GadgetKind::CMach, {i, 1}), at(GadgetKind::CMach, {i, 3}), tag(GadgetKind::CJob, {i, s}, top));
    }
  }
  for (int j = 1; j <= n; ++j)
    for (const bool top : {true, false})
      job(name("TJob", {j}) + "_" + cfg(top), {1, 0, 0, 0, 1, 0, 0, 0, 0, top ? 2 : 0}, at(GadgetKind::TMach, {j, 1}),
          at(GadgetKind::TMach, {j, 2}), tag(GadgetKind::TJob, {j}, top));
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      for (const bool top : {true, false}) {
        Digits d{1, 0, 0, 0, 0, 0, 0, 0, 0, top ? 0 : 1};
        d[static_cast<std::size_t>(4 + t)] = 1;
        job(name("VJob", {j, t}) + "_" + cfg(top), d, at(GadgetKind::TMach, {j, t <= 2 ? 1 : 2}),
            at(GadgetKind::GMach, {j, t}), tag(GadgetKind::VJob, {j, t}, top));
      }
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      for (int jp = j + 1; jp <= n; ++jp)
        for (const bool top : {true, false})
          job(name("BJob", {j, t, jp}) + "_" + cfg(top), {1, 1, 0, 0, 0, 0, 0, 0, 0, top ? 0 : 1},
              at(GadgetKind::BMachIn, {j, t, jp}), at(GadgetKind::BMachOut, {j, t, jp}),
              tag(GadgetKind::BJob, {j, t, jp}, top));
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      for (int jp = j; jp <= n; ++jp) {
        const auto first = jp > j ? at(GadgetKind::BMachOut, {j, t, jp}) : at(GadgetKind::GMach, {j, t});
        const auto [ci, cs] = kappa.at(j, t);
        const auto last = jp < n ? at(GadgetKind::BMachIn, {j, t, jp + 1}) : at(GadgetKind::CMach, {ci, cs});
        for (const bool top : {true, false})
          job(name("HJob", {j, t, jp}) + "_" + cfg(top), {1, 0, 1, 0, 0, 0, 0, 0, 0, top ? 1 : 0}, first, last,
              tag(GadgetKind::HJob, {j, t, jp}, top));
      }

  return ReductionOutput{ReductionKind::Rai,
                         RAIInstance::from_intervals(std::move(machines), std::move(jobs), std::move(intervals)),
                         Rational(kRaiTarget), f};
}

Schedule build_schedule_rai(const ReductionOutput& out, const std::vector<bool>& a) {
  const auto& f = star_source(out);
  const auto& ra = std::get<RAIInstance>(out.instance).base();
  if (a.size() != static_cast<std::size_t>(f.n) || !satisfies(f, a))
    throw ValidationError("assignment does not fulfil the formula");
  const auto kappa = kappa_of(f);
  const int n = f.n;
  std::vector<std::size_t> assignment(ra.job_count(), ra.machine_count());
  place_private_loads(ra, assignment);
  place_clause_jobs(ra, f, a, assignment);

  auto put = [&](GadgetKind jk, std::vector<int> ji, bool config, GadgetKind mk, std::vector<int> mi) {
    assignment[need_job(ra, tag(jk, std::move(ji), config))] = need_machine(ra, tag(mk, std::move(mi)));
  };
  for (int j = 1; j <= n; ++j) {
    const bool x = a[static_cast<std::size_t>(j - 1)];
    put(GadgetKind::TJob, {j}, x, GadgetKind::TMach, {j, 1});
    put(GadgetKind::TJob, {j}, !x, GadgetKind::TMach, {j, 2});
    for (int t = 1; t <= 4; ++t) {
      const bool up = t <= 2 ? x : !x;
      const auto [i, s] = kappa.at(j, t);
      put(GadgetKind::HJob, {j, t, n}, up, GadgetKind::CMach, {i, s});
      for (int jp = j + 1; jp <= n; ++jp) {
        put(GadgetKind::HJob, {j, t, jp}, !up, GadgetKind::BMachOut, {j, t, jp});
        put(GadgetKind::BJob, {j, t, jp}, !up, GadgetKind::BMachOut, {j, t, jp});
        put(GadgetKind::HJob, {j, t, jp - 1}, up, GadgetKind::BMachIn, {j, t, jp});
        put(GadgetKind::BJob, {j, t, jp}, up, GadgetKind::BMachIn, {j, t, jp});
      }
      put(GadgetKind::HJob, {j, t, j}, !up, GadgetKind::GMach, {j, t});
      put(GadgetKind::VJob, {j, t}, !up, GadgetKind::GMach, {j, t});
      put(GadgetKind::VJob, {j, t}, up, GadgetKind::TMach, {j, t <= 2 ? 1 : 2});
    }
  }
  return finish(ra, std::move(assignment));
}

std::vector<bool> extract_assignment_rai(const ReductionOutput& out, const Schedule& schedule) {
  const auto& f = star_source(out);
  const auto& ra = std::get<RAIInstance>(out.instance).base();
  require_claims(out, schedule);
  const auto kappa = kappa_of(f);
  std::vector<bool> a(static_cast<std::size_t>(f.n));
  for (int j = 1; j <= f.n; ++j) {
    const auto [i, s] = kappa.at(j, 1);
    const auto machine = need_machine(ra, tag(GadgetKind::CMach, {i, s}));
    const auto top = need_job(ra, tag(GadgetKind::HJob, {j, 1, f.n}, true));
    const auto bottom = need_job(ra, tag(GadgetKind::HJob, {j, 1, f.n}, false));
    if (schedule.assignment[top] == machine) {
      a[static_cast<std::size_t>(j - 1)] = true;
    } else if (schedule.assignment[bottom] == machine) {
      a[static_cast<std::size_t>(j - 1)] = false;
    } else {
      throw ValidationError("no highway job of x_" + std::to_string(j) + " on " + ra.machine(machine).id);
    }
  }
  return a;
}

DigitSafety digit_safety(const ReductionOutput& out) {
  if (!out.target) throw ValidationError("digit check needs a target");
  const auto ra = restricted_view(out.instance);
  const auto& target = *out.target;
  DigitSafety result;
  for (const auto& job : ra.jobs()) {
    if (!job.size.is_integer() || job.size.sign() < 0) throw ValidationError("digit check needs integer sizes");
    for (auto v = job.size.numerator(); v != 0; v /= 10) result.max_digit = std::max(result.max_digit, static_cast<int>(v % 10));
  }
  std::vector<std::vector<Rational>> sizes(ra.machine_count());
  for (std::size_t j = 0; j < ra.job_count(); ++j)
    for (const auto i : ra.eligible(j)) sizes[i].push_back(ra.job(j).size);
  for (auto& list : sizes) {
    std::sort(list.begin(), list.end());
    Rational sum;
    std::size_t count = 0;
    for (const auto& s : list) {
      if (sum + s > target) break;
      sum += s;
      ++count;
    }
    result.max_jobs_per_machine = std::max(result.max_jobs_per_machine, count);
  }
  result.carry_free = static_cast<std::size_t>(result.max_digit) * result.max_jobs_per_machine <= 9;
  return result;
}

// --- graph balancing ----------------------------------------------------------

namespace {

struct GbLayout {
  std::vector<Machine> machines;
  struct JobSpec {
    Job job;
    std::vector<std::size_t> eligible;
  };
  std::vector<JobSpec> jobs;
};

GbLayout gb_layout(const CNFFormula& f) {
  if (!is_modified(f)) throw ValidationError("formula is not in modified 3-SAT form");
  GbLayout g;
  const int m = static_cast<int>(f.clauses.size());
  for (int i = 1; i <= m; ++i) g.machines.push_back({name("v", {i}), tag(GadgetKind::ClauseMach, {i})});
  auto u = [&](int j, int alpha) { return static_cast<std::size_t>(m + 2 * (j - 1) + (alpha == 1 ? 0 : 1)); };
  for (int j = 1; j <= f.n; ++j)
    for (const int alpha : {1, 0}) g.machines.push_back({name("u", {j, alpha}), tag(GadgetKind::LiteralMach, {j, alpha})});

  for (int j = 1; j <= f.n; ++j)
    g.jobs.push_back({{name("e", {j}), 2, tag(GadgetKind::TruthJob, {j})}, {u(j, 1), u(j, 0)}});
  for (int i = 1; i <= m; ++i) {
    const auto& c = f.clauses[static_cast<std::size_t>(i - 1)];
    for (int s = 1; s <= static_cast<int>(c.size()); ++s) {
      const auto& l = c[static_cast<std::size_t>(s - 1)];
      const int alpha = l.positive ? 1 : 0;
      g.jobs.push_back({{name("f", {i, s}), 1, tag(GadgetKind::ClauseJob, {i, l.var, alpha, s})},
                        {static_cast<std::size_t>(i - 1), u(l.var, alpha)}});
    }
    if (c.size() < 3)
      g.jobs.push_back({{name("d", {i}), c.size() == 2 ? 1 : 2, tag(GadgetKind::DummyClause, {i})},
                        {static_cast<std::size_t>(i - 1)}});
  }
  return g;
}

}  // namespace

ReductionOutput reduce_graph_balancing(const CNFFormula& f) {
  auto g = gb_layout(f);
  std::vector<Job> jobs;
  std::vector<std::vector<std::size_t>> eligible;
  for (auto& spec : g.jobs) {
    jobs.push_back(std::move(spec.job));
    eligible.push_back(std::move(spec.eligible));
  }
  return ReductionOutput{ReductionKind::GraphBalancing,
                         RAInstance(std::move(g.machines), std::move(jobs), std::move(eligible)), Rational(2), f};
}

ReductionOutput model_rar4(const CNFFormula& f) {
  auto g = gb_layout(f);
  const std::int64_t n = f.n;
  const std::int64_t m = static_cast<std::int64_t>(f.clauses.size());
  auto vec = [](std::initializer_list<std::int64_t> v) {
    std::vector<Rational> out;
    for (const auto x : v) out.emplace_back(x);
    return out;
  };
  std::vector<RARMachine> machines;
  for (auto& mach : g.machines) {
    const auto& t = *mach.tag;
    std::vector<Rational> cap;
    if (t.kind == GadgetKind::ClauseMach) {
      const std::int64_t i = t.indices[0];
      cap = vec({2 * n + 1, 2 * n + 1, i, m + 1 - i});
    } else {
      const std::int64_t j = t.indices[0];
      const std::int64_t alpha = t.indices[1];
      cap = vec({2 * j - alpha, 2 * n + 1 - (2 * j - alpha), m + 1, m + 1});
    }
    machines.push_back({std::move(mach.id), std::move(cap), std::move(mach.tag)});
  }
  std::vector<RARJob> jobs;
  for (auto& spec : g.jobs) {
    const auto& t = *spec.job.tag;
    std::vector<Rational> demand;
    if (t.kind == GadgetKind::TruthJob) {
      const std::int64_t j = t.indices[0];
      demand = vec({2 * j - 1, 2 * n + 1 - 2 * j, m + 1, m + 1});
    } else if (t.kind == GadgetKind::ClauseJob) {
      const std::int64_t i = t.indices[0];
      const std::int64_t j = t.indices[1];
      const std::int64_t alpha = t.indices[2];
      demand = vec({2 * j - alpha, 2 * n + 1 - (2 * j - alpha), i, m + 1 - i});
    } else {
      const std::int64_t i = t.indices[0];
      demand = vec({2 * n + 1, 2 * n + 1, i, m + 1 - i});
    }
    jobs.push_back({std::move(spec.job.id), spec.job.size, std::move(demand), std::move(spec.job.tag)});
  }
  return ReductionOutput{ReductionKind::Rar4, RARInstance(4, std::move(machines), std::move(jobs)), Rational(2), f};
}

Schedule build_schedule_gb(const ReductionOutput& out, const std::vector<bool>& a) {
  const auto& f = cnf_source(out);
  if (a.size() != static_cast<std::size_t>(f.n) || !satisfies(f, a))
    throw ValidationError("assignment does not fulfil the formula");
  const auto ra = restricted_view(out.instance);
  std::vector<std::size_t> assignment(ra.job_count(), ra.machine_count());
  place_private_loads(ra, assignment);
  for (int j = 1; j <= f.n; ++j) {
    const bool x = a[static_cast<std::size_t>(j - 1)];
    assignment[need_job(ra, tag(GadgetKind::TruthJob, {j}))] =
        need_machine(ra, tag(GadgetKind::LiteralMach, {j, x ? 0 : 1}));
  }
  for (int i = 1; i <= static_cast<int>(f.clauses.size()); ++i) {
    const auto& c = f.clauses[static_cast<std::size_t>(i - 1)];
    bool sent = false;
    for (int s = 1; s <= static_cast<int>(c.size()); ++s) {
      const auto& l = c[static_cast<std::size_t>(s - 1)];
      const auto job = need_job(ra, tag(GadgetKind::ClauseJob, {i, l.var, l.positive ? 1 : 0, s}));
      if (!sent && l.value(a)) {
        assignment[job] = need_machine(ra, tag(GadgetKind::LiteralMach, {l.var, l.positive ? 1 : 0}));
        sent = true;
      } else {
        assignment[job] = need_machine(ra, tag(GadgetKind::ClauseMach, {i}));
      }
    }
  }
  return finish(ra, std::move(assignment));
}

std::vector<bool> extract_assignment_gb(const ReductionOutput& out, const Schedule& schedule) {
  const auto& f = cnf_source(out);
  const auto ra = restricted_view(out.instance);
  const auto profile = evaluate(ra, schedule);
  if (out.target && profile.makespan > *out.target)
    throw ValidationError("schedule exceeds makespan " + out.target->to_string());
  std::vector<bool> a(static_cast<std::size_t>(f.n));
  for (int j = 1; j <= f.n; ++j)
    a[static_cast<std::size_t>(j - 1)] = schedule.assignment[need_job(ra, tag(GadgetKind::TruthJob, {j}))] ==
                                          need_machine(ra, tag(GadgetKind::LiteralMach, {j, 0}));
  return a;
}

}  // namespace rsched
