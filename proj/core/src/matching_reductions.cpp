#include "rsched/matching_reductions.hpp"

#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"

#include <algorithm>
#include <map>

namespace rsched {

AlphaBetaReport check_alpha_beta(const AlphaBeta& ab) {
  AlphaBetaReport report;
  const auto v = ab.values();
  report.sums_to_47 = ab.alpha_a + ab.alpha_b + ab.alpha_c == 47 && ab.beta_a + ab.beta_b + ab.beta_c == 47;
  report.any_four_exceed = true;
  report.fewer_than_three_below = true;
  for (unsigned mask = 0; mask < 64; ++mask) {
    int sum = 0;
    std::vector<int> picked;
    for (unsigned k = 0; k < 6; ++k)
      if ((mask >> k) & 1U) {
        sum += v[k];
        picked.push_back(v[k]);
      }
    const auto size = picked.size();
    if (size >= 4 && sum <= 47) report.any_four_exceed = false;
    if (size < 3 && sum >= 47) report.fewer_than_three_below = false;
    if (size == 3 && sum == 47) {
      std::sort(picked.begin(), picked.end());
      report.triples_summing_to_47.push_back({picked[0], picked[1], picked[2]});
    }
  }
  std::sort(report.triples_summing_to_47.begin(), report.triples_summing_to_47.end());
  std::array<int, 3> alpha{ab.alpha_a, ab.alpha_b, ab.alpha_c};
  std::array<int, 3> beta{ab.beta_a, ab.beta_b, ab.beta_c};
  std::sort(alpha.begin(), alpha.end());
  std::sort(beta.begin(), beta.end());
  std::vector<std::array<int, 3>> expected{alpha, beta};
  std::sort(expected.begin(), expected.end());
  report.only_two_triples = report.triples_summing_to_47 == expected;
  return report;
}

namespace {

using Elements = std::array<Element, 3>;

int part_code(Part p) { return static_cast<int>(p) + 1; }

std::vector<Elements> machine_triplets(const SourceProblem& source) {
  std::vector<Elements> out;
  if (const auto* d = std::get_if<ThreeDM>(&source)) {
    for (const auto& t : d->triplets) out.push_back({Element{Part::A, t.a}, Element{Part::B, t.b}, Element{Part::C, t.c}});
  } else if (const auto* s = std::get_if<ThreeDMStar>(&source)) {
    for (const auto& t : s->triplets()) out.push_back({t.x, t.y, t.z});
  } else {
    throw ValidationError("reduction output does not carry a matching source");
  }
  return out;
}

std::string machine_name(const Elements& e) { return to_string(e[0]) + to_string(e[1]) + to_string(e[2]); }

// Element and dummy jobs over the triplet machines, shared by every
// matching reduction. `parts` lists which element sets get jobs at all.
struct MatchingJobs {
  struct Spec {
    std::string id;
    Element x;
    bool dummy = false;
    int copy = 0;
    std::vector<std::size_t> eligible;  // machines e with x in e
  };
  std::vector<Spec> jobs;
};

// With `lst_layout`, the first part only gets dummies and the others only
// element jobs; otherwise every element gets one element job and |E(x)|-1
// dummies.
MatchingJobs matching_jobs(const std::vector<Elements>& triplets, int per_part, const std::vector<Part>& parts,
                           bool lst_layout) {
  MatchingJobs mj;
  for (const auto part : parts) {
    for (int i = 1; i <= per_part; ++i) {
      const Element x{part, i};
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < triplets.size(); ++k)
        if (std::find(triplets[k].begin(), triplets[k].end(), x) != triplets[k].end()) on.push_back(k);
      if (on.empty()) throw ValidationError("element " + to_string(x) + " lies in no triplet");
      const bool first = part == parts.front();
      if (!lst_layout || !first) mj.jobs.push_back({"elem_" + to_string(x), x, false, 0, on});
      if (lst_layout && !first) continue;
      for (std::size_t c = 1; c < on.size(); ++c)
        mj.jobs.push_back({"dummy_" + to_string(x) + "_" + std::to_string(c), x, true, static_cast<int>(c), on});
    }
  }
  return mj;
}

GadgetMeta job_tag(const MatchingJobs::Spec& s) {
  if (s.dummy) return GadgetMeta{GadgetKind::DummyJob, {part_code(s.x.part), s.x.index, s.copy}, std::nullopt};
  return GadgetMeta{GadgetKind::ElementJob, {part_code(s.x.part), s.x.index}, std::nullopt};
}

GadgetMeta machine_tag(const SourceProblem& source, std::size_t k, const Elements& e) {
  if (std::holds_alternative<ThreeDM>(source))
    return GadgetMeta{GadgetKind::Triplet, {e[0].index, e[1].index, e[2].index}, std::nullopt};
  return GadgetMeta{GadgetKind::Triplet, {static_cast<int>(k) + 1}, std::nullopt};
}

int alpha_of(Part p, const AlphaBeta& ab) {
  switch (p) {
    case Part::A:
    case Part::APrime:
      return ab.alpha_a;
    case Part::B:
    case Part::BPrime:
      return ab.alpha_b;
    default:
      return ab.alpha_c;
  }
}

int beta_of(Part p, const AlphaBeta& ab) {
  switch (p) {
    case Part::A:
    case Part::APrime:
      return ab.beta_a;
    case Part::B:
    case Part::BPrime:
      return ab.beta_b;
    default:
      return ab.beta_c;
  }
}

std::vector<Rational> ints(std::initializer_list<std::int64_t> v) {
  std::vector<Rational> out;
  for (const auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

ReductionOutput reduce_lst(const ThreeDM& d) {
  validate(d);
  const SourceProblem source = d;
  const auto triplets = machine_triplets(source);
  RAInstanceBuilder b;
  for (std::size_t k = 0; k < triplets.size(); ++k)
    b.add_machine(machine_name(triplets[k]), machine_tag(source, k, triplets[k]));
  const auto mj = matching_jobs(triplets, d.n, {Part::A, Part::B, Part::C}, true);
  for (const auto& s : mj.jobs) b.add_job(s.id, s.dummy ? 2 : 1, s.eligible, job_tag(s));
  return ReductionOutput{ReductionKind::Lst, std::move(b).build(), Rational(2), d};
}

ReductionOutput model_rar6(const ThreeDM& d) {
  validate(d);
  const SourceProblem source = d;
  const auto triplets = machine_triplets(source);
  const std::int64_t n = d.n;
  std::vector<RARMachine> machines;
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    std::vector<Rational> cap;
    for (const auto& x : triplets[k]) {
      cap.emplace_back(std::int64_t{x.index});
      cap.emplace_back(n + 1 - x.index);
    }
    machines.push_back({machine_name(triplets[k]), std::move(cap), machine_tag(source, k, triplets[k])});
  }
  std::vector<RARJob> jobs;
  const auto mj = matching_jobs(triplets, d.n, {Part::A, Part::B, Part::C}, true);
  for (const auto& s : mj.jobs) {
    std::vector<Rational> demand(6);
    const auto r = static_cast<std::size_t>(2 * static_cast<int>(s.x.part));
    demand[r] = Rational(std::int64_t{s.x.index});
    demand[r + 1] = Rational(n + 1 - s.x.index);
    jobs.push_back({s.id, Rational(s.dummy ? 2 : 1), std::move(demand), job_tag(s)});
  }
  return ReductionOutput{ReductionKind::Rar6, RARInstance(6, std::move(machines), std::move(jobs)), Rational(2), d};
}

ReductionOutput reduce_rar3(const ThreeDM& d, const AlphaBeta& ab) {
  validate(d);
  const SourceProblem source = d;
  const auto triplets = machine_triplets(source);
  std::vector<RARMachine> machines;
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    const auto& e = triplets[k];
    machines.push_back({machine_name(e), ints({e[0].index, e[1].index, e[2].index}), machine_tag(source, k, e)});
  }
  std::vector<RARJob> jobs;
  const auto mj = matching_jobs(triplets, d.n, {Part::A, Part::B, Part::C}, false);
  for (const auto& s : mj.jobs) {
    std::vector<Rational> demand(3);
    demand[static_cast<std::size_t>(s.x.part)] = Rational(std::int64_t{s.x.index});
    const int size = s.dummy ? beta_of(s.x.part, ab) : alpha_of(s.x.part, ab);
    jobs.push_back({s.id, Rational(std::int64_t{size}), std::move(demand), job_tag(s)});
  }
  return ReductionOutput{ReductionKind::Rar3, RARInstance(3, std::move(machines), std::move(jobs)), Rational(47), d};
}

ReductionOutput reduce_rar2(const ThreeDMStar& d, const AlphaBeta& ab) {
  const SourceProblem source = d;
  const auto triplets = machine_triplets(source);
  const std::int64_t big = d.size();  // 3n
  std::vector<RARMachine> machines;
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    const auto& e = triplets[k];
    const std::int64_t i = e[0].index;
    const bool primed_a = e[0].part == Part::APrime;
    std::vector<Rational> cap;
    if (e[1].part == Part::B) {
      cap = ints({primed_a ? 2 * i - 1 : 2 * i, big + e[1].index});
    } else {
      cap = ints({primed_a ? 2 * i - 1 : 2 * i, std::int64_t{e[2].index}});
    }
    machines.push_back({machine_name(e), std::move(cap), machine_tag(source, k, e)});
  }
  std::vector<RARJob> jobs;
  const auto mj = matching_jobs(triplets, d.size(),
                                {Part::A, Part::APrime, Part::B, Part::BPrime, Part::C, Part::CPrime}, false);
  for (const auto& s : mj.jobs) {
    const std::int64_t i = s.x.index;
    std::vector<Rational> demand;
    switch (s.x.part) {
      case Part::A: demand = ints({2 * i, 0}); break;
      case Part::APrime: demand = ints({2 * i - 1, 0}); break;
      case Part::B:
      case Part::C: demand = ints({0, big + i}); break;
      case Part::BPrime: demand = ints({2 * i - 1, 0}); break;
      case Part::CPrime: demand = ints({0, i}); break;
    }
    const int size = s.dummy ? beta_of(s.x.part, ab) : alpha_of(s.x.part, ab);
    jobs.push_back({s.id, Rational(std::int64_t{size}), std::move(demand), job_tag(s)});
  }
  return ReductionOutput{ReductionKind::Rar2, RARInstance(2, std::move(machines), std::move(jobs)), Rational(47), d};
}

Schedule build_schedule_matching(const ReductionOutput& out, const MatchingCertificate& f) {
  const auto triplets = machine_triplets(out.source);
  const bool ok = std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ThreeDM> || std::is_same_v<S, ThreeDMStar>) return check_certificate(s, f);
        return false;
      },
      out.source);
  if (!ok) throw ValidationError("certificate is not a perfect matching");
  const auto ra = restricted_view(out.instance);
  std::vector<bool> chosen(triplets.size(), false);
  for (const auto k : f.chosen) chosen[k] = true;

  std::vector<std::size_t> assignment(ra.job_count(), ra.machine_count());
  std::map<Element, std::vector<std::size_t>> free_machines;
  for (std::size_t k = 0; k < triplets.size(); ++k)
    if (!chosen[k])
      for (const auto& x : triplets[k]) free_machines[x].push_back(k);
  for (std::size_t j = 0; j < ra.job_count(); ++j) {
    const auto& t = *ra.job(j).tag;
    const Element x{static_cast<Part>(t.indices[0] - 1), t.indices[1]};
    if (t.kind == GadgetKind::ElementJob) {
      for (std::size_t k = 0; k < triplets.size(); ++k)
        if (chosen[k] && std::find(triplets[k].begin(), triplets[k].end(), x) != triplets[k].end()) assignment[j] = k;
    } else {
      assignment[j] = free_machines.at(x).at(static_cast<std::size_t>(t.indices[2] - 1));
    }
  }
  return Schedule{std::move(assignment)};
}

MatchingCertificate extract_matching(const ReductionOutput& out, const Schedule& schedule) {
  const auto ra = restricted_view(out.instance);
  std::vector<bool> has_dummy(ra.machine_count(), false);
  for (std::size_t j = 0; j < ra.job_count(); ++j)
    if (ra.job(j).tag && ra.job(j).tag->kind == GadgetKind::DummyJob) has_dummy[schedule.assignment.at(j)] = true;
  MatchingCertificate f;
  for (std::size_t k = 0; k < ra.machine_count(); ++k)
    if (!has_dummy[k]) f.chosen.push_back(k);
  return f;
}

LRSInstance build_bhaskara(const ThreeDM& d, const Rational& eps) {
  validate(d);
  if (eps.sign() <= 0) throw ValidationError("eps must be positive");
  const Rational big = Rational(std::int64_t{d.n}) / eps;
  const SourceProblem source = d;
  const auto triplets = machine_triplets(source);
  std::vector<LRSMachine> machines;
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    const auto& e = triplets[k];
    machines.push_back({machine_name(e), {big.pow(e[0].index), big.pow(e[1].index), big.pow(e[2].index), Rational(1)},
                        machine_tag(source, k, e)});
  }
  const std::array<Rational, 3> dummy_tail{Rational(4, 5), Rational(9, 10), Rational(13, 10)};
  std::vector<LRSJob> jobs;
  const auto mj = matching_jobs(triplets, d.n, {Part::A, Part::B, Part::C}, false);
  for (const auto& s : mj.jobs) {
    const auto r = static_cast<std::size_t>(s.x.part);
    std::vector<Rational> size(4);
    size[r] = eps * big.pow(-s.x.index);
    size[3] = s.dummy ? dummy_tail[r] : Rational(1);
    jobs.push_back({s.id, std::move(size), job_tag(s)});
  }
  return LRSInstance(4, std::move(machines), std::move(jobs));
}

ReductionOutput reduce_bhaskara(const ThreeDM& d, const Rational& eps) {
  return ReductionOutput{ReductionKind::Bhaskara, build_bhaskara(d, eps), Rational(309, 100) + Rational(3) * eps, d};
}

BhaskaraCounterexample bhaskara_counterexample(const Rational& eps) {
  BhaskaraCounterexample cx;
  cx.instance = counterexample_3dm();
  cx.eps = eps;
  cx.n_big = Rational(std::int64_t{cx.instance.n}) / eps;
  cx.lrs = build_bhaskara(cx.instance, eps);
  // Machine -> the jobs it runs, following the published table.
  const std::vector<std::pair<std::string, std::vector<std::string>>> table{
      {"a1b1c2", {"elem_a1", "elem_a2", "elem_b1"}},
      {"a2b2c2", {"dummy_a3_1", "dummy_b2_1", "dummy_c2_1"}},
      {"a3b3c3", {"dummy_a3_2", "dummy_b3_1", "dummy_c3_1"}},
      {"a3b2c3", {"elem_a3", "elem_b2", "elem_c3"}},
      {"a3b3c1", {"elem_b3", "elem_c1", "elem_c2"}},
  };
  cx.schedule.assignment.assign(cx.lrs.job_count(), cx.lrs.machine_count());
  for (const auto& [machine, jobs] : table)
    for (const auto& job : jobs) cx.schedule.assignment[cx.lrs.job_index(job)] = cx.lrs.machine_index(machine);
  return cx;
}

}  // namespace rsched
