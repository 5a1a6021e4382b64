#include "rsched/claims.hpp"

#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/matching_reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace rsched {

bool ClaimReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.passed; });
}

const ClaimResult* ClaimReport::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

// Collects failures for one claim; the first few become the witness.
class Claim {
 public:
  explicit Claim(std::string id) : id_(std::move(id)) {}
  void fail(const std::string& what) {
    if (failures_++ < 3) witness_ += (witness_.empty() ? "" : "; ") + what;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  ClaimResult result() const {
    auto w = witness_;
    if (failures_ > 3) w += "; +" + std::to_string(failures_ - 3) + " more";
    return {id_, failures_ == 0, w};
  }

 private:
  std::string id_;
  std::string witness_;
  std::size_t failures_ = 0;
};

GadgetMeta tag(GadgetKind kind, std::vector<int> indices, std::optional<bool> config = std::nullopt) {
  return GadgetMeta{kind, std::move(indices), config};
}

struct View {
  const RAInstance& ra;
  const Schedule& schedule;
  std::vector<std::vector<std::size_t>> on;  // machine -> job indices

  View(const RAInstance& r, const Schedule& s) : ra(r), schedule(s), on(r.machine_count()) {
    for (std::size_t j = 0; j < r.job_count(); ++j) on[s.assignment.at(j)].push_back(j);
  }

  std::size_t machine(const GadgetMeta& m) const {
    if (auto i = ra.find_machine(m)) return *i;
    throw ValidationError("instance has no machine tagged " + format_meta(m));
  }
  std::size_t job(const GadgetMeta& m) const {
    if (auto j = ra.find_job(m)) return *j;
    throw ValidationError("instance has no job tagged " + format_meta(m));
  }
  std::size_t where(const GadgetMeta& m) const { return schedule.assignment.at(job(m)); }
  GadgetKind kind_of(std::size_t j) const { return ra.job(j).tag ? ra.job(j).tag->kind : GadgetKind::PrivateLoad; }
  std::size_t count(std::size_t machine, GadgetKind k) const {
    return static_cast<std::size_t>(
        std::count_if(on[machine].begin(), on[machine].end(), [&](std::size_t j) { return kind_of(j) == k; }));
  }
  const std::string& mid(std::size_t i) const { return ra.machine(i).id; }
  const std::string& jid(std::size_t j) const { return ra.job(j).id; }

  // Shared configuration of the machine's gadget jobs; nullopt when mixed
  // or when the machine carries none.
  std::optional<bool> config(std::size_t machine) const {
    std::optional<bool> c;
    for (const auto j : on[machine]) {
      const auto& t = ra.job(j).tag;
      if (!t || !t->config) continue;
      if (c && *c != *t->config) return std::nullopt;
      c = t->config;
    }
    return c;
  }
  bool mixed(std::size_t machine) const {
    bool seen_top = false, seen_bottom = false;
    for (const auto j : on[machine]) {
      const auto& t = ra.job(j).tag;
      if (!t || !t->config) continue;
      (*t->config ? seen_top : seen_bottom) = true;
    }
    return seen_top && seen_bottom;
  }
};

void require_exact_loads(const LoadProfile& p, const RAInstance& ra, const Rational& target) {
  for (std::size_t i = 0; i < p.load.size(); ++i)
    if (p.load[i] != target)
      throw ValidationError("load precondition violated: " + ra.machine(i).id + " has load " + p.load[i].to_string() +
                            ", expected " + target.to_string());
}

ClaimResult total_size(const RAInstance& ra, const Rational& target) {
  Claim c("total-size");
  c.check(total_size_check(ra, target), "sizes sum to " + ra.total_size().to_string() + " instead of |M|T");
  return c.result();
}

ClaimResult job_count(const View& v, const std::function<std::size_t(std::size_t)>& expected) {
  Claim c("job-count");
  for (std::size_t i = 0; i < v.ra.machine_count(); ++i)
    c.check(v.on[i].size() == expected(i),
            v.mid(i) + " has " + std::to_string(v.on[i].size()) + " jobs, expected " + std::to_string(expected(i)));
  return c.result();
}

ClaimResult same_config(const View& v) {
  Claim c("same-config");
  for (std::size_t i = 0; i < v.ra.machine_count(); ++i) c.check(!v.mixed(i), v.mid(i) + " mixes T and F jobs");
  return c.result();
}

ClaimResult truth_opposition(const View& v, int n) {
  Claim c("truth-opposition");
  for (int j = 1; j <= n; ++j) {
    const auto t1 = v.machine(tag(GadgetKind::TMach, {j, 1}));
    const auto t2 = v.machine(tag(GadgetKind::TMach, {j, 2}));
    const auto c1 = v.config(t1), c2 = v.config(t2);
    c.check(c1 && c2 && *c1 != *c2, v.mid(t1) + " and " + v.mid(t2) + " do not carry opposite configurations");
  }
  return c.result();
}

// Counts top jobs of `kind` across each clause triplet.
ClaimResult clause_count(const View& v, const StarFormula& f, GadgetKind kind) {
  Claim c("clause-count");
  for (int i = 1; i <= static_cast<int>(f.clauses.size()); ++i) {
    int top = 0;
    for (int s = 1; s <= 3; ++s) {
      const auto m = v.machine(tag(GadgetKind::CMach, {i, s}));
      for (const auto j : v.on[m])
        if (v.kind_of(j) == kind && v.ra.job(j).tag->config.value_or(false)) ++top;
    }
    const int want = f.clauses[static_cast<std::size_t>(i - 1)].kind == ClauseKind::OneInThree ? 1 : 2;
    c.check(top == want, "clause " + std::to_string(i) + " machines carry " + std::to_string(top) + " top " +
                             std::string(to_string(kind)) + " jobs, expected " + std::to_string(want));
  }
  return c.result();
}

// Both jobs of a T/F pair sit on the two given machines, one each.
void pair_split(Claim& c, const View& v, GadgetKind kind, const std::vector<int>& idx, std::size_t m1, std::size_t m2) {
  const auto top = v.job(tag(kind, idx, true));
  const auto bottom = v.job(tag(kind, idx, false));
  const auto a = v.schedule.assignment[top], b = v.schedule.assignment[bottom];
  c.check((a == m1 && b == m2) || (a == m2 && b == m1),
          v.jid(top) + "/" + v.jid(bottom) + " on " + v.mid(a) + "/" + v.mid(b) + " instead of " + v.mid(m1) + "/" +
              v.mid(m2));
}

// Configuration of the single job of `kind` on `machine`.
std::optional<bool> config_of(const View& v, std::size_t machine, GadgetKind kind) {
  for (const auto j : v.on[machine])
    if (v.kind_of(j) == kind) return v.ra.job(j).tag->config;
  return std::nullopt;
}

ClaimReport simple_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto& f = std::get<StarFormula>(out.source);
  const auto& ra = std::get<RAInstance>(out.instance);
  require_exact_loads(evaluate(ra, schedule), ra, *out.target);
  const View v(ra, schedule);
  const auto kappa = kappa_of(f);
  ClaimReport r;
  r.results.push_back(total_size(ra, *out.target));
  r.results.push_back(job_count(v, [](std::size_t) { return std::size_t{3}; }));

  Claim comp("composition");
  for (std::size_t i = 0; i < ra.machine_count(); ++i) {
    const auto kind = ra.machine(i).tag->kind;
    if (kind == GadgetKind::TMach)
      comp.check(v.count(i, GadgetKind::TJob) == 1 && v.count(i, GadgetKind::VJob) == 2,
                 v.mid(i) + " does not hold one truth job and two variable jobs");
    else
      comp.check(v.count(i, GadgetKind::CJob) == 1 && v.count(i, GadgetKind::VJob) == 1,
                 v.mid(i) + " does not hold one clause job and one variable job");
  }
  r.results.push_back(comp.result());
  r.results.push_back(same_config(v));
  r.results.push_back(truth_opposition(v, f.n));
  r.results.push_back(clause_count(v, f, GadgetKind::VJob));

  Claim signal("variable-signal");
  for (int j = 1; j <= f.n; ++j)
    for (int t = 1; t <= 4; ++t) {
      const auto [ci, cs] = kappa.at(j, t);
      const auto tm = v.machine(tag(GadgetKind::TMach, {j, t <= 2 ? 1 : 2}));
      const auto cm = v.machine(tag(GadgetKind::CMach, {ci, cs}));
      const auto a = v.config(tm), b = config_of(v, cm, GadgetKind::VJob);
      signal.check(a && b && *a != *b, v.mid(cm) + " does not carry the opposite of " + v.mid(tm));
    }
  r.results.push_back(signal.result());
  return r;
}

ClaimReport rai_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto& f = std::get<StarFormula>(out.source);
  const auto& ra = std::get<RAIInstance>(out.instance).base();
  require_exact_loads(evaluate(ra, schedule), ra, *out.target);
  const View v(ra, schedule);
  const auto kappa = kappa_of(f);
  const int n = f.n;
  ClaimReport r;
  r.results.push_back(total_size(ra, *out.target));
  r.results.push_back(job_count(v, [&](std::size_t i) {
    return ra.machine(i).tag->kind == GadgetKind::TMach ? std::size_t{4} : std::size_t{3};
  }));

  auto tm = [&](int j, int q) { return v.machine(tag(GadgetKind::TMach, {j, q})); };
  Claim tjob("tjob-placement");
  for (int j = 1; j <= n; ++j) pair_split(tjob, v, GadgetKind::TJob, {j}, tm(j, 1), tm(j, 2));
  r.results.push_back(tjob.result());

  Claim vjob("vjob-placement");
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      pair_split(vjob, v, GadgetKind::VJob, {j, t}, tm(j, t <= 2 ? 1 : 2), v.machine(tag(GadgetKind::GMach, {j, t})));
  r.results.push_back(vjob.result());

  Claim bridge("bridge-placement");
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      for (int jp = j + 1; jp <= n; ++jp)
        pair_split(bridge, v, GadgetKind::BJob, {j, t, jp}, v.machine(tag(GadgetKind::BMachIn, {j, t, jp})),
                   v.machine(tag(GadgetKind::BMachOut, {j, t, jp})));
  r.results.push_back(bridge.result());

  Claim highway("highway-placement");
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t)
      for (int jp = j; jp <= n; ++jp) {
        const auto first = jp > j ? v.machine(tag(GadgetKind::BMachOut, {j, t, jp}))
                                  : v.machine(tag(GadgetKind::GMach, {j, t}));
        const auto [ci, cs] = kappa.at(j, t);
        const auto last = jp < n ? v.machine(tag(GadgetKind::BMachIn, {j, t, jp + 1}))
                                 : v.machine(tag(GadgetKind::CMach, {ci, cs}));
        pair_split(highway, v, GadgetKind::HJob, {j, t, jp}, first, last);
      }
  r.results.push_back(highway.result());

  Claim cjob("cjob-distribution");
  for (std::size_t i = 0; i < ra.machine_count(); ++i)
    if (ra.machine(i).tag->kind == GadgetKind::CMach)
      cjob.check(v.count(i, GadgetKind::CJob) == 1 && v.count(i, GadgetKind::HJob) == 1,
                 v.mid(i) + " does not hold one clause job and one highway job");
  r.results.push_back(cjob.result());

  r.results.push_back(same_config(v));
  r.results.push_back(truth_opposition(v, n));
  r.results.push_back(clause_count(v, f, GadgetKind::HJob));

  Claim signal("signal");
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= 4; ++t) {
      const auto [ci, cs] = kappa.at(j, t);
      const auto t_mach = tm(j, t <= 2 ? 1 : 2);
      const auto c_mach = v.machine(tag(GadgetKind::CMach, {ci, cs}));
      // The variable job of occurrence t on the truth machine.
      std::optional<bool> a;
      for (const bool top : {true, false})
        if (v.where(tag(GadgetKind::VJob, {j, t}, top)) == t_mach) a = top;
      const auto b = config_of(v, c_mach, GadgetKind::HJob);
      signal.check(a && b && *a == *b, "VJob_" + std::to_string(j) + "_" + std::to_string(t) + " on " + v.mid(t_mach) +
                                           " disagrees with the highway job on " + v.mid(c_mach));
    }
  r.results.push_back(signal.result());
  return r;
}

// Part of an element job or dummy, folding primed sets onto unprimed ones.
int base_part(const GadgetMeta& t) { return (t.indices[0] - 1) % 3; }

Element element_of(const GadgetMeta& t) { return Element{static_cast<Part>(t.indices[0] - 1), t.indices[1]}; }

std::vector<std::array<Element, 3>> triplet_elements(const SourceProblem& source) {
  std::vector<std::array<Element, 3>> out;
  if (const auto* d = std::get_if<ThreeDM>(&source)) {
    for (const auto& t : d->triplets) out.push_back({Element{Part::A, t.a}, Element{Part::B, t.b}, Element{Part::C, t.c}});
  } else if (const auto* s = std::get_if<ThreeDMStar>(&source)) {
    for (const auto& t : s->triplets()) out.push_back({t.x, t.y, t.z});
  }
  return out;
}

ClaimReport lst_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto ra = restricted_view(out.instance);
  require_exact_loads(evaluate(out.instance, schedule), ra, *out.target);
  const View v(ra, schedule);
  const auto triplets = triplet_elements(out.source);
  ClaimReport r;
  r.results.push_back(total_size(ra, *out.target));
  Claim pattern("pattern");
  for (std::size_t i = 0; i < ra.machine_count(); ++i) {
    const auto dummies = v.count(i, GadgetKind::DummyJob);
    if (dummies == 1 && v.on[i].size() == 1) continue;
    bool ok = dummies == 0 && v.on[i].size() == 2;
    if (ok) {
      std::vector<Element> got;
      for (const auto j : v.on[i]) got.push_back(element_of(*ra.job(j).tag));
      std::sort(got.begin(), got.end());
      ok = got == std::vector<Element>{triplets[i][1], triplets[i][2]};
    }
    pattern.check(ok, v.mid(i) + " holds neither one dummy nor its own b and c");
  }
  r.results.push_back(pattern.result());
  return r;
}

ClaimReport rar_matching_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto ra = restricted_view(out.instance);
  require_exact_loads(evaluate(out.instance, schedule), ra, *out.target);
  const View v(ra, schedule);
  const auto triplets = triplet_elements(out.source);
  const AlphaBeta ab;
  const std::array<int, 3> alpha{ab.alpha_a, ab.alpha_b, ab.alpha_c};
  const std::array<int, 3> beta{ab.beta_a, ab.beta_b, ab.beta_c};
  ClaimReport r;
  r.results.push_back(total_size(ra, *out.target));
  r.results.push_back(job_count(v, [](std::size_t) { return std::size_t{3}; }));

  Claim pattern("triple-pattern");
  Claim corr("element-correspondence");
  for (std::size_t i = 0; i < ra.machine_count(); ++i) {
    std::array<int, 3> sizes{};
    std::array<int, 3> seen{};
    std::size_t elements = 0;
    for (const auto j : v.on[i]) {
      const auto& t = *ra.job(j).tag;
      const auto p = static_cast<std::size_t>(base_part(t));
      ++seen[p];
      sizes[p] = static_cast<int>(ra.job(j).size.to_int64());
      if (t.kind == GadgetKind::ElementJob) {
        ++elements;
        const auto x = element_of(t);
        corr.check(std::find(triplets[i].begin(), triplets[i].end(), x) != triplets[i].end(),
                   v.jid(j) + " runs on " + v.mid(i) + " which does not contain " + to_string(x));
      }
    }
    const bool one_each = seen == std::array<int, 3>{1, 1, 1};
    pattern.check(one_each && (sizes == alpha || sizes == beta), v.mid(i) + " does not hold an alpha or beta triple");
    corr.check(elements == 0 || elements == 3, v.mid(i) + " mixes element and dummy jobs");
  }
  r.results.push_back(pattern.result());
  r.results.push_back(corr.result());
  return r;
}

ClaimReport gb_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto ra = restricted_view(out.instance);
  const auto profile = evaluate(out.instance, schedule);
  if (profile.makespan > *out.target)
    throw ValidationError("load precondition violated: makespan " + profile.makespan.to_string() + " exceeds " +
                          out.target->to_string());
  const View v(ra, schedule);
  ClaimReport r;
  Claim exclusive("truth-job-exclusive");
  Claim witness("clause-witness");
  for (std::size_t i = 0; i < ra.machine_count(); ++i) {
    const auto& t = *ra.machine(i).tag;
    if (t.kind == GadgetKind::LiteralMach) {
      exclusive.check(v.count(i, GadgetKind::TruthJob) == 0 || v.count(i, GadgetKind::ClauseJob) == 0,
                      v.mid(i) + " holds a truth job next to a clause job");
    } else {
      // Some clause job of v_i must have moved to a literal machine.
      std::size_t off = 0;
      for (std::size_t j = 0; j < ra.job_count(); ++j) {
        const auto& jt = ra.job(j).tag;
        if (jt && jt->kind == GadgetKind::ClauseJob && jt->indices[0] == t.indices[0] && schedule.assignment[j] != i)
          ++off;
      }
      witness.check(off >= 1, v.mid(i) + " keeps all of its clause jobs");
    }
  }
  r.results.push_back(exclusive.result());
  r.results.push_back(witness.result());
  return r;
}

ClaimReport bhaskara_claims(const ReductionOutput& out, const Schedule& schedule) {
  const auto profile = evaluate(out.instance, schedule);
  ClaimReport r;
  Claim bound("makespan-bound");
  bound.check(profile.makespan <= *out.target,
              "makespan " + profile.makespan.to_string() + " exceeds " + out.target->to_string());
  r.results.push_back(bound.result());
  return r;
}

}  // namespace

ClaimReport check_claims(const ReductionOutput& out, const Schedule& schedule) {
  switch (out.kind) {
    case ReductionKind::Simple:
      return simple_claims(out, schedule);
    case ReductionKind::Rai:
      return rai_claims(out, schedule);
    case ReductionKind::Lst:
    case ReductionKind::Rar6:
      return lst_claims(out, schedule);
    case ReductionKind::Rar3:
    case ReductionKind::Rar2:
      return rar_matching_claims(out, schedule);
    case ReductionKind::GraphBalancing:
    case ReductionKind::Rar4:
      return gb_claims(out, schedule);
    case ReductionKind::Bhaskara:
      return bhaskara_claims(out, schedule);
    default:
      evaluate(out.instance, schedule);
      return {};
  }
}

}  // namespace rsched
