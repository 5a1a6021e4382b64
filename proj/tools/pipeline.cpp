#include "pipeline.hpp"

#include "rsched/claims.hpp"
#include "rsched/embeddings.hpp"
#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/matching_reductions.hpp"
#include "rsched/sat_reductions.hpp"

namespace rsched::cli {

namespace {

template <typename T>
const T& need(const SourceProblem& source, std::string_view what) {
  if (const auto* s = std::get_if<T>(&source)) return *s;
  throw Error("this reduction needs " + std::string(what) + " as input");
}

template <typename T>
const T& need_instance(const SourceProblem& source, std::string_view what) {
  if (const auto* any = std::get_if<AnyInstance>(&source))
    if (const auto* s = std::get_if<T>(any)) return *s;
  throw Error("this reduction needs " + std::string(what) + " as input");
}

bool sat_kind(ReductionKind k) {
  return k == ReductionKind::Simple || k == ReductionKind::Rai || k == ReductionKind::GraphBalancing ||
         k == ReductionKind::Rar4;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ReductionOutput make_reduction(ReductionKind kind, const SourceProblem& source, const ReduceParams& params) {
  switch (kind) {
    case ReductionKind::Simple:
      return reduce_simple(need<StarFormula>(source, "a 3-SAT* formula"));
    case ReductionKind::Rai:
      return reduce_rai(need<StarFormula>(source, "a 3-SAT* formula"));
    case ReductionKind::GraphBalancing:
      return reduce_graph_balancing(need<CNFFormula>(source, "a modified 3-SAT formula"));
    case ReductionKind::Rar4:
      return model_rar4(need<CNFFormula>(source, "a modified 3-SAT formula"));
    case ReductionKind::Lst:
      return reduce_lst(need<ThreeDM>(source, "a 3-DM instance"));
    case ReductionKind::Rar6:
      return model_rar6(need<ThreeDM>(source, "a 3-DM instance"));
    case ReductionKind::Rar3:
      return reduce_rar3(need<ThreeDM>(source, "a 3-DM instance"));
    case ReductionKind::Rar2:
      return reduce_rar2(need<ThreeDMStar>(source, "a 3-DM* instance"));
    case ReductionKind::Bhaskara:
      return reduce_bhaskara(need<ThreeDM>(source, "a 3-DM instance"), params.eps);
    case ReductionKind::Rai2Rar2:
      return embed_rai_to_rar2(need_instance<RAIInstance>(source, "an RAI instance"));
    case ReductionKind::Ra2RarM:
      if (const auto* any = std::get_if<AnyInstance>(&source))
        if (const auto* rai = std::get_if<RAIInstance>(any)) return embed_ra_to_rar_m(rai->base());
      return embed_ra_to_rar_m(need_instance<RAInstance>(source, "an RA instance"));
    case ReductionKind::Rar2Lrs:
      return embed_rar_to_lrs(need_instance<RARInstance>(source, "a RAR instance"), params.eps, params.K);
  }
  throw Error("unknown reduction kind");
}

RoundtripReport roundtrip(ReductionKind kind, const SourceProblem& source, const SolveBudget& budget,
                          const ReduceParams& params) {
  RoundtripReport report;
  auto& lines = report.lines;
  const auto out = make_reduction(kind, source, params);
  if (!out.target) throw Error("roundtrip needs a reduction with a target");
  const auto& target = *out.target;
  const auto ra = restricted_view(out.instance);
  const bool makespan = kind == ReductionKind::GraphBalancing || kind == ReductionKind::Rar4;

  // Oracle side, with a builder schedule for yes-instances.
  bool oracle_yes = false;
  std::optional<Schedule> built;
  if (sat_kind(kind)) {
    std::optional<std::vector<bool>> model;
    if (const auto* f = std::get_if<StarFormula>(&source)) model = brute_force_sat(*f);
    if (const auto* f = std::get_if<CNFFormula>(&source)) model = brute_force_sat(*f);
    oracle_yes = model.has_value();
    if (model) {
      if (kind == ReductionKind::Simple) built = build_schedule_simple(out, *model);
      if (kind == ReductionKind::Rai) built = build_schedule_rai(out, *model);
      if (makespan) built = build_schedule_gb(out, *model);
    }
  } else {
    std::optional<MatchingCertificate> cert;
    if (const auto* d = std::get_if<ThreeDM>(&source)) cert = brute_force_match(*d);
    if (const auto* d = std::get_if<ThreeDMStar>(&source)) cert = brute_force_match(*d);
    oracle_yes = cert.has_value();
    if (cert) built = build_schedule_matching(out, *cert);
  }
  lines.push_back("oracle: " + yes_no(oracle_yes));

  bool ok = true;
  if (built) {
    const auto profile = evaluate(out.instance, *built);
    const bool meets = makespan ? profile.makespan <= target : profile.makespan == target && profile.min_load == target;
    const auto claims = check_claims(out, *built);
    lines.push_back("builder schedule: makespan " + profile.makespan.to_string() +
                    (claims.all_passed() && meets ? ", claims pass" : ", CHECK FAILED"));
    ok = ok && meets && claims.all_passed();
  }

  const auto result = makespan ? decide_makespan(ra, target, budget) : decide_exact_load(ra, target, budget);
  lines.push_back("solver: " + std::string(to_string(result.outcome)) + " (" + std::to_string(result.stats.nodes) +
                  " nodes)");
  if (result.outcome == Outcome::BudgetExceeded) {
    report.budget = true;
    lines.push_back("BUDGET");
    return report;
  }
  const bool solver_yes = result.outcome == Outcome::Found;
  ok = ok && solver_yes == oracle_yes;

  if (result.schedule) {
    bool extracted = false;
    try {
    if (const auto* f = std::get_if<StarFormula>(&source)) {
      const auto a = kind == ReductionKind::Simple ? extract_assignment_simple(out, *result.schedule)
                                                   : extract_assignment_rai(out, *result.schedule);
      extracted = satisfies(*f, a);
    } else if (const auto* f = std::get_if<CNFFormula>(&source)) {
      extracted = satisfies(*f, extract_assignment_gb(out, *result.schedule));
    } else if (const auto* d = std::get_if<ThreeDM>(&source)) {
      extracted = check_certificate(*d, extract_matching(out, *result.schedule));
    } else if (const auto* d = std::get_if<ThreeDMStar>(&source)) {
      extracted = check_certificate(*d, extract_matching(out, *result.schedule));
    }
    } catch (const ValidationError& e) {
      lines.push_back(std::string("extraction failed: ") + e.what());
    }
    lines.push_back(std::string("extracted certificate: ") + (extracted ? "valid" : "INVALID"));
    ok = ok && extracted;
  }
  report.pass = ok;
  lines.push_back(ok ? "PASS" : "FAIL");
  return report;
}

}  // namespace rsched::cli
