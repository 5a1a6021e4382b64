#include "cli.hpp"

#include "pipeline.hpp"
#include "rsched/claims.hpp"
#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/generators.hpp"
#include "rsched/matching_reductions.hpp"
#include "rsched/text_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace rsched::cli {

namespace {

struct Options {
  // gen
  std::string gen_kind;
  int vars = 6;
  int clauses = 4;
  int n = 2;
  int triplets = 4;
  int extra = 0;
  bool appendix = false;
  bool counterexample = false;
  std::uint64_t seed = 1;
  // reduce / roundtrip
  std::string kind;
  std::string eps = "1";
  std::string K = "10";
  // solve
  std::string mode = "exact";
  std::string target;
  std::uint64_t nodes = 200'000'000;
  double seconds = 600;
  std::size_t enum_cap = 1000;
  unsigned jobs = 1;
  bool no_load_identity = false;
  // files
  std::string input;
  std::string schedule;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error("cannot write '" + o.out + "'");
  file << text;
}

SolveBudget budget_of(const Options& o) {
  SolveBudget b;
  b.max_nodes = o.nodes;
  b.max_seconds = o.seconds;
  b.enum_cap = o.enum_cap;
  b.workers = std::max(1U, o.jobs);
  b.use_load_identity = !o.no_load_identity;
  return b;
}

ReduceParams params_of(const Options& o) { return {Rational::parse(o.eps), Rational::parse(o.K)}; }

int cmd_gen(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  std::string text;
  if (o.gen_kind == "1in3") {
    text = emit(random_one_in_three(rng, o.vars, o.clauses));
  } else if (o.gen_kind == "star") {
    text = emit(o.appendix ? appendix_formula() : random_star(rng, o.vars));
  } else if (o.gen_kind == "star-from-1in3") {
    text = emit(one_in_three_to_star(random_one_in_three(rng, o.vars, o.clauses)).formula);
  } else if (o.gen_kind == "3sat") {
    text = emit(random_cnf(rng, o.vars, o.clauses));
  } else if (o.gen_kind == "mod3sat") {
    text = emit(random_modified(rng, o.vars, o.clauses));
  } else if (o.gen_kind == "3dm") {
    text = emit(o.counterexample ? counterexample_3dm() : random_3dm(rng, o.n, o.triplets));
  } else if (o.gen_kind == "3dmstar") {
    text = emit(random_3dm_star(rng, o.n, o.extra));
  } else {
    throw Error("unknown generator kind '" + o.gen_kind + "'");
  }
  write_output(o, text, out);
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto source = parse_source(read_input(o.input));
  const auto result = make_reduction(parse_reduction_kind(o.kind), source, params_of(o));
  write_output(o, emit_document(to_document(result)), out);
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto doc = parse_document(read_input(o.input));
  std::optional<Rational> target = doc.target;
  if (!o.target.empty()) target = Rational::parse(o.target);
  if (!target) throw Error("no target: pass --target or use a file with a '# target' line");
  const auto mode = parse_solve_mode(o.mode);
  const auto result = solve(doc.instance, *target, mode, budget_of(o));
  std::string text(to_string(result.outcome));
  text += '\n';
  if (result.schedule) text += emit_schedule(doc.instance, *result.schedule);
  write_output(o, text, out);
  err << "nodes " << result.stats.nodes << (result.stats.digit_mode ? " (digit propagation)" : "") << '\n';
  switch (result.outcome) {
    case Outcome::Found:
      return kExitOk;
    case Outcome::None:
      return kExitNo;
    case Outcome::BudgetExceeded:
      return kExitBudget;
  }
  return kExitNo;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  const auto source = parse_source(read_input(o.input));
  const auto report = roundtrip(parse_reduction_kind(o.kind), source, budget_of(o), params_of(o));
  std::string text;
  for (const auto& line : report.lines) text += line + '\n';
  write_output(o, text, out);
  if (report.budget) return kExitBudget;
  return report.pass ? kExitOk : kExitNo;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto doc = parse_document(read_input(o.input));
  Schedule schedule;
  if (!o.schedule.empty()) {
    schedule = parse_schedule(read_input(o.schedule), doc.instance);
  } else if (doc.schedule) {
    schedule = *doc.schedule;
  } else {
    throw Error("no schedule: pass one as the second argument or append a SCHED block");
  }

  std::ostringstream text;
  bool ok = true;
  std::optional<LoadProfile> profile;
  try {
    profile = evaluate(doc.instance, schedule);
  } catch (const ScheduleViolation& v) {
    for (const auto& [job, machine] : v.offending()) text << "violation " << job << " on " << machine << '\n';
    write_output(o, text.str(), out);
    return kExitNo;
  }
  for (std::size_t i = 0; i < profile->load.size(); ++i)
    text << "load " << machine_id(doc.instance, i) << ' ' << profile->load[i].to_string() << '\n';
  text << "makespan " << profile->makespan.to_string() << '\n';
  text << "min-load " << profile->min_load.to_string() << '\n';
  if (doc.target) text << "target " << doc.target->to_string() << '\n';

  if (doc.reduction) {
    try {
      const auto report = check_claims(from_document(doc), schedule);
      for (const auto& r : report.results) {
        text << "claim " << r.id << ' ' << (r.passed ? "pass" : "FAIL");
        if (!r.passed) text << ' ' << r.witness;
        text << '\n';
      }
      ok = report.all_passed();
    } catch (const ValidationError& e) {
      text << "claims not checked: " << e.what() << '\n';
      ok = false;
    }
  }
  text << (ok ? "PASS" : "FAIL") << '\n';
  write_output(o, text.str(), out);
  return ok ? kExitOk : kExitNo;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  const auto eps = Rational::parse(o.eps);
  const auto cx = bhaskara_counterexample(eps);
  auto doc = to_document(reduce_bhaskara(cx.instance, eps));
  doc.schedule = cx.schedule;
  write_output(o, emit_document(doc), out);
  return kExitOk;
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--nodes", o.nodes, "Search node cap");
  cmd->add_option("--time", o.seconds, "Wall-clock cap in seconds");
  cmd->add_option("--enum-cap", o.enum_cap, "Enumeration cap");
  cmd->add_option("--jobs", o.jobs, "Worker threads for the top-level branches");
  cmd->add_flag("--no-load-identity", o.no_load_identity,
                "Run the makespan or min-load search even when the sizes sum to |M| T");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reductions and exact solvers for restricted assignment scheduling"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a formula or matching instance");
  gen->add_option("kind", o.gen_kind, "1in3, star, star-from-1in3, 3sat, mod3sat, 3dm, 3dmstar")->required();
  gen->add_option("--vars", o.vars, "Variables");
  gen->add_option("--clauses", o.clauses, "Clauses");
  gen->add_option("--n", o.n, "Elements per set (3-DM) or n (3-DM*)");
  gen->add_option("--triplets", o.triplets, "Triplets (3-DM)");
  gen->add_option("--extra", o.extra, "Extra E1 triplets (3-DM*)");
  gen->add_flag("--appendix", o.appendix, "The fixed four-clause formula");
  gen->add_flag("--counterexample", o.counterexample, "The five-triplet instance without a matching");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--out", o.out, "Output file");

  auto* reduce = app.add_subcommand("reduce", "Build a scheduling instance from a source problem");
  reduce->add_option("input", o.input, "Source file ('-' for stdin)")->required();
  reduce->add_option("--kind", o.kind, "Reduction kind")->required();
  reduce->add_option("--eps", o.eps, "Epsilon for rar2lrs and bhaskara");
  reduce->add_option("--K", o.K, "K for rar2lrs");
  reduce->add_option("--out", o.out, "Output file");

  auto* solve_cmd = app.add_subcommand("solve", "Decide a target on an instance");
  solve_cmd->add_option("input", o.input, "Instance file")->required();
  solve_cmd->add_option("--mode", o.mode, "makespan, exact or santa");
  solve_cmd->add_option("--target", o.target, "Target T (defaults to the file's)");
  add_budget(solve_cmd, o);
  solve_cmd->add_option("--seed", o.seed, "Unused; the search is deterministic");
  solve_cmd->add_option("--out", o.out, "Output file");

  auto* rt = app.add_subcommand("roundtrip", "Compare the source oracle with the solver on a reduction");
  rt->add_option("input", o.input, "Source file")->required();
  rt->add_option("--kind", o.kind, "Reduction kind")->required();
  rt->add_option("--eps", o.eps, "Epsilon");
  rt->add_option("--K", o.K, "K");
  add_budget(rt, o);
  rt->add_option("--out", o.out, "Output file");

  auto* verify = app.add_subcommand("verify", "Print loads and claim verdicts for a schedule");
  verify->add_option("input", o.input, "Instance file")->required();
  verify->add_option("schedule", o.schedule, "Schedule file (defaults to the instance's SCHED block)");
  verify->add_option("--out", o.out, "Output file");

  auto* cx = app.add_subcommand("counterexample", "Emit the LRS(4) instance and schedule for the five-triplet 3-DM");
  cx->add_option("--eps", o.eps, "Epsilon (default 1/2)")->default_str("1/2");
  cx->add_option("--out", o.out, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*solve_cmd) return cmd_solve(o, out, err);
    if (*rt) return cmd_roundtrip(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*cx) {
      if (cx->count("--eps") == 0) o.eps = "1/2";
      return cmd_counterexample(o, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rsched::cli
