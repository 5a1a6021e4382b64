#include "rsched/text_format.hpp"

#include "text_util.hpp"

#include <map>
#include <sstream>

namespace rsched {

using detail::expect;
using detail::expect_arity;
using detail::Line;
using detail::parse_int;
using detail::parse_rational;

namespace {

std::optional<GadgetMeta> take_meta(std::map<std::string, GadgetMeta, std::less<>>& metas, std::string_view id,
                                    std::map<std::string, bool, std::less<>>& used) {
  const auto it = metas.find(id);
  if (it == metas.end()) return std::nullopt;
  used[it->first] = true;
  return it->second;
}

std::vector<Rational> read_vector(const Line& line, std::size_t from, std::size_t count) {
  std::vector<Rational> values;
  values.reserve(count);
  for (std::size_t k = 0; k < count; ++k) values.push_back(parse_rational(line.tokens[from + k], line.number));
  return values;
}

struct Body {
  std::size_t header_line = 0;
  std::vector<const Line*> records;
};

AnyInstance build_instance(const Line& header, const std::vector<const Line*>& records,
                           std::map<std::string, GadgetMeta, std::less<>>& metas,
                           std::map<std::string, bool, std::less<>>& used) {
  const auto& kind = header.tokens.front();
  const std::size_t n_line = header.number;

  auto count_records = [&](std::string_view word) {
    std::size_t c = 0;
    for (const auto* r : records)
      if (r->tokens.front() == word) ++c;
    return c;
  };

  if (kind == "RA" || kind == "RAI") {
    expect_arity(header, 3);
    const auto m = parse_int<std::size_t>(header.tokens[1], n_line);
    const auto n = parse_int<std::size_t>(header.tokens[2], n_line);
    expect(count_records("machine") == m, n_line, "header announces " + std::to_string(m) + " machines");
    expect(count_records("job") == n, n_line, "header announces " + std::to_string(n) + " jobs");

    std::vector<Machine> machines;
    std::map<std::string, std::size_t, std::less<>> machine_ids;
    for (const auto* r : records) {
      if (r->tokens.front() != "machine") continue;
      expect_arity(*r, 2);
      const std::string id(r->tokens[1]);
      expect(machine_ids.emplace(id, machines.size()).second, r->number, "duplicate machine id '" + id + "'");
      machines.push_back({id, take_meta(metas, id, used)});
    }
    auto lookup_machine = [&](std::string_view id, std::size_t line) {
      const auto it = machine_ids.find(id);
      expect(it != machine_ids.end(), line, "unknown machine '" + std::string(id) + "'");
      return it->second;
    };

    std::vector<Job> jobs;
    if (kind == "RA") {
      std::vector<std::vector<std::size_t>> eligible;
      for (const auto* r : records) {
        const auto& t = r->tokens;
        if (t.front() == "machine") continue;
        expect(t.front() == "job", r->number, "unexpected record '" + std::string(t.front()) + "'");
        expect(t.size() >= 4, r->number, "job record needs id, size and eligible count");
        const auto k = parse_int<std::size_t>(t[3], r->number);
        expect(t.size() == 4 + k, r->number, "eligible list has the wrong length");
        std::vector<std::size_t> set;
        for (std::size_t q = 0; q < k; ++q) set.push_back(lookup_machine(t[4 + q], r->number));
        expect(!set.empty(), r->number, "empty eligible set");
        const std::string id(t[1]);
        jobs.push_back({id, parse_rational(t[2], r->number), take_meta(metas, id, used)});
        eligible.push_back(std::move(set));
      }
      try {
        return RAInstance(std::move(machines), std::move(jobs), std::move(eligible));
      } catch (const ValidationError& e) {
        throw ParseError(n_line, e.what());
      }
    }

    std::vector<std::size_t> order(machines.size());
    for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
    std::vector<Interval> intervals;
    std::vector<std::vector<std::size_t>> eligible;
    bool seen_order = false;
    for (const auto* r : records) {
      const auto& t = r->tokens;
      if (t.front() != "order") continue;
      expect(!seen_order, r->number, "duplicate order record");
      seen_order = true;
      expect(t.size() == machines.size() + 1, r->number, "order must list every machine once");
      for (std::size_t p = 0; p < machines.size(); ++p) order[p] = lookup_machine(t[p + 1], r->number);
    }
    for (const auto* r : records) {
      const auto& t = r->tokens;
      if (t.front() == "machine" || t.front() == "order") continue;
      expect(t.front() == "job", r->number, "unexpected record '" + std::string(t.front()) + "'");
      expect_arity(*r, 5);
      const auto l = parse_int<std::size_t>(t[3], r->number);
      const auto rr = parse_int<std::size_t>(t[4], r->number);
      expect(l >= 1 && l <= rr && rr <= machines.size(), r->number, "interval out of range");
      intervals.push_back({l - 1, rr - 1});
      std::vector<std::size_t> set;
      for (std::size_t p = l - 1; p < rr; ++p) set.push_back(order[p]);
      eligible.push_back(std::move(set));
      const std::string id(t[1]);
      jobs.push_back({id, parse_rational(t[2], r->number), take_meta(metas, id, used)});
    }
    try {
      RAInstance base(std::move(machines), std::move(jobs), std::move(eligible));
      return RAIInstance(std::move(base), std::move(order), std::move(intervals));
    } catch (const ValidationError& e) {
      throw ParseError(n_line, e.what());
    }
  }

  if (kind == "RAR" || kind == "LRS") {
    expect_arity(header, 4);
    const auto dim = parse_int<std::size_t>(header.tokens[1], n_line);
    const auto m = parse_int<std::size_t>(header.tokens[2], n_line);
    const auto n = parse_int<std::size_t>(header.tokens[3], n_line);
    expect(count_records("machine") == m, n_line, "header announces " + std::to_string(m) + " machines");
    expect(count_records("job") == n, n_line, "header announces " + std::to_string(n) + " jobs");
    const bool rar = kind == "RAR";

    std::vector<RARMachine> rar_machines;
    std::vector<RARJob> rar_jobs;
    std::vector<LRSMachine> lrs_machines;
    std::vector<LRSJob> lrs_jobs;
    for (const auto* r : records) {
      const auto& t = r->tokens;
      const std::string id = t.size() > 1 ? std::string(t[1]) : std::string();
      if (t.front() == "machine") {
        expect_arity(*r, 2 + dim);
        if (rar)
          rar_machines.push_back({id, read_vector(*r, 2, dim), take_meta(metas, id, used)});
        else
          lrs_machines.push_back({id, read_vector(*r, 2, dim), take_meta(metas, id, used)});
      } else if (t.front() == "job") {
        if (rar) {
          expect_arity(*r, 3 + dim);
          rar_jobs.push_back({id, parse_rational(t[2], r->number), read_vector(*r, 3, dim), take_meta(metas, id, used)});
        } else {
          expect_arity(*r, 2 + dim);
          lrs_jobs.push_back({id, read_vector(*r, 2, dim), take_meta(metas, id, used)});
        }
      } else {
        throw ParseError(r->number, "unexpected record '" + std::string(t.front()) + "'");
      }
    }
    try {
      if (rar) return RARInstance(dim, std::move(rar_machines), std::move(rar_jobs));
      return LRSInstance(dim, std::move(lrs_machines), std::move(lrs_jobs));
    } catch (const ValidationError& e) {
      throw ParseError(n_line, e.what());
    }
  }
  throw ParseError(n_line, "unknown instance header '" + std::string(kind) + "'");
}

Schedule read_assignments(const std::vector<const Line*>& lines, const AnyInstance& instance) {
  const std::size_t n = job_count(instance);
  std::vector<std::size_t> assignment(n, machine_count(instance));
  std::vector<bool> seen(n, false);
  for (const auto* r : lines) {
    expect(r->tokens.front() == "assign", r->number, "expected 'assign <job> <machine>'");
    expect_arity(*r, 3);
    std::size_t j = 0;
    std::size_t i = 0;
    try {
      j = job_index(instance, r->tokens[1]);
      i = machine_index(instance, r->tokens[2]);
    } catch (const Error& e) {
      throw ParseError(r->number, e.what());
    }
    expect(!seen[j], r->number, "job '" + std::string(r->tokens[1]) + "' assigned twice");
    seen[j] = true;
    assignment[j] = i;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!seen[j]) throw ParseError(0, "schedule leaves job '" + job_id(instance, j) + "' unassigned");
  return Schedule{std::move(assignment)};
}

template <typename Item>
void emit_meta(std::ostringstream& out, const std::vector<Item>& items) {
  for (const auto& item : items)
    if (item.tag) out << "# meta " << item.id << ' ' << format_meta(*item.tag) << '\n';
}

void emit_vector(std::ostringstream& out, const std::vector<Rational>& values) {
  for (const auto& v : values) out << ' ' << v;
}

void emit_body(std::ostringstream& out, const AnyInstance& any) {
  if (const auto* rai = std::get_if<RAIInstance>(&any)) {
    const auto& base = rai->base();
    emit_meta(out, base.machines());
    emit_meta(out, base.jobs());
    out << "RAI " << base.machine_count() << ' ' << base.job_count() << '\n';
    for (const auto& m : base.machines()) out << "machine " << m.id << '\n';
    out << "order";
    for (const auto i : rai->order()) out << ' ' << base.machine(i).id;
    out << '\n';
    for (std::size_t j = 0; j < base.job_count(); ++j) {
      const auto& iv = rai->interval(j);
      out << "job " << base.job(j).id << ' ' << base.job(j).size << ' ' << iv.first + 1 << ' ' << iv.last + 1 << '\n';
    }
  } else if (const auto* ra = std::get_if<RAInstance>(&any)) {
    emit_meta(out, ra->machines());
    emit_meta(out, ra->jobs());
    out << "RA " << ra->machine_count() << ' ' << ra->job_count() << '\n';
    for (const auto& m : ra->machines()) out << "machine " << m.id << '\n';
    for (std::size_t j = 0; j < ra->job_count(); ++j) {
      const auto& set = ra->eligible(j);
      out << "job " << ra->job(j).id << ' ' << ra->job(j).size << ' ' << set.size();
      for (const auto i : set) out << ' ' << ra->machine(i).id;
      out << '\n';
    }
  } else if (const auto* rar = std::get_if<RARInstance>(&any)) {
    emit_meta(out, rar->machines());
    emit_meta(out, rar->jobs());
    out << "RAR " << rar->resource_count() << ' ' << rar->machine_count() << ' ' << rar->job_count() << '\n';
    for (const auto& m : rar->machines()) {
      out << "machine " << m.id;
      emit_vector(out, m.capacity);
      out << '\n';
    }
    for (const auto& j : rar->jobs()) {
      out << "job " << j.id << ' ' << j.size;
      emit_vector(out, j.demand);
      out << '\n';
    }
  } else {
    const auto& lrs = std::get<LRSInstance>(any);
    emit_meta(out, lrs.machines());
    emit_meta(out, lrs.jobs());
    out << "LRS " << lrs.dimension() << ' ' << lrs.machine_count() << ' ' << lrs.job_count() << '\n';
    for (const auto& m : lrs.machines()) {
      out << "machine " << m.id;
      emit_vector(out, m.speed);
      out << '\n';
    }
    for (const auto& j : lrs.jobs()) {
      out << "job " << j.id;
      emit_vector(out, j.size);
      out << '\n';
    }
  }
}

}  // namespace

InstanceDocument parse_document(std::string_view text) {
  const auto lines = detail::tokenize(text);
  InstanceDocument doc;
  std::map<std::string, GadgetMeta, std::less<>> metas;
  std::map<std::string, bool, std::less<>> used;
  std::size_t meta_line = 0;

  const Line* header = nullptr;
  std::vector<const Line*> records;
  std::vector<const Line*> assigns;
  bool in_sched = false;

  for (const auto& line : lines) {
    if (line.comment) {
      if (line.tokens.empty()) continue;
      const auto& word = line.tokens.front();
      if (word == "target") {
        expect_arity(line, 2);
        doc.target = parse_rational(line.tokens[1], line.number);
      } else if (word == "reduction") {
        expect_arity(line, 2);
        doc.reduction = std::string(line.tokens[1]);
      } else if (word == "source") {
        auto rest = line.body.substr(std::string_view("source").size());
        if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        doc.source.emplace_back(rest);
      } else if (word == "meta") {
        expect_arity(line, 5);
        try {
          auto meta = parse_meta(line.tokens[2], line.tokens[3], line.tokens[4]);
          expect(metas.emplace(std::string(line.tokens[1]), std::move(meta)).second, line.number,
                 "duplicate meta for '" + std::string(line.tokens[1]) + "'");
        } catch (const ParseError& e) {
          if (e.line() != 0) throw;
          throw ParseError(line.number, e.what());
        }
        meta_line = line.number;
      }
      continue;
    }
    const auto& word = line.tokens.front();
    if (word == "SCHED") {
      expect(header != nullptr, line.number, "SCHED block before the instance");
      expect(!in_sched, line.number, "second SCHED block");
      expect_arity(line, 1);
      in_sched = true;
    } else if (in_sched) {
      assigns.push_back(&line);
    } else if (word == "RA" || word == "RAI" || word == "RAR" || word == "LRS") {
      expect(header == nullptr, line.number, "second instance header");
      header = &line;
    } else {
      expect(header != nullptr, line.number, "record before the instance header");
      records.push_back(&line);
    }
  }
  if (header == nullptr) throw ParseError(0, "missing instance header");
  doc.instance = build_instance(*header, records, metas, used);
  for (const auto& [id, meta] : metas)
    if (!used.contains(id)) throw ParseError(meta_line, "meta refers to unknown id '" + id + "'");
  if (in_sched) doc.schedule = read_assignments(assigns, doc.instance);
  return doc;
}

std::string emit_document(const InstanceDocument& doc) {
  std::ostringstream out;
  if (doc.reduction) out << "# reduction " << *doc.reduction << '\n';
  if (doc.target) out << "# target " << *doc.target << '\n';
  for (const auto& s : doc.source) out << "# source " << s << '\n';
  emit_body(out, doc.instance);
  if (doc.schedule) out << emit_schedule(doc.instance, *doc.schedule);
  return out.str();
}

AnyInstance parse_instance(std::string_view text) { return parse_document(text).instance; }

std::string emit_instance(const AnyInstance& instance) {
  std::ostringstream out;
  emit_body(out, instance);
  return out.str();
}

Schedule parse_schedule(std::string_view text, const AnyInstance& instance) {
  const auto lines = detail::tokenize(text);
  std::vector<const Line*> assigns;
  bool in_sched = false;
  for (const auto& line : lines) {
    if (line.comment) continue;
    if (!in_sched) {
      in_sched = line.tokens.front() == "SCHED";
      continue;
    }
    if (line.tokens.front() == "SCHED") throw ParseError(line.number, "second SCHED block");
    assigns.push_back(&line);
  }
  if (!in_sched) throw ParseError(0, "no SCHED block");
  return read_assignments(assigns, instance);
}

std::string emit_schedule(const AnyInstance& instance, const Schedule& schedule) {
  std::ostringstream out;
  out << "SCHED\n";
  for (std::size_t j = 0; j < schedule.assignment.size(); ++j)
    out << "assign " << job_id(instance, j) << ' ' << machine_id(instance, schedule.assignment[j]) << '\n';
  return out.str();
}

}  // namespace rsched
