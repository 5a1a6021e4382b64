#include "rsched/sat.hpp"

#include "rsched/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <sstream>

namespace rsched {

using detail::expect;
using detail::parse_int;

Literal Literal::from_int(int signed_var) {
  if (signed_var == 0) throw ValidationError("literal 0");
  return signed_var > 0 ? Literal{signed_var, true} : Literal{-signed_var, false};
}

int StarClause::true_count(const std::vector<bool>& assignment) const {
  int c = 0;
  for (const auto& l : lits) c += l.value(assignment) ? 1 : 0;
  return c;
}

bool StarClause::satisfied(const std::vector<bool>& assignment) const {
  return true_count(assignment) == (kind == ClauseKind::OneInThree ? 1 : 2);
}

StarCheck check_star(const StarFormula& f) {
  StarCheck check;
  std::vector<int> pos(static_cast<std::size_t>(std::max(f.n, 0)), 0);
  std::vector<int> neg(pos.size(), 0);
  bool in_range = f.n >= 0;
  std::size_t ones = 0;
  for (const auto& c : f.clauses) {
    if (c.kind == ClauseKind::OneInThree) ++ones;
    for (const auto& l : c.lits) {
      if (l.var < 1 || l.var > f.n) {
        in_range = false;
        continue;
      }
      (l.positive ? pos : neg)[static_cast<std::size_t>(l.var - 1)]++;
    }
  }
  check.literals_twice = in_range && std::all_of(pos.begin(), pos.end(), [](int c) { return c == 2; }) &&
                         std::all_of(neg.begin(), neg.end(), [](int c) { return c == 2; });
  check.kinds_balanced = 2 * ones == f.clauses.size();
  check.kinds_ordered = std::is_partitioned(f.clauses.begin(), f.clauses.end(),
                                            [](const StarClause& c) { return c.kind == ClauseKind::OneInThree; });
  check.counts_match = f.clauses.size() % 2 == 0 && 3 * static_cast<long>(f.m()) == 2L * f.n;
  return check;
}

void validate(const StarFormula& f) {
  const auto check = check_star(f);
  if (!check.literals_twice) throw ValidationError("3-SAT* formula: some literal does not occur exactly twice");
  if (!check.kinds_balanced) throw ValidationError("3-SAT* formula: unequal numbers of 1-in-3 and 2-in-3 clauses");
  if (!check.kinds_ordered) throw ValidationError("3-SAT* formula: 2-in-3 clause before a 1-in-3 clause");
  if (!check.counts_match) throw ValidationError("3-SAT* formula: 3m != 2n");
}

Kappa::Kappa(int n, int clause_count, std::vector<Slot> forward) : n_(n), forward_(std::move(forward)) {
  if (forward_.size() != static_cast<std::size_t>(4 * n) || 4 * n != 3 * clause_count)
    throw ValidationError("occurrence map has the wrong size");
  inverse_.assign(static_cast<std::size_t>(3 * clause_count), Slot{0, 0});
  for (int j = 1; j <= n; ++j) {
    for (int t = 1; t <= 4; ++t) {
      const auto [i, s] = at(j, t);
      if (i < 1 || i > clause_count || s < 1 || s > 3) throw ValidationError("occurrence out of range");
      auto& slot = inverse_[static_cast<std::size_t>(3 * (i - 1) + (s - 1))];
      if (slot.first != 0) throw ValidationError("occurrence map is not injective");
      slot = {j, t};
    }
  }
}

std::vector<Kappa::Slot> Kappa::increasing_order() const {
  std::vector<Slot> order;
  for (int j = 1; j <= n_; ++j)
    for (int t = 1; t <= 4; ++t) order.emplace_back(j, t);
  std::sort(order.begin(), order.end(),
            [&](const Slot& a, const Slot& b) { return at(a.first, a.second) < at(b.first, b.second); });
  return order;
}

Kappa kappa_of(const StarFormula& f) {
  validate(f);
  std::vector<Kappa::Slot> forward(static_cast<std::size_t>(4 * f.n));
  std::vector<int> seen_pos(static_cast<std::size_t>(f.n), 0);
  std::vector<int> seen_neg(static_cast<std::size_t>(f.n), 0);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    for (std::size_t s = 0; s < 3; ++s) {
      const auto& l = f.clauses[i].lits[s];
      const auto v = static_cast<std::size_t>(l.var - 1);
      const int t = l.positive ? 1 + seen_pos[v]++ : 3 + seen_neg[v]++;
      forward[4 * v + static_cast<std::size_t>(t - 1)] = {static_cast<int>(i + 1), static_cast<int>(s + 1)};
    }
  }
  return Kappa(f.n, static_cast<int>(f.clauses.size()), std::move(forward));
}

bool satisfies(const StarFormula& f, const std::vector<bool>& a) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const StarClause& c) { return c.satisfied(a); });
}

bool satisfies(const OneInThreeFormula& f, const std::vector<bool>& a) {
  for (const auto& c : f.clauses) {
    int k = 0;
    for (const auto& l : c) k += l.value(a) ? 1 : 0;
    if (k != 1) return false;
  }
  return true;
}

bool satisfies(const CNFFormula& f, const std::vector<bool>& a) {
  for (const auto& c : f.clauses)
    if (std::none_of(c.begin(), c.end(), [&](const Literal& l) { return l.value(a); })) return false;
  return true;
}

namespace {

template <typename Formula>
std::optional<std::vector<bool>> enumerate(const Formula& f, int cap) {
  if (f.n > cap) throw CapExceeded("brute-force SAT over " + std::to_string(f.n) + " variables exceeds cap " +
                                   std::to_string(cap));
  const auto n = static_cast<std::size_t>(f.n);
  std::vector<bool> a(n, false);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t v = 0; v < n; ++v) a[v] = ((k >> (n - 1 - v)) & 1U) != 0;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<bool>> brute_force_sat(const StarFormula& f, int cap) { return enumerate(f, cap); }
std::optional<std::vector<bool>> brute_force_sat(const OneInThreeFormula& f, int cap) { return enumerate(f, cap); }
std::optional<std::vector<bool>> brute_force_sat(const CNFFormula& f, int cap) { return enumerate(f, cap); }

std::vector<bool> StarConversion::project(const std::vector<bool>& star_assignment) const {
  std::vector<bool> out(copies.size(), false);
  for (std::size_t i = 0; i < copies.size(); ++i)
    if (!copies[i].empty()) out[i] = star_assignment.at(static_cast<std::size_t>(copies[i].front() - 1));
  return out;
}

std::vector<bool> StarConversion::lift(const std::vector<bool>& assignment) const {
  // y variables are forced true by their (y, -y, -y) clause.
  std::vector<bool> out(static_cast<std::size_t>(formula.n), true);
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (const int v : copies[i]) out[static_cast<std::size_t>(v - 1)] = assignment.at(i);
  return out;
}

StarConversion one_in_three_to_star(const OneInThreeFormula& f) {
  StarConversion conv;
  const auto n = static_cast<std::size_t>(f.n);
  std::vector<int> degree(n, 0);
  for (const auto& c : f.clauses)
    for (const auto& l : c) {
      if (l.var < 1 || l.var > f.n) throw ValidationError("literal out of range");
      ++degree[static_cast<std::size_t>(l.var - 1)];
    }

  // x_{i,1..d} then y_{i,1..d}, variable by variable.
  conv.copies.resize(n);
  std::vector<std::vector<int>> ys(n);
  int next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < degree[i]; ++k) conv.copies[i].push_back(next++);
    for (int k = 0; k < degree[i]; ++k) ys[i].push_back(next++);
  }
  auto& out = conv.formula;
  out.n = next - 1;

  std::vector<std::array<Literal, 3>> replaced;
  std::vector<int> used(n, 0);
  for (const auto& c : f.clauses) {
    std::array<Literal, 3> r;
    for (std::size_t s = 0; s < 3; ++s) {
      const auto v = static_cast<std::size_t>(c[s].var - 1);
      r[s] = Literal{conv.copies[v][static_cast<std::size_t>(used[v]++)], c[s].positive};
    }
    replaced.push_back(r);
  }

  for (const auto& r : replaced) out.clauses.push_back({r, ClauseKind::OneInThree});
  for (std::size_t i = 0; i < n; ++i)
    for (const int y : ys[i])
      out.clauses.push_back({{Literal{y, true}, Literal{y, false}, Literal{y, false}}, ClauseKind::OneInThree});
  for (const auto& r : replaced)
    out.clauses.push_back({{r[0].negated(), r[1].negated(), r[2].negated()}, ClauseKind::TwoInThree});
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = conv.copies[i].size();
    for (std::size_t k = 0; k < d; ++k) {
      const int x = conv.copies[i][k];
      const int x_next = conv.copies[i][(k + 1) % d];
      out.clauses.push_back({{Literal{x, true}, Literal{x_next, false}, Literal{ys[i][k], true}},
                             ClauseKind::TwoInThree});
    }
  }
  return conv;
}

std::vector<bool> ModifiedConversion::project(const std::vector<bool>& modified_assignment) const {
  std::vector<bool> out(copies.size(), false);
  for (std::size_t i = 0; i < copies.size(); ++i)
    if (!copies[i].empty()) out[i] = modified_assignment.at(static_cast<std::size_t>(copies[i].front() - 1));
  return out;
}

ModifiedConversion to_modified_3sat(const CNFFormula& f) {
  ModifiedConversion conv;
  const auto n = static_cast<std::size_t>(f.n);
  std::vector<int> degree(n, 0);
  for (const auto& c : f.clauses) {
    if (c.empty() || c.size() > 3) throw ValidationError("clause must have one to three literals");
    for (const auto& l : c) {
      if (l.var < 1 || l.var > f.n) throw ValidationError("literal out of range");
      ++degree[static_cast<std::size_t>(l.var - 1)];
    }
  }
  conv.copies.resize(n);
  int next = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < degree[i]; ++k) conv.copies[i].push_back(next++);
  conv.formula.n = next - 1;

  std::vector<int> used(n, 0);
  for (const auto& c : f.clauses) {
    std::vector<Literal> r;
    for (const auto& l : c) {
      const auto v = static_cast<std::size_t>(l.var - 1);
      r.push_back(Literal{conv.copies[v][static_cast<std::size_t>(used[v]++)], l.positive});
    }
    conv.formula.clauses.push_back(std::move(r));
  }
  // (z_k or not z_{k+1}) around the cycle forces all copies equal.
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = conv.copies[i].size();
    for (std::size_t k = 0; k < d; ++k)
      conv.formula.clauses.push_back({Literal{conv.copies[i][k], true}, Literal{conv.copies[i][(k + 1) % d], false}});
  }
  return conv;
}

bool is_modified(const CNFFormula& f) {
  const auto n = static_cast<std::size_t>(std::max(f.n, 0));
  std::vector<int> pos(n, 0);
  std::vector<int> neg(n, 0);
  for (const auto& c : f.clauses) {
    if (c.empty() || c.size() > 3) return false;
    for (const auto& l : c) {
      if (l.var < 1 || l.var > f.n) return false;
      (l.positive ? pos : neg)[static_cast<std::size_t>(l.var - 1)]++;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (pos[v] + neg[v] != 3 || pos[v] > 2 || neg[v] > 2) return false;
  return true;
}

StarFormula appendix_formula() {
  auto clause = [](int a, int b, int c, ClauseKind kind) {
    return StarClause{{Literal::from_int(a), Literal::from_int(b), Literal::from_int(c)}, kind};
  };
  StarFormula f;
  f.n = 3;
  f.clauses = {
      clause(-2, -3, 1, ClauseKind::OneInThree),
      clause(-1, 2, -3, ClauseKind::OneInThree),
      clause(3, -2, 1, ClauseKind::TwoInThree),
      clause(-1, 3, 2, ClauseKind::TwoInThree),
  };
  return f;
}

// --- text -----------------------------------------------------------------

namespace {

Literal read_literal(std::string_view token, int n, std::size_t line) {
  const int v = parse_int<int>(token, line);
  expect(v != 0 && v >= -n && v <= n, line, "literal " + std::string(token) + " out of range");
  return Literal::from_int(v);
}

struct Header {
  int n = 0;
  std::size_t count = 0;
  std::vector<const detail::Line*> body;
};

Header read_header(const std::vector<detail::Line>& lines, std::string_view word) {
  Header h;
  const detail::Line* header = nullptr;
  for (const auto& line : lines) {
    if (line.comment) continue;
    if (header == nullptr) {
      expect(line.tokens.front() == word, line.number, "expected '" + std::string(word) + "' header");
      detail::expect_arity(line, 3);
      h.n = parse_int<int>(line.tokens[1], line.number);
      h.count = parse_int<std::size_t>(line.tokens[2], line.number);
      expect(h.n >= 0, line.number, "negative variable count");
      header = &line;
    } else {
      h.body.push_back(&line);
    }
  }
  if (header == nullptr) throw ParseError(0, "missing '" + std::string(word) + "' header");
  return h;
}

std::string literal_text(const Literal& l) { return std::to_string(l.to_int()); }

}  // namespace

StarFormula parse_star(std::string_view text) {
  const auto lines = detail::tokenize(text);
  const auto h = read_header(lines, "STAR");
  StarFormula f;
  f.n = h.n;
  expect(h.body.size() == 2 * h.count, 0, "STAR header announces " + std::to_string(2 * h.count) + " clauses");
  for (const auto* line : h.body) {
    const auto& t = line->tokens;
    expect(t.front() == "1in3" || t.front() == "2in3", line->number, "expected '1in3' or '2in3'");
    detail::expect_arity(*line, 4);
    StarClause c;
    c.kind = t.front() == "1in3" ? ClauseKind::OneInThree : ClauseKind::TwoInThree;
    for (std::size_t s = 0; s < 3; ++s) c.lits[s] = read_literal(t[s + 1], f.n, line->number);
    f.clauses.push_back(c);
  }
  return f;
}

OneInThreeFormula parse_one_in_three(std::string_view text) {
  const auto lines = detail::tokenize(text);
  const auto h = read_header(lines, "1IN3");
  OneInThreeFormula f;
  f.n = h.n;
  expect(h.body.size() == h.count, 0, "1IN3 header announces " + std::to_string(h.count) + " clauses");
  for (const auto* line : h.body) {
    expect(line->tokens.front() == "1in3", line->number, "expected '1in3'");
    detail::expect_arity(*line, 4);
    std::array<Literal, 3> c;
    for (std::size_t s = 0; s < 3; ++s) c[s] = read_literal(line->tokens[s + 1], f.n, line->number);
    f.clauses.push_back(c);
  }
  return f;
}

CNFFormula parse_cnf(std::string_view text) {
  const auto lines = detail::tokenize(text);
  const auto h = read_header(lines, "CNF");
  CNFFormula f;
  f.n = h.n;
  expect(h.body.size() == h.count, 0, "CNF header announces " + std::to_string(h.count) + " clauses");
  for (const auto* line : h.body) {
    const auto& t = line->tokens;
    expect(t.front() == "or", line->number, "expected 'or'");
    expect(t.size() >= 2 && t.size() <= 4, line->number, "clause needs one to three literals");
    std::vector<Literal> c;
    for (std::size_t s = 1; s < t.size(); ++s) c.push_back(read_literal(t[s], f.n, line->number));
    f.clauses.push_back(std::move(c));
  }
  return f;
}

std::string emit(const StarFormula& f) {
  std::ostringstream out;
  out << "STAR " << f.n << ' ' << f.m() << '\n';
  for (const auto& c : f.clauses) {
    out << (c.kind == ClauseKind::OneInThree ? "1in3" : "2in3");
    for (const auto& l : c.lits) out << ' ' << literal_text(l);
    out << '\n';
  }
  return out.str();
}

std::string emit(const OneInThreeFormula& f) {
  std::ostringstream out;
  out << "1IN3 " << f.n << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    out << "1in3";
    for (const auto& l : c) out << ' ' << literal_text(l);
    out << '\n';
  }
  return out.str();
}

std::string emit(const CNFFormula& f) {
  std::ostringstream out;
  out << "CNF " << f.n << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    out << "or";
    for (const auto& l : c) out << ' ' << literal_text(l);
    out << '\n';
  }
  return out.str();
}

}  // namespace rsched
