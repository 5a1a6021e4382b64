#include "rsched/matching.hpp"

#include "rsched/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rsched {

using detail::expect;

std::string to_string(const Element& x) {
  static constexpr std::array<std::string_view, 6> names{"a", "b", "c", "a'", "b'", "c'"};
  return std::string(names[static_cast<std::size_t>(x.part)]) + std::to_string(x.index);
}

namespace {

// Generic exact cover over `element_count` elements with 3-element sets.
class ExactCover {
 public:
  ExactCover(std::size_t element_count, std::vector<std::array<std::size_t, 3>> sets)
      : sets_(std::move(sets)), containing_(element_count), covered_(element_count, false) {
    for (std::size_t e = 0; e < sets_.size(); ++e)
      for (const auto x : sets_[e])
        if (containing_[x].empty() || containing_[x].back() != e) containing_[x].push_back(e);
  }

  std::optional<std::vector<std::size_t>> solve() {
    if (search()) {
      std::sort(chosen_.begin(), chosen_.end());
      return chosen_;
    }
    return std::nullopt;
  }

 private:
  bool live(std::size_t e) const {
    const auto& s = sets_[e];
    if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) return false;
    return !covered_[s[0]] && !covered_[s[1]] && !covered_[s[2]];
  }

  bool search() {
    std::size_t best = containing_.size();
    std::size_t best_count = sets_.size() + 1;
    for (std::size_t x = 0; x < containing_.size(); ++x) {
      if (covered_[x]) continue;
      std::size_t count = 0;
      for (const auto e : containing_[x]) count += live(e) ? 1 : 0;
      if (count < best_count) {
        best = x;
        best_count = count;
        if (count == 0) return false;
      }
    }
    if (best == containing_.size()) return true;
    for (const auto e : containing_[best]) {
      if (!live(e)) continue;
      for (const auto x : sets_[e]) covered_[x] = true;
      chosen_.push_back(e);
      if (search()) return true;
      chosen_.pop_back();
      for (const auto x : sets_[e]) covered_[x] = false;
    }
    return false;
  }

  std::vector<std::array<std::size_t, 3>> sets_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<bool> covered_;
  std::vector<std::size_t> chosen_;
};

bool exact_cover_ok(std::size_t element_count, const std::vector<std::array<std::size_t, 3>>& sets,
                    const MatchingCertificate& f) {
  std::vector<int> hits(element_count, 0);
  std::set<std::size_t> distinct;
  for (const auto e : f.chosen) {
    if (e >= sets.size() || !distinct.insert(e).second) return false;
    for (const auto x : sets[e]) hits[x]++;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::vector<std::array<std::size_t, 3>> cover_sets(const ThreeDM& d) {
  const auto n = static_cast<std::size_t>(d.n);
  std::vector<std::array<std::size_t, 3>> sets;
  for (const auto& t : d.triplets)
    sets.push_back({static_cast<std::size_t>(t.a - 1), n + static_cast<std::size_t>(t.b - 1),
                    2 * n + static_cast<std::size_t>(t.c - 1)});
  return sets;
}

std::size_t star_slot(const ThreeDMStar& d, const Element& x) {
  return static_cast<std::size_t>(x.part) * static_cast<std::size_t>(d.size()) + static_cast<std::size_t>(x.index - 1);
}

std::vector<std::array<std::size_t, 3>> cover_sets(const ThreeDMStar& d) {
  std::vector<std::array<std::size_t, 3>> sets;
  for (const auto& t : d.triplets()) sets.push_back({star_slot(d, t.x), star_slot(d, t.y), star_slot(d, t.z)});
  return sets;
}

}  // namespace

void validate(const ThreeDM& d) {
  if (d.n < 0) throw ValidationError("3-DM: negative n");
  std::set<Triplet> seen;
  for (const auto& t : d.triplets) {
    for (const int v : {t.a, t.b, t.c})
      if (v < 1 || v > d.n) throw ValidationError("3-DM: element index out of range");
    if (!seen.insert(t).second) throw ValidationError("3-DM: repeated triplet");
  }
  if (!is_covered(d)) throw ValidationError("3-DM: some element lies in no triplet");
}

bool is_covered(const ThreeDM& d) {
  for (const auto part : {Part::A, Part::B, Part::C})
    for (int i = 1; i <= d.n; ++i)
      if (element_degree(d, {part, i}) == 0) return false;
  return true;
}

std::size_t element_degree(const ThreeDM& d, const Element& x) {
  if (x.index < 1 || x.index > d.n || static_cast<int>(x.part) > 2)
    throw ValidationError("unknown element " + to_string(x));
  std::size_t count = 0;
  for (const auto& t : d.triplets) {
    const int v = x.part == Part::A ? t.a : x.part == Part::B ? t.b : t.c;
    count += v == x.index ? 1 : 0;
  }
  return count;
}

std::vector<StarTriplet> ThreeDMStar::triplets() const {
  auto all = e1;
  all.insert(all.end(), e2.begin(), e2.end());
  return all;
}

int zeta(int i) {
  if (i < 1) throw ValidationError("zeta: index must be positive");
  return (i % 3 == 0) ? i - 2 : i + 1;
}

ThreeDMStar build_3dm_star(int n, std::vector<StarTriplet> e1) {
  if (n < 0) throw ValidationError("3-DM*: negative n");
  ThreeDMStar d;
  d.n = n;
  const int size = 3 * n;
  std::vector<bool> b_seen(static_cast<std::size_t>(size), false);
  std::vector<bool> c_seen(static_cast<std::size_t>(size), false);
  for (const auto& t : e1) {
    const bool first_ok = t.x.part == Part::A || t.x.part == Part::APrime;
    if (!first_ok || t.y.part != Part::B || t.z.part != Part::C || t.y.index != t.z.index)
      throw ValidationError("3-DM*: E1 triplets must have the form {a_i or a'_i, b_j, c_j}");
    for (const int v : {t.x.index, t.y.index})
      if (v < 1 || v > size) throw ValidationError("3-DM*: element index out of range");
    if (std::count(e1.begin(), e1.end(), t) > 1) throw ValidationError("3-DM*: repeated E1 triplet");
    b_seen[static_cast<std::size_t>(t.y.index - 1)] = true;
    c_seen[static_cast<std::size_t>(t.z.index - 1)] = true;
  }
  for (int j = 0; j < size; ++j)
    if (!b_seen[static_cast<std::size_t>(j)] || !c_seen[static_cast<std::size_t>(j)])
      throw ValidationError("3-DM*: b" + std::to_string(j + 1) + " / c" + std::to_string(j + 1) + " lie in no triplet");
  d.e1 = std::move(e1);
  for (int i = 1; i <= size; ++i) {
    d.e2.push_back({{Part::A, i}, {Part::BPrime, i}, {Part::CPrime, i}});
    d.e2.push_back({{Part::APrime, i}, {Part::BPrime, i}, {Part::CPrime, zeta(i)}});
  }
  return d;
}

std::size_t element_degree(const ThreeDMStar& d, const Element& x) {
  if (x.index < 1 || x.index > d.size()) throw ValidationError("unknown element " + to_string(x));
  std::size_t count = 0;
  for (const auto& t : d.triplets()) count += (t.x == x || t.y == x || t.z == x) ? 1 : 0;
  return count;
}

bool check_certificate(const ThreeDM& d, const MatchingCertificate& f) {
  return exact_cover_ok(3 * static_cast<std::size_t>(d.n), cover_sets(d), f);
}

bool check_certificate(const ThreeDMStar& d, const MatchingCertificate& f) {
  return exact_cover_ok(6 * static_cast<std::size_t>(d.size()), cover_sets(d), f);
}

std::optional<MatchingCertificate> brute_force_match(const ThreeDM& d, std::size_t cap) {
  if (d.triplets.size() > cap)
    throw CapExceeded("brute-force matching over " + std::to_string(d.triplets.size()) + " triplets exceeds cap " +
                      std::to_string(cap));
  ExactCover cover(3 * static_cast<std::size_t>(d.n), cover_sets(d));
  if (auto chosen = cover.solve()) return MatchingCertificate{std::move(*chosen)};
  return std::nullopt;
}

std::optional<MatchingCertificate> brute_force_match(const ThreeDMStar& d, std::size_t cap) {
  const auto total = d.e1.size() + d.e2.size();
  if (total > cap)
    throw CapExceeded("brute-force matching over " + std::to_string(total) + " triplets exceeds cap " +
                      std::to_string(cap));
  ExactCover cover(6 * static_cast<std::size_t>(d.size()), cover_sets(d));
  if (auto chosen = cover.solve()) return MatchingCertificate{std::move(*chosen)};
  return std::nullopt;
}

ThreeDM counterexample_3dm() {
  return ThreeDM{3, {{1, 1, 2}, {2, 2, 2}, {3, 3, 3}, {3, 2, 3}, {3, 3, 1}}};
}

// --- text -----------------------------------------------------------------

namespace {

Element read_element(std::string_view token, std::size_t line, int limit, bool allow_prime) {
  expect(!token.empty(), line, "empty element");
  const char letter = token.front();
  expect(letter == 'a' || letter == 'b' || letter == 'c', line, "bad element '" + std::string(token) + "'");
  token.remove_prefix(1);
  bool prime = false;
  if (!token.empty() && token.front() == '\'') {
    expect(allow_prime, line, "primed element not allowed here");
    prime = true;
    token.remove_prefix(1);
  }
  const int index = detail::parse_int<int>(token, line);
  expect(index >= 1 && index <= limit, line, "element index out of range");
  const int base = letter - 'a';
  return {static_cast<Part>(base + (prime ? 3 : 0)), index};
}

int read_header(const std::vector<detail::Line>& lines, std::string_view word, std::vector<const detail::Line*>& body) {
  int n = -1;
  for (const auto& line : lines) {
    if (line.comment) continue;
    if (n < 0) {
      expect(line.tokens.front() == word, line.number, "expected '" + std::string(word) + "' header");
      detail::expect_arity(line, 2);
      n = detail::parse_int<int>(line.tokens[1], line.number);
      expect(n >= 0, line.number, "negative n");
    } else {
      body.push_back(&line);
    }
  }
  if (n < 0) throw ParseError(0, "missing '" + std::string(word) + "' header");
  return n;
}

}  // namespace

ThreeDM parse_3dm(std::string_view text) {
  const auto lines = detail::tokenize(text);
  std::vector<const detail::Line*> body;
  ThreeDM d;
  d.n = read_header(lines, "3DM", body);
  for (const auto* line : body) {
    expect(line->tokens.front() == "triplet", line->number, "expected 'triplet'");
    detail::expect_arity(*line, 4);
    const auto a = read_element(line->tokens[1], line->number, d.n, false);
    const auto b = read_element(line->tokens[2], line->number, d.n, false);
    const auto c = read_element(line->tokens[3], line->number, d.n, false);
    expect(a.part == Part::A && b.part == Part::B && c.part == Part::C, line->number, "triplet must read a b c");
    d.triplets.push_back({a.index, b.index, c.index});
  }
  return d;
}

ThreeDMStar parse_3dm_star(std::string_view text) {
  const auto lines = detail::tokenize(text);
  std::vector<const detail::Line*> body;
  const int n = read_header(lines, "3DMSTAR", body);
  std::vector<StarTriplet> e1;
  for (const auto* line : body) {
    expect(line->tokens.front() == "e1", line->number, "expected 'e1'");
    detail::expect_arity(*line, 4);
    e1.push_back({read_element(line->tokens[1], line->number, 3 * n, true),
                  read_element(line->tokens[2], line->number, 3 * n, true),
                  read_element(line->tokens[3], line->number, 3 * n, true)});
  }
  try {
    return build_3dm_star(n, std::move(e1));
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
}

std::string emit(const ThreeDM& d) {
  std::ostringstream out;
  out << "3DM " << d.n << '\n';
  for (const auto& t : d.triplets) out << "triplet a" << t.a << " b" << t.b << " c" << t.c << '\n';
  return out.str();
}

std::string emit(const ThreeDMStar& d) {
  std::ostringstream out;
  out << "3DMSTAR " << d.n << '\n';
  for (const auto& t : d.e1) out << "e1 " << to_string(t.x) << ' ' << to_string(t.y) << ' ' << to_string(t.z) << '\n';
  return out.str();
}

}  // namespace rsched
