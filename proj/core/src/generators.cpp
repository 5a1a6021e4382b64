#include "rsched/generators.hpp"

#include "rsched/error.hpp"

#include <algorithm>
#include <set>

namespace rsched {

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

namespace {

std::array<int, 3> distinct_vars(Rng& rng, int vars) {
  std::array<int, 3> v{};
  for (std::size_t k = 0; k < 3; ++k) {
    int x = 0;
    do {
      x = rng.uniform(1, vars);
    } while (std::find(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), x) != v.begin() + static_cast<std::ptrdiff_t>(k));
    v[k] = x;
  }
  return v;
}

}  // namespace

OneInThreeFormula random_one_in_three(Rng& rng, int vars, int clauses) {
  if (vars < 3 || clauses < 0) throw ValidationError("1-in-3 generator needs at least 3 variables");
  OneInThreeFormula f;
  f.n = vars;
  for (int c = 0; c < clauses; ++c) {
    const auto v = distinct_vars(rng, vars);
    f.clauses.push_back({Literal{v[0], rng.coin()}, Literal{v[1], rng.coin()}, Literal{v[2], rng.coin()}});
  }
  return f;
}

StarFormula random_star(Rng& rng, int n) {
  if (n <= 0 || n % 3 != 0) throw ValidationError("3-SAT* generator needs n a positive multiple of 3");
  std::vector<Literal> slots;
  for (int j = 1; j <= n; ++j)
    for (int copy = 0; copy < 2; ++copy) {
      slots.push_back({j, true});
      slots.push_back({j, false});
    }
  const auto clause_count = slots.size() / 3;
  for (;;) {
    std::shuffle(slots.begin(), slots.end(), rng.engine());
    bool ok = true;
    for (std::size_t c = 0; c < clause_count && ok; ++c) {
      const int a = slots[3 * c].var, b = slots[3 * c + 1].var, d = slots[3 * c + 2].var;
      ok = a != b && b != d && a != d;
    }
    if (!ok) continue;
    StarFormula f;
    f.n = n;
    for (std::size_t c = 0; c < clause_count; ++c)
      f.clauses.push_back({{slots[3 * c], slots[3 * c + 1], slots[3 * c + 2]},
                           c < clause_count / 2 ? ClauseKind::OneInThree : ClauseKind::TwoInThree});
    return f;
  }
}

CNFFormula random_cnf(Rng& rng, int vars, int clauses, int width) {
  if (width < 1 || width > 3 || vars < width || clauses < 0) throw ValidationError("CNF generator: bad parameters");
  CNFFormula f;
  f.n = vars;
  for (int c = 0; c < clauses; ++c) {
    std::vector<Literal> clause;
    while (static_cast<int>(clause.size()) < width) {
      const int x = rng.uniform(1, vars);
      if (std::any_of(clause.begin(), clause.end(), [&](const Literal& l) { return l.var == x; })) continue;
      clause.push_back({x, rng.coin()});
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

CNFFormula random_modified(Rng& rng, int vars, int clauses) {
  return to_modified_3sat(random_cnf(rng, vars, clauses)).formula;
}

ThreeDM random_3dm(Rng& rng, int n, int triplets) {
  if (n < 1 || triplets < n || triplets > n * n * n) throw ValidationError("3-DM generator: bad parameters");
  for (;;) {
    std::set<Triplet> chosen;
    while (static_cast<int>(chosen.size()) < triplets)
      chosen.insert(Triplet{rng.uniform(1, n), rng.uniform(1, n), rng.uniform(1, n)});
    ThreeDM d{n, {chosen.begin(), chosen.end()}};
    std::shuffle(d.triplets.begin(), d.triplets.end(), rng.engine());
    if (is_covered(d)) return d;
  }
}

ThreeDMStar random_3dm_star(Rng& rng, int n, int extra) {
  if (n < 1 || extra < 0) throw ValidationError("3-DM* generator: bad parameters");
  const int size = 3 * n;
  auto one = [&](int j) {
    const Part a = rng.coin() ? Part::APrime : Part::A;
    return StarTriplet{{a, rng.uniform(1, size)}, {Part::B, j}, {Part::C, j}};
  };
  // E1 is a set; extras beyond the 2 size^2 distinct triplets are dropped.
  const std::size_t wanted = static_cast<std::size_t>(std::min(size + extra, 2 * size * size));
  std::vector<StarTriplet> e1;
  for (int j = 1; j <= size; ++j) e1.push_back(one(j));
  while (e1.size() < wanted) {
    const auto t = one(rng.uniform(1, size));
    if (std::find(e1.begin(), e1.end(), t) == e1.end()) e1.push_back(t);
  }
  return build_3dm_star(n, std::move(e1));
}

std::vector<ThreeDM> all_3dm(int n, std::size_t max_triplets) {
  std::vector<Triplet> universe;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) universe.push_back({a, b, c});
  if (universe.size() > 20) throw CapExceeded("all_3dm: universe too large");
  std::vector<ThreeDM> out;
  for (std::uint32_t mask = 1; mask < (1U << universe.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_triplets) continue;
    ThreeDM d{n, {}};
    for (std::size_t k = 0; k < universe.size(); ++k)
      if ((mask >> k) & 1U) d.triplets.push_back(universe[k]);
    if (is_covered(d)) out.push_back(std::move(d));
  }
  return out;
}

RAInstance random_ra(Rng& rng, const RandomRAParams& p) {
  const int m = rng.uniform(1, p.max_machines);
  const int n = rng.uniform(1, p.max_jobs);
  std::vector<int> palette;
  const int distinct = rng.uniform(1, p.distinct_sizes);
  for (int k = 0; k < distinct; ++k) palette.push_back(rng.uniform(1, p.max_size));
  RAInstanceBuilder b;
  for (int i = 1; i <= m; ++i) b.add_machine("M" + std::to_string(i));
  for (int j = 1; j <= n; ++j) {
    std::vector<std::size_t> eligible;
    const int density = rng.uniform(1, 4);
    for (int i = 0; i < m; ++i)
      if (rng.uniform(1, 4) <= density) eligible.push_back(static_cast<std::size_t>(i));
    if (eligible.empty()) eligible.push_back(static_cast<std::size_t>(rng.uniform(0, m - 1)));
    const auto size = palette[static_cast<std::size_t>(rng.uniform(0, distinct - 1))];
    b.add_job("J" + std::to_string(j), Rational(std::int64_t{size}), std::move(eligible));
  }
  return std::move(b).build();
}

RAIInstance random_rai(Rng& rng, int machines, int jobs, int max_size) {
  if (machines < 1 || jobs < 0) throw ValidationError("RAI generator: bad parameters");
  std::vector<std::size_t> order(static_cast<std::size_t>(machines));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng.engine());
  RAInstanceBuilder b;
  for (int i = 1; i <= machines; ++i) b.add_machine("M" + std::to_string(i));
  std::vector<Interval> intervals;
  for (int j = 1; j <= jobs; ++j) {
    auto l = static_cast<std::size_t>(rng.uniform(0, machines - 1));
    auto r = static_cast<std::size_t>(rng.uniform(0, machines - 1));
    if (l > r) std::swap(l, r);
    intervals.push_back({l, r});
    std::vector<std::size_t> eligible(order.begin() + static_cast<std::ptrdiff_t>(l),
                                      order.begin() + static_cast<std::ptrdiff_t>(r) + 1);
    b.add_job("J" + std::to_string(j), Rational(std::int64_t{rng.uniform(1, max_size)}), std::move(eligible));
  }
  return RAIInstance(std::move(b).build(), std::move(order), std::move(intervals));
}

RARInstance random_rar(Rng& rng, int resources, int machines, int jobs, int max_value, int max_size) {
  if (resources < 1 || machines < 1 || jobs < 0) throw ValidationError("RAR generator: bad parameters");
  const auto R = static_cast<std::size_t>(resources);
  std::vector<RARMachine> ms;
  for (int i = 1; i <= machines; ++i) {
    std::vector<Rational> cap;
    for (std::size_t r = 0; r < R; ++r) cap.emplace_back(std::int64_t{rng.uniform(0, max_value)});
    ms.push_back({"M" + std::to_string(i), std::move(cap), std::nullopt});
  }
  std::vector<RARJob> js;
  for (int j = 1; j <= jobs; ++j) {
    const auto& host = ms[static_cast<std::size_t>(rng.uniform(0, machines - 1))];
    std::vector<Rational> demand;
    for (std::size_t r = 0; r < R; ++r)
      demand.emplace_back(std::int64_t{rng.uniform(0, static_cast<int>(host.capacity[r].to_int64()))});
    js.push_back({"J" + std::to_string(j), Rational(std::int64_t{rng.uniform(1, max_size)}), std::move(demand),
                  std::nullopt});
  }
  return RARInstance(R, std::move(ms), std::move(js));
}

}  // namespace rsched
