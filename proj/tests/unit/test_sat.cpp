#include "oracles.hpp"

#include "rsched/error.hpp"
#include "rsched/generators.hpp"
#include "rsched/sat.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rsched;

namespace {

StarClause clause(int a, int b, int c, ClauseKind kind) {
  return {{Literal::from_int(a), Literal::from_int(b), Literal::from_int(c)}, kind};
}

OneInThreeFormula one_in_three(int n, std::vector<std::array<int, 3>> clauses) {
  OneInThreeFormula f;
  f.n = n;
  for (const auto& c : clauses) f.clauses.push_back({Literal::from_int(c[0]), Literal::from_int(c[1]), Literal::from_int(c[2])});
  return f;
}

}  // namespace

TEST_CASE("appendix formula is valid and satisfied by all-true") {
  const auto f = appendix_formula();
  CHECK(check_star(f).ok());
  CHECK(satisfies(f, {true, true, true}));
  const auto model = brute_force_sat(f);
  REQUIRE(model);
  CHECK(satisfies(f, *model));
}

TEST_CASE("oracle semantics on tiny clauses") {
  StarFormula xxx{1, {clause(1, 1, 1, ClauseKind::OneInThree)}};
  CHECK_FALSE(brute_force_sat(xxx));

  StarFormula force{1, {clause(1, -1, -1, ClauseKind::OneInThree)}};
  const auto y = brute_force_sat(force);
  REQUIRE(y);
  CHECK((*y)[0]);
  CHECK_FALSE(satisfies(force, {false}));

  CNFFormula cnf{2, {{Literal::from_int(1)}, {Literal::from_int(-1), Literal::from_int(2)}}};
  const auto m = brute_force_sat(cnf);
  REQUIRE(m);
  CHECK(*m == std::vector<bool>{true, true});
}

TEST_CASE("oracle returns the lexicographically first model") {
  // Exactly one of x1, x2, x3: first model with false < true and x1 most
  // significant is (F, F, T).
  const auto f = one_in_three(3, {{1, 2, 3}});
  CHECK(*brute_force_sat(f) == std::vector<bool>{false, false, true});
}

TEST_CASE("oracle cap") {
  StarFormula big;
  big.n = 30;
  CHECK_THROWS_AS(brute_force_sat(big), CapExceeded);
  CHECK_THROWS_AS(brute_force_sat(appendix_formula(), 2), CapExceeded);
}

TEST_CASE("star validation checks each condition separately") {
  auto f = appendix_formula();
  std::swap(f.clauses[0], f.clauses[2]);
  auto c = check_star(f);
  CHECK(c.literals_twice);
  CHECK(c.kinds_balanced);
  CHECK_FALSE(c.kinds_ordered);
  CHECK_THROWS_AS(validate(f), ValidationError);

  f = appendix_formula();
  f.clauses[0].lits[0] = Literal::from_int(2);
  c = check_star(f);
  CHECK_FALSE(c.literals_twice);
  CHECK(c.counts_match);

  f = appendix_formula();
  f.clauses[0].kind = ClauseKind::TwoInThree;
  CHECK_FALSE(check_star(f).kinds_balanced);

  f = appendix_formula();
  f.n = 4;
  CHECK_FALSE(check_star(f).counts_match);
}

TEST_CASE("kappa on the appendix formula") {
  const auto k = kappa_of(appendix_formula());
  CHECK(k.at(1, 1) == Kappa::Slot{1, 3});
  CHECK(k.at(1, 2) == Kappa::Slot{3, 3});
  CHECK(k.at(1, 3) == Kappa::Slot{2, 1});
  CHECK(k.at(1, 4) == Kappa::Slot{4, 1});
  CHECK(k.at(2, 1) == Kappa::Slot{2, 2});
  CHECK(k.at(2, 2) == Kappa::Slot{4, 3});
  CHECK(k.at(2, 3) == Kappa::Slot{1, 1});
  CHECK(k.at(2, 4) == Kappa::Slot{3, 2});

  const auto order = k.increasing_order();
  std::vector<Kappa::Slot> first_two;
  for (const auto& jt : order)
    if (jt.first <= 2) first_two.push_back(jt);
  const std::vector<Kappa::Slot> expected{{2, 3}, {1, 1}, {1, 3}, {2, 1}, {2, 4}, {1, 2}, {1, 4}, {2, 2}};
  CHECK(first_two == expected);
}

TEST_CASE("kappa is a bijection consistent with clause contents") {
  Rng rng(7);
  for (int k = 0; k < 40; ++k) {
    const auto f = random_star(rng, 3 * rng.uniform(1, 4));
    const auto kappa = kappa_of(f);
    std::set<Kappa::Slot> image;
    for (int j = 1; j <= f.n; ++j)
      for (int t = 1; t <= 4; ++t) {
        const auto [i, s] = kappa.at(j, t);
        image.insert({i, s});
        CHECK(kappa.inverse(i, s) == Kappa::Slot{j, t});
        const auto& lit = f.clauses[static_cast<std::size_t>(i - 1)].lits[static_cast<std::size_t>(s - 1)];
        CHECK(lit.var == j);
        CHECK(lit.positive == (t <= 2));
      }
    CHECK(image.size() == 6 * f.m());
    for (int j = 1; j <= f.n; ++j) {
      CHECK(kappa.at(j, 1) < kappa.at(j, 2));
      CHECK(kappa.at(j, 3) < kappa.at(j, 4));
    }
  }
  CHECK_THROWS_AS(kappa_of(StarFormula{1, {clause(1, 1, 1, ClauseKind::OneInThree)}}), ValidationError);
}

TEST_CASE("one_in_three_to_star gadget for a double occurrence") {
  const auto d2 = one_in_three_to_star(one_in_three(3, {{1, 2, 3}, {-1, -2, -3}}));
  CHECK(check_star(d2.formula).ok());
  const auto& x = d2.copies[0];
  REQUIRE(x.size() == 2);
  // y copies directly follow the x copies.
  const int y1 = x[1] + 1;
  const int y2 = x[1] + 2;
  const auto& cl = d2.formula.clauses;
  auto has = [&](const StarClause& c) { return std::find(cl.begin(), cl.end(), c) != cl.end(); };
  CHECK(has(clause(x[0], -x[1], y1, ClauseKind::TwoInThree)));
  CHECK(has(clause(x[1], -x[0], y2, ClauseKind::TwoInThree)));
  CHECK(has(clause(y1, -y1, -y1, ClauseKind::OneInThree)));
  CHECK(has(clause(y2, -y2, -y2, ClauseKind::OneInThree)));
}

TEST_CASE("one_in_three_to_star keeps satisfiability") {
  const auto unsat = one_in_three(1, {{1, 1, 1}, {-1, -1, -1}});
  CHECK_FALSE(testing::naive_one_in_three_sat(unsat));
  const auto conv = one_in_three_to_star(unsat);
  CHECK(check_star(conv.formula).ok());
  CHECK_FALSE(brute_force_sat(conv.formula));

  Rng rng(23);
  int sat = 0;
  for (int k = 0; k < 60; ++k) {
    const auto f = random_one_in_three(rng, rng.uniform(3, 4), rng.uniform(1, 2));
    const auto c = one_in_three_to_star(f);
    CHECK(check_star(c.formula).ok());
    CHECK(c.formula.clauses.size() % 2 == 0);
    const auto model = brute_force_sat(c.formula);
    CHECK(model.has_value() == testing::naive_one_in_three_sat(f));
    CHECK(model.has_value() == testing::naive_star_sat(c.formula));
    if (model) {
      ++sat;
      CHECK(satisfies(f, c.project(*model)));
    }
    if (const auto m = brute_force_sat(f)) CHECK(satisfies(c.formula, c.lift(*m)));
  }
  CHECK(sat > 0);
}

TEST_CASE("to_modified_3sat") {
  const auto conv = to_modified_3sat(CNFFormula{2, {{Literal::from_int(1), Literal::from_int(2)}, {Literal::from_int(-1)}}});
  CHECK(is_modified(conv.formula));
  const auto& z = conv.copies[0];
  REQUIRE(z.size() == 2);
  const auto& cl = conv.formula.clauses;
  const std::vector<Literal> link01{Literal{z[0], true}, Literal{z[1], false}};
  const std::vector<Literal> link10{Literal{z[1], true}, Literal{z[0], false}};
  CHECK(std::find(cl.begin(), cl.end(), link01) != cl.end());
  CHECK(std::find(cl.begin(), cl.end(), link10) != cl.end());
  CHECK(brute_force_sat(conv.formula).has_value());

  CHECK(to_modified_3sat(CNFFormula{}).formula == CNFFormula{});

  Rng rng(31);
  for (int k = 0; k < 80; ++k) {
    const int width = rng.uniform(1, 3);
    const auto f = random_cnf(rng, rng.uniform(width, 4), rng.uniform(1, 5), width);
    const auto m = to_modified_3sat(f);
    CHECK(is_modified(m.formula));
    const auto model = brute_force_sat(m.formula);
    CHECK(model.has_value() == testing::naive_cnf_sat(f));
    if (model) CHECK(satisfies(f, m.project(*model)));
  }
}

TEST_CASE("random_star draws valid formulas") {
  Rng rng(2);
  for (int k = 0; k < 30; ++k) {
    const auto f = random_star(rng, 3 * rng.uniform(1, 3));
    CHECK(check_star(f).ok());
    for (const auto& c : f.clauses) {
      CHECK(c.lits[0].var != c.lits[1].var);
      CHECK(c.lits[1].var != c.lits[2].var);
      CHECK(c.lits[0].var != c.lits[2].var);
    }
  }
  CHECK_THROWS(random_star(rng, 4));
}

TEST_CASE("formula text round-trips") {
  Rng rng(4);
  const auto star = random_star(rng, 6);
  CHECK(parse_star(emit(star)) == star);
  const auto one = random_one_in_three(rng, 5, 3);
  CHECK(parse_one_in_three(emit(one)) == one);
  const auto cnf = random_cnf(rng, 4, 6, 2);
  CHECK(parse_cnf(emit(cnf)) == cnf);
  CHECK_THROWS(parse_star("STAR 3 2\n1in3 1 2 3\n"));
}
