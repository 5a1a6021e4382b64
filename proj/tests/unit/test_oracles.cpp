// The test oracles are checked on hand-sized cases before anything is
// compared against them.

#include "oracles.hpp"

#include <doctest.h>

using namespace rsched;
using testing::LoadGoal;

namespace {

RAInstance two_machines(std::vector<std::int64_t> sizes) {
  RAInstanceBuilder b;
  b.add_machine("a");
  b.add_machine("b");
  for (std::size_t j = 0; j < sizes.size(); ++j) b.add_job("j" + std::to_string(j), Rational(sizes[j]), {0, 1});
  return std::move(b).build();
}

}  // namespace

TEST_CASE("naive feasibility") {
  const auto ra = two_machines({3, 3, 2, 2});
  CHECK(testing::naive_feasible(ra, Rational(5), LoadGoal::AtMost));
  CHECK(testing::naive_feasible(ra, Rational(5), LoadGoal::Exactly));
  CHECK_FALSE(testing::naive_feasible(ra, Rational(4), LoadGoal::AtMost));
  CHECK(testing::naive_feasible(ra, Rational(4), LoadGoal::AtLeast));
  CHECK_FALSE(testing::naive_feasible(ra, Rational(6), LoadGoal::AtLeast));

  const auto odd = two_machines({3, 3, 3});
  CHECK_FALSE(testing::naive_feasible(odd, Rational(9, 2), LoadGoal::Exactly));
  CHECK(testing::naive_feasible(odd, Rational(6), LoadGoal::AtMost));
  CHECK_FALSE(testing::naive_feasible(odd, Rational(11, 2), LoadGoal::AtMost));
  CHECK(testing::naive_feasible(odd, Rational(3), LoadGoal::AtLeast));
}

TEST_CASE("naive sat and matching") {
  StarFormula f{2, {{{Literal{1, true}, Literal{2, true}, Literal{2, false}}, ClauseKind::OneInThree}}};
  // Exactly one of x1, x2, not x2 is true: x2 and not x2 contribute one, so x1 is false.
  CHECK(testing::naive_star_sat(f));
  f.clauses[0].kind = ClauseKind::TwoInThree;
  CHECK(testing::naive_star_sat(f));
  f.clauses[0].lits = {Literal{1, true}, Literal{1, true}, Literal{1, true}};
  CHECK_FALSE(testing::naive_star_sat(f));

  CHECK(testing::naive_match(ThreeDM{2, {{1, 1, 1}, {2, 2, 2}}}));
  CHECK_FALSE(testing::naive_match(ThreeDM{2, {{1, 1, 1}, {2, 2, 1}, {1, 2, 2}}}));
}
