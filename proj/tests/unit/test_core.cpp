#include "oracles.hpp"

#include "rsched/embeddings.hpp"
#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/generators.hpp"
#include "rsched/matching_reductions.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace rsched;

namespace {

RARInstance rar1(std::vector<int> caps, std::vector<int> demands) {
  std::vector<RARMachine> machines;
  for (std::size_t i = 0; i < caps.size(); ++i) machines.push_back({"m" + std::to_string(i + 1), {Rational(caps[i])}, {}});
  std::vector<RARJob> jobs;
  for (std::size_t j = 0; j < demands.size(); ++j) jobs.push_back({"j" + std::to_string(j + 1), Rational(1), {Rational(demands[j])}, {}});
  return RARInstance(1, std::move(machines), std::move(jobs));
}

std::vector<std::size_t> identity_order(std::size_t m) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(3).pow(0) == Rational(1));
  CHECK(Rational(7, 2).to_string() == "7/2");
  CHECK(Rational(309, 100) + Rational(3, 2) < Rational(5));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(0).pow(-1));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::overflow_error);
}

TEST_CASE("eligibility follows component-wise demand <= capacity") {
  const auto rar = witness_rar2_not_rai();
  CHECK(eligibility(rar, "j12", "2"));
  CHECK_FALSE(eligibility(rar, "j14", "2"));
  CHECK(eligibility(rar, "j1234", "4"));
  CHECK_THROWS_AS(eligibility(rar, "nope", "2"), Error);

  std::vector<RARMachine> machines{{"a", {Rational(0), Rational(0)}, {}}};
  std::vector<RARJob> jobs{{"z", Rational(2), {Rational(0), Rational(0)}, {}}};
  CHECK(eligibility(RARInstance(2, machines, jobs), 0, 0));
}

TEST_CASE("to_restricted_assignment materializes eligible sets") {
  SUBCASE("non-interval witness") {
    const auto ra = to_restricted_assignment(witness_rar2_not_rai());
    const testing::EligibleById expected{
        {"j1234", {"1", "2", "3", "4"}}, {"j12", {"1", "2"}}, {"j13", {"1", "3"}}, {"j14", {"1", "4"}}};
    CHECK(testing::eligible_by_id(ra) == expected);
  }
  SUBCASE("no resources means no restriction") {
    std::vector<RARMachine> machines{{"a", {}, {}}, {"b", {}, {}}, {"c", {}, {}}};
    std::vector<RARJob> jobs{{"x", Rational(1), {}, {}}, {"y", Rational(2), {}, {}}};
    const auto ra = to_restricted_assignment(RARInstance(0, machines, jobs));
    for (std::size_t j = 0; j < ra.job_count(); ++j) CHECK(ra.eligible(j).size() == 3);
  }
  SUBCASE("one resource") {
    const auto ra = to_restricted_assignment(rar1({3, 1, 2}, {2}));
    CHECK(ra.eligible(0) == std::vector<std::size_t>{0, 2});
  }
  SUBCASE("unschedulable jobs are all reported") {
    try {
      (void)to_restricted_assignment(rar1({1, 2}, {3, 1, 4}));
      FAIL("expected UnschedulableJobs");
    } catch (const UnschedulableJobs& e) {
      CHECK(e.jobs() == std::vector<std::string>{"j1", "j3"});
    }
  }
}

TEST_CASE("evaluate computes exact loads and rejects bad schedules") {
  RAInstanceBuilder b;
  b.add_machine("m1");
  b.add_machine("m2");
  b.add_job("x", Rational(3, 2), {0, 1});
  b.add_job("y", Rational(2), {1});
  const auto ra = std::move(b).build();

  const auto p = evaluate(ra, Schedule{{0, 1}});
  CHECK(p.load == std::vector<Rational>{Rational(3, 2), Rational(2)});
  CHECK(p.makespan == Rational(2));
  CHECK(p.min_load == Rational(3, 2));

  try {
    (void)evaluate(ra, Schedule{{0, 0}});
    FAIL("expected ScheduleViolation");
  } catch (const ScheduleViolation& v) {
    REQUIRE(v.offending().size() == 1);
    CHECK(v.offending()[0] == ScheduleViolation::Pair{"y", "m1"});
  }
  CHECK_THROWS_AS(evaluate(ra, Schedule{{0}}), ValidationError);
  CHECK_THROWS_AS(evaluate(ra, Schedule{{0, 5}}), ValidationError);

  const auto empty = evaluate(RAInstance{}, Schedule{});
  CHECK(empty.makespan == Rational(0));
  CHECK(empty.min_load == Rational(0));
}

TEST_CASE("evaluate on the LRS counterexample") {
  const auto cx = bhaskara_counterexample(Rational(1, 2));
  const auto p = evaluate(AnyInstance{cx.lrs}, cx.schedule);
  const auto i = cx.lrs.machine_index("a3b3c3");
  CHECK(p.load[i] == Rational(9, 2));
}

TEST_CASE("is_interval") {
  const auto ra = to_restricted_assignment(witness_rar2_not_rai());
  auto order = identity_order(4);
  int interval_orders = 0;
  do {
    interval_orders += is_interval(ra, order) ? 1 : 0;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(interval_orders == 0);

  RAInstanceBuilder b;
  b.add_machine("only");
  b.add_job("j", Rational(1), {0});
  CHECK(is_interval(std::move(b).build(), {0}));
  CHECK_THROWS_AS(is_interval(ra, {0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(is_interval(ra, {0, 1, 2, 2}), ValidationError);
}

TEST_CASE("is_interval is invariant under reversal") {
  Rng rng(11);
  for (int k = 0; k < 60; ++k) {
    const auto ra = random_ra(rng, {6, 8, 3, 5});
    auto order = identity_order(ra.machine_count());
    std::shuffle(order.begin(), order.end(), rng.engine());
    auto reversed = order;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(is_interval(ra, order) == is_interval(ra, reversed));
  }
  for (int k = 0; k < 30; ++k) {
    const auto rai = random_rai(rng, 7, 10);
    std::vector<std::size_t> reversed(rai.order().rbegin(), rai.order().rend());
    CHECK(is_interval(rai.base(), rai.order()));
    CHECK(is_interval(rai.base(), reversed));
  }
}

TEST_CASE("normalize rounds demands up and rank-compresses") {
  const auto n = normalize(rar1({3, 7}, {4}));
  CHECK(n.machine(0).capacity[0] == Rational(1));
  CHECK(n.machine(1).capacity[0] == Rational(2));
  CHECK(n.job(0).demand[0] == Rational(2));

  const auto same = normalize(rar1({5, 9, 5}, {9, 5}));
  CHECK(same.machine(0).capacity[0] == Rational(1));
  CHECK(same.machine(2).capacity[0] == Rational(1));
  CHECK(same.job(0).demand[0] == Rational(2));
  CHECK(same.job(1).demand[0] == Rational(1));

  const auto table = normalize(witness_rar2_not_rai());
  for (const auto& job : table.jobs())
    for (const auto& d : job.demand) CHECK(d.is_integer());
  CHECK(testing::eligible_by_id(table) == testing::eligible_by_id(witness_rar2_not_rai()));

  CHECK_THROWS_AS(normalize(rar1({1, 2}, {3})), UnschedulableJobs);
}

TEST_CASE("normalize preserves eligibility on random instances") {
  Rng rng(5);
  for (int k = 0; k < 150; ++k) {
    const auto rar = random_rar(rng, rng.uniform(1, 4), rng.uniform(1, 7), rng.uniform(1, 9));
    const auto n = normalize(rar);
    CHECK(testing::eligible_by_id(n) == testing::eligible_by_id(rar));
    CHECK(testing::eligible_by_id(to_restricted_assignment(n)) == testing::eligible_by_id(rar));
    for (const auto& m : n.machines())
      for (const auto& c : m.capacity) CHECK((c >= Rational(1) && c <= Rational(static_cast<std::int64_t>(n.machine_count()))));
  }
}

TEST_CASE("evaluate conserves total size and the load pattern holds at |M|T") {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto ra = random_ra(rng, {5, 9, 4, 6});
    Schedule s;
    for (std::size_t j = 0; j < ra.job_count(); ++j) {
      const auto& e = ra.eligible(j);
      s.assignment.push_back(e[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(e.size()) - 1))]);
    }
    const auto p = evaluate(ra, s);
    CHECK(p.load == testing::naive_loads(ra, s));
    Rational sum;
    for (const auto& l : p.load) sum += l;
    CHECK(sum == testing::total_size(ra));
    CHECK(p.makespan == *std::max_element(p.load.begin(), p.load.end()));
    CHECK(p.min_load == *std::min_element(p.load.begin(), p.load.end()));

    const Rational T = testing::total_size(ra) / Rational(static_cast<std::int64_t>(ra.machine_count()));
    REQUIRE(total_size_check(ra, T));
    const bool all_equal = std::all_of(p.load.begin(), p.load.end(), [&](const Rational& l) { return l == T; });
    CHECK((p.makespan <= T) == all_equal);
    CHECK((p.min_load >= T) == all_equal);
  }
}

TEST_CASE("total_size_check") {
  RAInstanceBuilder b;
  b.add_machine("m");
  b.add_job("j", Rational(5), {0});
  const auto ra = std::move(b).build();
  CHECK_FALSE(total_size_check(ra, Rational(4)));
  CHECK(total_size_check(ra, Rational(5)));
}

TEST_CASE("lrs_processing_time is the inner product") {
  LRSInstance lrs(2, {{"m", {Rational(3), Rational(9)}, {}}},
                  {{"s", {Rational(1), Rational(0)}, {}}, {"z", {Rational(0), Rational(0)}, {}}});
  CHECK(lrs_processing_time(lrs, 0, 0) == Rational(3));
  CHECK(lrs_processing_time(lrs, 1, 0) == Rational(0));

  const auto cx = bhaskara_counterexample(Rational(1, 2));
  CHECK(cx.n_big == Rational(6));
  const auto j = cx.lrs.job_index("elem_a1");
  const auto i = cx.lrs.machine_index("a1b1c2");
  CHECK(lrs_processing_time(cx.lrs, j, i) == Rational(3, 2));
}

TEST_CASE("instances validate their input") {
  RAInstanceBuilder dup;
  dup.add_machine("m");
  dup.add_machine("m");
  CHECK_THROWS_AS(std::move(dup).build(), ValidationError);

  RAInstanceBuilder empty_set;
  empty_set.add_machine("m");
  empty_set.add_job("j", Rational(1), {});
  CHECK_THROWS_AS(std::move(empty_set).build(), ValidationError);

  RAInstanceBuilder negative;
  negative.add_machine("m");
  negative.add_job("j", Rational(-1), {0});
  CHECK_THROWS_AS(std::move(negative).build(), ValidationError);

  CHECK_THROWS_AS(RARInstance(2, {{"m", {Rational(1)}, {}}}, {}), ValidationError);
  CHECK_THROWS_AS(LRSInstance(1, {{"m", {Rational(-1)}, {}}}, {}), ValidationError);
}
