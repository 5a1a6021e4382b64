#include "oracles.hpp"

#include "rsched/embeddings.hpp"
#include "rsched/error.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/generators.hpp"
#include "rsched/sat_reductions.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace rsched;

namespace {

RAIInstance line_of(std::size_t m, std::vector<Interval> intervals) {
  std::vector<Machine> machines;
  for (std::size_t i = 0; i < m; ++i) machines.push_back({"M" + std::to_string(i + 1), {}});
  std::vector<Job> jobs;
  for (std::size_t j = 0; j < intervals.size(); ++j) jobs.push_back({"j" + std::to_string(j + 1), Rational(1), {}});
  return RAIInstance::from_intervals(std::move(machines), std::move(jobs), std::move(intervals));
}

}  // namespace

TEST_CASE("rai_to_rar2 on a line of four machines") {
  const auto rai = line_of(4, {{0, 3}, {1, 2}});
  const auto rar = rai_to_rar2(rai);
  CHECK(rar.machine(0).capacity == std::vector<Rational>{Rational(1), Rational(4)});
  CHECK(rar.job(0).demand == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(rar.job(1).demand == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK_FALSE(eligibility(rar, 1, 0));  // resource 1: 2 > 1
  CHECK(eligibility(rar, 1, 1));
  CHECK(eligibility(rar, 1, 2));
  CHECK_FALSE(eligibility(rar, 1, 3));  // resource 2: 2 > 1
  CHECK(testing::eligible_by_id(rar) == testing::eligible_by_id(rai.base()));
}

TEST_CASE("rai_to_rar2 keeps eligible sets, including the refined instance") {
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto rai = random_rai(rng, rng.uniform(1, 9), rng.uniform(1, 12));
    CHECK(testing::eligible_by_id(rai_to_rar2(rai)) == testing::eligible_by_id(rai.base()));
  }
  const auto refined = std::get<RAIInstance>(reduce_rai(appendix_formula()).instance);
  CHECK(testing::eligible_by_id(rai_to_rar2(refined)) == testing::eligible_by_id(refined.base()));
}

TEST_CASE("ra_to_rar_m encoding") {
  RAInstanceBuilder b;
  b.add_machine("m1");
  b.add_machine("m2");
  b.add_job("j", Rational(1), {0});
  const auto rar = ra_to_rar_m(std::move(b).build());
  CHECK(rar.resource_count() == 2);
  CHECK(rar.machine(0).capacity == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(rar.machine(1).capacity == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(rar.job(0).demand == std::vector<Rational>{Rational(0), Rational(1)});

  Rng rng(14);
  for (int k = 0; k < 100; ++k) {
    const auto ra = random_ra(rng);
    CHECK(testing::eligible_by_id(ra_to_rar_m(ra)) == testing::eligible_by_id(ra));
  }
}

TEST_CASE("witness_rar_m") {
  const auto w = witness_rar_m(3);
  REQUIRE(w.job_count() == 3);
  const testing::EligibleById expected{{"J_1_2", {"M1", "M2"}}, {"J_1_3", {"M1", "M3"}}, {"J_2_3", {"M2", "M3"}}};
  CHECK(testing::eligible_by_id(w) == expected);
  for (const auto& job : w.jobs()) CHECK(job.size == Rational(1));
  for (int m = 2; m <= 6; ++m) {
    const auto wm = witness_rar_m(m);
    CHECK(wm.job_count() == static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < wm.job_count(); ++j) CHECK(wm.eligible(j).size() == static_cast<std::size_t>(m - 1));
    CHECK(testing::eligible_by_id(ra_to_rar_m(wm)) == testing::eligible_by_id(wm));
  }
  CHECK_THROWS(witness_rar_m(1));
}

TEST_CASE("witness_rar2_not_rai admits no interval order") {
  const auto rar = witness_rar2_not_rai();
  CHECK(rar.resource_count() == 2);
  const auto ra = to_restricted_assignment(rar);
  std::vector<std::size_t> order(4);
  std::iota(order.begin(), order.end(), 0);
  do {
    CHECK_FALSE(is_interval(ra, order));
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(testing::eligible_by_id(normalize(rar)) == testing::eligible_by_id(rar));
}

TEST_CASE("rar_to_lrs worked example") {
  std::vector<RARMachine> machines{{"hi", {Rational(3)}, {}}, {"lo", {Rational(2)}, {}}};
  std::vector<RARJob> jobs{{"fits", Rational(5), {Rational(2)}, {}}, {"big", Rational(5), {Rational(3)}, {}}};
  const RARInstance rar(1, machines, jobs);
  // Normalized: capacities 3 -> 2, 2 -> 1; demands 2 -> 1, 3 -> 2. N = K/eps = 10.
  const auto lrs = rar_to_lrs(rar, Rational(1), Rational(10));
  CHECK(lrs.dimension() == 2);
  const auto fits_hi = lrs_processing_time(lrs, 0, 0);
  CHECK(fits_hi == Rational(51, 10));
  CHECK(fits_hi >= Rational(5));
  CHECK(fits_hi <= Rational(6));
  CHECK(lrs_processing_time(lrs, 1, 1) == Rational(15));
  // Demand equal to capacity gives exactly p + eps.
  CHECK(lrs_processing_time(lrs, 0, 1) == Rational(6));
  CHECK(lrs_processing_time(lrs, 1, 0) == Rational(6));

  CHECK_THROWS_AS(rar_to_lrs(RARInstance(0, {{"m", {}, {}}}, {}), Rational(1), Rational(1)), ValidationError);
  CHECK_THROWS_AS(rar_to_lrs(rar, Rational(0), Rational(1)), ValidationError);
  CHECK_THROWS_AS(rar_to_lrs(rar, Rational(1), Rational(-1)), ValidationError);
}

TEST_CASE("rar_to_lrs bounds on random instances") {
  Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    const auto rar = random_rar(rng, rng.uniform(1, 3), rng.uniform(1, 5), rng.uniform(1, 6));
    const Rational eps(1, 3);
    const Rational K(7);
    const auto lrs = rar_to_lrs(rar, eps, K);
    const auto eligible = testing::eligible_by_id(rar);
    for (std::size_t j = 0; j < rar.job_count(); ++j)
      for (std::size_t i = 0; i < rar.machine_count(); ++i) {
        const auto p = rar.job(j).size;
        const auto q = lrs_processing_time(lrs, j, i);
        CHECK(q >= p);
        if (eligible.at(rar.job(j).id).count(rar.machine(i).id) != 0) {
          CHECK(q <= p + eps);
        } else {
          CHECK(q >= p + K);
        }
      }
  }
}
