#pragma once

#include "rsched/instance.hpp"
#include "rsched/matching.hpp"
#include "rsched/sat.hpp"

#include <cstdint>
#include <random>

namespace rsched {

/// The single seeded random source behind every generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Clauses over three distinct variables with random signs.
OneInThreeFormula random_one_in_three(Rng& rng, int vars, int clauses);
/// Direct 3-SAT* sampling: every literal placed twice, clauses over distinct
/// variables, first half 1-in-3. n must be a positive multiple of 3.
StarFormula random_star(Rng& rng, int n);
/// Clauses of `width` distinct variables (1 to 3) with random signs.
CNFFormula random_cnf(Rng& rng, int vars, int clauses, int width = 3);
/// random_cnf passed through to_modified_3sat.
CNFFormula random_modified(Rng& rng, int vars, int clauses);

/// `triplets` distinct triplets covering every element; needs
/// n <= triplets <= n^3.
ThreeDM random_3dm(Rng& rng, int n, int triplets);
/// Every (b_j, c_j) gets one E1 triplet, then `extra` more at random.
ThreeDMStar random_3dm_star(Rng& rng, int n, int extra = 0);
/// Every 3-DM instance over n with at most `max_triplets` triplets that covers
/// all elements, in increasing subset order.
std::vector<ThreeDM> all_3dm(int n, std::size_t max_triplets);

struct RandomRAParams {
  int max_machines = 12;
  int max_jobs = 20;
  int distinct_sizes = 6;
  int max_size = 9;
};

/// Nonempty random eligible sets, sizes drawn from a random palette.
RAInstance random_ra(Rng& rng, const RandomRAParams& params = {});
/// Random machine order and intervals.
RAIInstance random_rai(Rng& rng, int machines, int jobs, int max_size = 9);
/// Integer capacities in [0, max_value]; each demand fits under a randomly
/// chosen machine, so no job is unschedulable.
RARInstance random_rar(Rng& rng, int resources, int machines, int jobs, int max_value = 6, int max_size = 9);

}  // namespace rsched
