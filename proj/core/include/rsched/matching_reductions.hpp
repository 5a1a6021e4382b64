#pragma once

#include "rsched/reduction_output.hpp"

#include <array>
#include <vector>

namespace rsched {

/// Sizes of element (alpha) and dummy (beta) jobs in the 47-reductions.
struct AlphaBeta {
  int alpha_a = 12;
  int alpha_b = 13;
  int alpha_c = 22;
  int beta_a = 14;
  int beta_b = 15;
  int beta_c = 18;

  std::array<int, 6> values() const { return {alpha_a, alpha_b, alpha_c, beta_a, beta_b, beta_c}; }
};

struct AlphaBetaReport {
  bool sums_to_47 = false;           // both triples sum to 47
  bool any_four_exceed = false;      // every 4-subset sums above 47
  bool fewer_than_three_below = false;
  bool only_two_triples = false;     // sorted 47-triples are exactly alpha and beta
  std::vector<std::array<int, 3>> triples_summing_to_47;

  bool ok() const { return sums_to_47 && any_four_exceed && fewer_than_three_below && only_two_triples; }
};

/// Exhaustive over all 64 subsets of the six values.
AlphaBetaReport check_alpha_beta(const AlphaBeta& ab = {});

/// Machines are the triplets (machine k is triplet k), target 2.
ReductionOutput reduce_lst(const ThreeDM& d);
/// Same jobs and machines with six resources.
ReductionOutput model_rar6(const ThreeDM& d);
/// Three resources, element jobs alpha_X and |E(x)|-1 dummies beta_X, target 47.
ReductionOutput reduce_rar3(const ThreeDM& d, const AlphaBeta& ab = {});
/// Two resources over E1 then E2, target 47.
ReductionOutput reduce_rar2(const ThreeDMStar& d, const AlphaBeta& ab = {});

/// Element jobs go to the matched triplet of their element; dummies fill the
/// remaining triplets of their element. Works for lst, rar6, rar3 and rar2.
Schedule build_schedule_matching(const ReductionOutput& out, const MatchingCertificate& f);
/// Selects the machines that process no dummy job. The caller checks the
/// result with check_certificate.
MatchingCertificate extract_matching(const ReductionOutput& out, const Schedule& schedule);

/// LRS(4) instance with speeds (N^i, N^j, N^k, 1), N = n/eps.
LRSInstance build_bhaskara(const ThreeDM& d, const Rational& eps);
/// Wraps build_bhaskara with target 309/100 + 3 eps.
ReductionOutput reduce_bhaskara(const ThreeDM& d, const Rational& eps);

struct BhaskaraCounterexample {
  ThreeDM instance;
  LRSInstance lrs;
  Schedule schedule;
  Rational eps;
  Rational n_big;  // N = n / eps
};

BhaskaraCounterexample bhaskara_counterexample(const Rational& eps);

}  // namespace rsched
