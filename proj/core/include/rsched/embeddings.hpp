#pragma once

#include "rsched/reduction_output.hpp"

namespace rsched {

/// Capacities c(i) = (p, m+1-p) for the machine at 1-based position p of the
/// order; demands d(j) = (l, m+1-r) for the interval [l, r].
RARInstance rai_to_rar2(const RAIInstance& rai);

/// One resource per machine: c_r(i) = 0 iff r = i, d_r(j) = 0 iff r is
/// eligible for j. Eligible sets come out unchanged.
RARInstance ra_to_rar_m(const RAInstance& ra);

/// m unit jobs, one per (m-1)-subset of the machines in lexicographic order.
RAInstance witness_rar_m(int m);

/// LRS(R+1) instance approximating a RAR(R) instance: eligible pairs take at
/// most p_j + eps, ineligible pairs at least p_j + K. The input is normalized
/// first. Throws ValidationError for R = 0 or non-positive eps/K.
LRSInstance rar_to_lrs(const RARInstance& rar, const Rational& eps, const Rational& K);

/// Four machines and four jobs with eligible sets {1,2,3,4}, {1,2}, {1,3},
/// {1,4}: a RAR(2) instance with no interval order.
RARInstance witness_rar2_not_rai();

/// ReductionOutput wrappers for the CLI; no target, source is the input.
ReductionOutput embed_rai_to_rar2(const RAIInstance& rai);
ReductionOutput embed_ra_to_rar_m(const RAInstance& ra);
ReductionOutput embed_rar_to_lrs(const RARInstance& rar, const Rational& eps, const Rational& K);

}  // namespace rsched
