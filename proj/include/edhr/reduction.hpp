#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edhr/instance.hpp"

namespace edhr {

/// The five-set partition of the sorted positions for a reduction parameter
/// i >= 1. Membership follows the i-scaled integer forms (all r/i
/// comparisons are multiplied through by i, so every test is exact):
///
///   n1: e_j > e_b  and  i*p_j*w_b - p_b*(r + i*w_j) >  0
///   n2: e_j > e_b  and  i*p_j*w_b - p_b*(r + i*w_j) <= 0
///   n3: e_j <= e_b, i*w_j > r,  i*p_j*w_b + p_b*(r - i*w_j) >= 0
///   n4: e_j <= e_b, i*w_j > r,  i*p_j*w_b + p_b*(r - i*w_j) <  0
///   n5: e_j <= e_b, i*w_j <= r
///
/// The sets are disjoint, cover every position, and the break position is
/// always in n3. Every optimal solution misses at most i-1 items of n1 and
/// contains at most i-1 items of n4.
struct EdhrPartition {
  std::int64_t i = 1;
  std::vector<std::size_t> n1, n2, n3, n4, n5;
};

EdhrPartition edhr_partition(const SortedInstance& s, std::int64_t i);

/// A reduced instance: positions forced to one or zero plus the remaining
/// free positions and the capacity left for them. feasible is false when the
/// forced inclusions already exceed the capacity (reduced_capacity < 0).
struct Subproblem {
  std::vector<std::size_t> fixed_one;
  std::vector<std::size_t> fixed_zero;
  std::vector<std::size_t> free_positions;
  std::int64_t reduced_capacity = 0;
  bool feasible = true;
};

/// Classical single-pass variable fixing: positions with e_j > e_b and
/// p_j*w_b - p_b*(r + w_j) > 0 are forced to one, positions with e_j <= e_b,
/// w_j > r and p_j*w_b + p_b*(r - w_j) < 0 are forced to zero.
Subproblem dhr_partition(const SortedInstance& s);

/// True iff edhr_partition(s, 1) reproduces dhr_partition(s) exactly
/// (n1 = fixed_one and n4 = fixed_zero). The two run independent code paths.
bool fixing_sets_agree_with_dhr(const SortedInstance& s);

/// sum of x over positions >= / <= bound.
struct CardinalityConstraint {
  std::vector<std::size_t> positions;
  std::int64_t bound = 0;
};

/// The aggregated constraints derived from a partition:
///   at_least: sum_{j in n1} x_j >= |n1| - (i-1)
///   at_most:  sum_{j in n4} x_j <= i-1
/// Vacuous constraints (empty set, or a bound that cannot cut) are emitted
/// as absent rather than as trivially-true rows.
struct CardinalityConstraints {
  std::optional<CardinalityConstraint> at_least;
  std::optional<CardinalityConstraint> at_most;
};

CardinalityConstraints cardinality_constraints(const EdhrPartition& p);

/// One candidate of the enumeration family: a subset of n1 forced out and a
/// subset of n4 forced in, each of size at most i-1.
struct Branch {
  std::vector<std::size_t> excluded;
  std::vector<std::size_t> included;
};

struct EnumerationPlan {
  std::vector<Branch> branches;
};

class EnumerationBlowup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of branches enumeration_plan would produce:
/// (sum_{j<i} C(|n1|,j)) * (sum_{j<i} C(|n4|,j)). Saturates at 2^64-1.
std::uint64_t enumeration_branch_count(const EdhrPartition& p);

/// Materializes every (excluded, included) pair in deterministic order:
/// subsets ordered by size then lexicographically, included varying slowest.
/// Throws EnumerationBlowup when the branch count exceeds the cap.
EnumerationPlan enumeration_plan(const EdhrPartition& p,
                                 std::uint64_t branch_cap = 10'000'000);

/// Turns one branch into a concrete subproblem:
///   fixed_one  = (n1 \ excluded) u included
///   fixed_zero = excluded u (n4 \ included)
///   free       = n2 u n3 u n5
/// Branches whose forced inclusions exceed the capacity come back with
/// feasible = false rather than as an error.
Subproblem assemble_branch(const SortedInstance& s, const EdhrPartition& p,
                           const Branch& branch);

/// The deviation sets of a concrete solution against a partition:
///   d1 = positions of n1 the solution leaves out
///   d2 = positions of n4 the solution takes
///   d3 = positions of n5 the solution takes
struct TheoremAudit {
  std::vector<std::size_t> d1, d2, d3;

  bool within_bounds(std::int64_t i) const {
    const auto cap = static_cast<std::size_t>(i - 1);
    return d1.size() <= cap && d2.size() <= cap;
  }
};

/// Computes the deviation sets for any assignment (no optimality required).
TheoremAudit audit_solution(const SortedInstance& s, const EdhrPartition& p,
                            const std::vector<std::uint8_t>& assignment);

/// audit_solution plus guards for auditing a claimed optimum: the solution
/// must be feasible with a consistent objective, and when oracle_objective
/// is supplied it must match. Throws std::invalid_argument otherwise.
TheoremAudit audit_optimal(const SortedInstance& s, const EdhrPartition& p,
                           const Solution& optimal,
                           std::optional<std::int64_t> oracle_objective = std::nullopt);

}  // namespace edhr
