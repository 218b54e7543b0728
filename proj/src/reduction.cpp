#include "edhr/reduction.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "arith.hpp"

namespace edhr {
namespace {

// All subsets of `pool` of size <= max_size, ordered by size and then
// lexicographically by position tuple. pool is ascending.
std::vector<std::vector<std::size_t>> bounded_subsets(
    const std::vector<std::size_t>& pool, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  out.push_back({});
  std::vector<std::size_t> current;
  for (std::size_t size = 1; size <= std::min(max_size, pool.size()); ++size) {
    // Iterative combination walk over index vector c[0..size-1].
    std::vector<std::size_t> c(size);
    for (std::size_t t = 0; t < size; ++t) c[t] = t;
    while (true) {
      current.clear();
      for (std::size_t idx : c) current.push_back(pool[idx]);
      out.push_back(current);
      // Advance to the next combination.
      std::size_t t = size;
      while (t > 0 && c[t - 1] == pool.size() - size + (t - 1)) --t;
      if (t == 0) break;
      ++c[t - 1];
      for (std::size_t u = t; u < size; ++u) c[u] = c[u - 1] + 1;
    }
  }
  return out;
}

// sum_{j=0..i-1} C(n, j), saturating at 2^64-1.
std::uint64_t bounded_subset_count(std::uint64_t n, std::int64_t i) {
  const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (std::int64_t j = 0; j < i; ++j) {
    if (j > 0) {
      if (static_cast<std::uint64_t>(j) > n) break;
      // binom = binom * (n - j + 1) / j, with overflow saturation.
      const std::uint64_t num = n - static_cast<std::uint64_t>(j) + 1;
      if (binom > kMax / num) return kMax;
      binom = binom * num / static_cast<std::uint64_t>(j);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

}  // namespace

EdhrPartition edhr_partition(const SortedInstance& s, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("reduction parameter i must be >= 1");

  EdhrPartition part;
  part.i = i;
  const Item& b = s.break_item();
  const std::int64_t r = s.residual;
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const Item& it = s.at(pos);
    if (denser(it, b)) {
      // i*p_j*w_b - p_b*(r + i*w_j)
      const auto q = detail::mul3(i, it.profit, b.weight) -
                     detail::mul(b.profit, r) - detail::mul3(i, b.profit, it.weight);
      (q > 0 ? part.n1 : part.n2).push_back(pos);
    } else if (detail::mul(i, it.weight) <= r) {
      part.n5.push_back(pos);
    } else {
      // i*p_j*w_b + p_b*(r - i*w_j)
      const auto q = detail::mul3(i, it.profit, b.weight) +
                     detail::mul(b.profit, r) - detail::mul3(i, b.profit, it.weight);
      (q >= 0 ? part.n3 : part.n4).push_back(pos);
    }
  }
  return part;
}

Subproblem dhr_partition(const SortedInstance& s) {
  Subproblem sub;
  const Item& b = s.break_item();
  const std::int64_t r = s.residual;
  std::int64_t fixed_weight = 0;
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const Item& it = s.at(pos);
    if (denser(it, b) &&
        detail::mul(it.profit, b.weight) - detail::mul(b.profit, r + it.weight) > 0) {
      sub.fixed_one.push_back(pos);
      fixed_weight += it.weight;
    } else if (!denser(it, b) && it.weight > r &&
               detail::mul(it.profit, b.weight) + detail::mul(b.profit, r - it.weight) < 0) {
      sub.fixed_zero.push_back(pos);
    } else {
      sub.free_positions.push_back(pos);
    }
  }
  sub.reduced_capacity = s.base.capacity - fixed_weight;
  sub.feasible = sub.reduced_capacity >= 0;
  return sub;
}

bool fixing_sets_agree_with_dhr(const SortedInstance& s) {
  const EdhrPartition one = edhr_partition(s, 1);
  const Subproblem dhr = dhr_partition(s);
  return one.n1 == dhr.fixed_one && one.n4 == dhr.fixed_zero;
}

CardinalityConstraints cardinality_constraints(const EdhrPartition& p) {
  CardinalityConstraints out;
  const auto slack = p.i - 1;
  const auto at_least_bound =
      static_cast<std::int64_t>(p.n1.size()) - slack;
  if (!p.n1.empty() && at_least_bound > 0) {
    out.at_least = CardinalityConstraint{p.n1, at_least_bound};
  }
  if (!p.n4.empty() && slack < static_cast<std::int64_t>(p.n4.size())) {
    out.at_most = CardinalityConstraint{p.n4, slack};
  }
  return out;
}

std::uint64_t enumeration_branch_count(const EdhrPartition& p) {
  const std::uint64_t from_n1 = bounded_subset_count(p.n1.size(), p.i);
  const std::uint64_t from_n4 = bounded_subset_count(p.n4.size(), p.i);
  if (from_n4 != 0 &&
      from_n1 > std::numeric_limits<std::uint64_t>::max() / from_n4) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return from_n1 * from_n4;
}

EnumerationPlan enumeration_plan(const EdhrPartition& p, std::uint64_t branch_cap) {
  const std::uint64_t count = enumeration_branch_count(p);
  if (count > branch_cap) {
    throw EnumerationBlowup("enumeration blow-up: " + std::to_string(count) +
                            " branches exceed cap " + std::to_string(branch_cap));
  }
  const auto max_size = static_cast<std::size_t>(p.i - 1);
  const auto excluded_subsets = bounded_subsets(p.n1, max_size);
  const auto included_subsets = bounded_subsets(p.n4, max_size);

  EnumerationPlan plan;
  plan.branches.reserve(excluded_subsets.size() * included_subsets.size());
  for (const auto& included : included_subsets) {
    for (const auto& excluded : excluded_subsets) {
      plan.branches.push_back(Branch{excluded, included});
    }
  }
  return plan;
}

Subproblem assemble_branch(const SortedInstance& s, const EdhrPartition& p,
                           const Branch& branch) {
  Subproblem sub;
  std::vector<std::uint8_t> excluded_mask(s.size(), 0);
  for (std::size_t pos : branch.excluded) excluded_mask[pos] = 1;
  std::vector<std::uint8_t> included_mask(s.size(), 0);
  for (std::size_t pos : branch.included) included_mask[pos] = 1;

  for (std::size_t pos : p.n1) {
    (excluded_mask[pos] ? sub.fixed_zero : sub.fixed_one).push_back(pos);
  }
  for (std::size_t pos : p.n4) {
    (included_mask[pos] ? sub.fixed_one : sub.fixed_zero).push_back(pos);
  }
  std::sort(sub.fixed_one.begin(), sub.fixed_one.end());
  std::sort(sub.fixed_zero.begin(), sub.fixed_zero.end());

  sub.free_positions.reserve(p.n2.size() + p.n3.size() + p.n5.size());
  for (const auto* set : {&p.n2, &p.n3, &p.n5}) {
    sub.free_positions.insert(sub.free_positions.end(), set->begin(), set->end());
  }
  std::sort(sub.free_positions.begin(), sub.free_positions.end());

  std::int64_t fixed_weight = 0;
  for (std::size_t pos : sub.fixed_one) fixed_weight += s.at(pos).weight;
  sub.reduced_capacity = s.base.capacity - fixed_weight;
  sub.feasible = sub.reduced_capacity >= 0;
  return sub;
}

TheoremAudit audit_solution(const SortedInstance& s, const EdhrPartition& p,
                            const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != s.size()) {
    throw std::invalid_argument("assignment length does not match instance size");
  }
  TheoremAudit audit;
  for (std::size_t pos : p.n1) {
    if (!assignment[s.order[pos]]) audit.d1.push_back(pos);
  }
  for (std::size_t pos : p.n4) {
    if (assignment[s.order[pos]]) audit.d2.push_back(pos);
  }
  for (std::size_t pos : p.n5) {
    if (assignment[s.order[pos]]) audit.d3.push_back(pos);
  }
  return audit;
}

TheoremAudit audit_optimal(const SortedInstance& s, const EdhrPartition& p,
                           const Solution& optimal,
                           std::optional<std::int64_t> oracle_objective) {
  const Solution checked = evaluate(s.base, optimal.assignment);
  if (!checked.feasible) {
    throw std::invalid_argument("claimed optimum is infeasible");
  }
  if (checked.objective != optimal.objective) {
    throw std::invalid_argument("claimed objective " +
                                std::to_string(optimal.objective) +
                                " does not match recomputed " +
                                std::to_string(checked.objective));
  }
  if (oracle_objective && *oracle_objective != checked.objective) {
    throw std::invalid_argument("claimed optimum " +
                                std::to_string(checked.objective) +
                                " differs from oracle optimum " +
                                std::to_string(*oracle_objective));
  }
  return audit_solution(s, p, optimal.assignment);
}

}  // namespace edhr
