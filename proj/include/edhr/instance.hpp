#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edhr {

/// One knapsack item. Profits and weights are positive integers; profit
/// densities are never materialized as floating point, all density
/// comparisons go through integer cross-multiplication.
struct Item {
  std::int64_t profit = 0;
  std::int64_t weight = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Raw 0-1 knapsack instance, items kept in input order.
struct Instance {
  std::vector<Item> items;
  std::int64_t capacity = 0;

  std::size_t size() const { return items.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Thrown when an instance violates the model assumptions.
class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks the model assumptions: all profits and weights >= 1, every weight
/// strictly below the capacity, total weight strictly above the capacity
/// (otherwise the all-ones solution is trivially optimal), and n >= 2.
/// Throws InvalidInstance naming the violated assumption.
void validate(const Instance& inst);

/// e_a > e_b, decided as profit_a * weight_b > profit_b * weight_a in
/// 128-bit arithmetic.
bool denser(const Item& a, const Item& b);

/// Density-ordered view of an instance with break-item analysis attached.
///
/// order[k] is the original index of the item at sorted position k. Positions
/// are 0-based; prefix_weights[k] is the cumulative weight of positions
/// 0..k. break_pos is the first position whose cumulative weight exceeds the
/// capacity, and residual = capacity - prefix_weights[break_pos - 1] lies in
/// [0, w_b).
struct SortedInstance {
  Instance base;
  std::vector<std::size_t> order;
  std::vector<std::int64_t> prefix_weights;
  std::size_t break_pos = 0;
  std::int64_t residual = 0;

  std::size_t size() const { return order.size(); }
  const Item& at(std::size_t pos) const { return base.items[order[pos]]; }
  const Item& break_item() const { return at(break_pos); }
};

/// Validates the instance and produces the density-ordered view. The order
/// is deterministic: non-increasing density, ties broken by smaller weight,
/// then by smaller original index.
SortedInstance normalize_and_sort(Instance inst);

/// Upper and lower bound pair: L <= optimum <= U, and
/// U - L <= floor(residual * p_b / w_b).
struct Bounds {
  std::int64_t upper = 0;
  std::int64_t lower = 0;
};

/// Dantzig bound: sum of profits before the break item plus the floored
/// fractional fill floor(r * p_b / w_b). Exact integer arithmetic.
std::int64_t dantzig_upper_bound(const SortedInstance& s);

/// 0/1 assignment over original item indices with its exact objective.
/// objective is always the plain profit sum of the selected items; feasible
/// records whether the weight sum fits the capacity.
struct Solution {
  std::vector<std::uint8_t> assignment;
  std::int64_t objective = 0;
  bool feasible = false;
};

/// The break solution: every item at a sorted position before the break item
/// selected, everything else zero. Returns the solution together with its
/// profit L, the classical lower bound.
std::pair<Solution, std::int64_t> break_solution_lower_bound(const SortedInstance& s);

/// Both classical bounds of the instance.
Bounds compute_bounds(const SortedInstance& s);

/// Evaluates an assignment against the instance. The assignment must have
/// one 0/1 entry per item, in original order.
Solution evaluate(const Instance& inst, const std::vector<std::uint8_t>& assignment);

}  // namespace edhr
