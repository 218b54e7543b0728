#include "edhr/instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "arith.hpp"

namespace edhr {

void validate(const Instance& inst) {
  if (inst.size() < 2) {
    throw InvalidInstance("instance must contain at least 2 items");
  }
  if (inst.capacity < 1) {
    throw InvalidInstance("capacity must be a positive integer");
  }
  detail::int128 total_weight = 0;
  detail::int128 total_profit = 0;
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const Item& it = inst.items[j];
    if (it.profit < 1) {
      throw InvalidInstance("item " + std::to_string(j + 1) +
                            ": profit must be a positive integer");
    }
    if (it.weight < 1) {
      throw InvalidInstance("item " + std::to_string(j + 1) +
                            ": weight must be a positive integer");
    }
    if (it.weight >= inst.capacity) {
      throw InvalidInstance("item " + std::to_string(j + 1) + ": weight " +
                            std::to_string(it.weight) +
                            " must be smaller than capacity " +
                            std::to_string(inst.capacity));
    }
    total_weight += it.weight;
    total_profit += it.profit;
  }
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (total_weight > kMax || total_profit > kMax) {
    throw InvalidInstance("coefficient totals overflow 64-bit arithmetic");
  }
  if (total_weight <= inst.capacity) {
    throw InvalidInstance("trivial instance: total weight " +
                          std::to_string(static_cast<std::int64_t>(total_weight)) +
                          " does not exceed capacity " +
                          std::to_string(inst.capacity));
  }
}

bool denser(const Item& a, const Item& b) {
  return detail::mul(a.profit, b.weight) > detail::mul(b.profit, a.weight);
}

SortedInstance normalize_and_sort(Instance inst) {
  validate(inst);

  SortedInstance s;
  s.order.resize(inst.size());
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::sort(s.order.begin(), s.order.end(),
            [&inst](std::size_t lhs, std::size_t rhs) {
              const Item& a = inst.items[lhs];
              const Item& b = inst.items[rhs];
              const auto cross_a = detail::mul(a.profit, b.weight);
              const auto cross_b = detail::mul(b.profit, a.weight);
              if (cross_a != cross_b) return cross_a > cross_b;
              if (a.weight != b.weight) return a.weight < b.weight;
              return lhs < rhs;
            });

  s.prefix_weights.resize(inst.size());
  std::int64_t running = 0;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    running += inst.items[s.order[k]].weight;
    s.prefix_weights[k] = running;
  }

  // First position whose cumulative weight exceeds the capacity; exists
  // because the total weight does.
  s.break_pos = static_cast<std::size_t>(
      std::upper_bound(s.prefix_weights.begin(), s.prefix_weights.end(),
                       inst.capacity) -
      s.prefix_weights.begin());
  const std::int64_t before =
      s.break_pos == 0 ? 0 : s.prefix_weights[s.break_pos - 1];
  s.residual = inst.capacity - before;
  s.base = std::move(inst);
  return s;
}

std::int64_t dantzig_upper_bound(const SortedInstance& s) {
  std::int64_t prefix_profit = 0;
  for (std::size_t k = 0; k < s.break_pos; ++k) prefix_profit += s.at(k).profit;
  const Item& b = s.break_item();
  const auto fill = detail::mul(s.residual, b.profit) / b.weight;
  return prefix_profit + static_cast<std::int64_t>(fill);
}

std::pair<Solution, std::int64_t> break_solution_lower_bound(const SortedInstance& s) {
  Solution sol;
  sol.assignment.assign(s.size(), 0);
  std::int64_t profit = 0;
  for (std::size_t k = 0; k < s.break_pos; ++k) {
    sol.assignment[s.order[k]] = 1;
    profit += s.at(k).profit;
  }
  sol.objective = profit;
  sol.feasible = true;
  return {std::move(sol), profit};
}

Bounds compute_bounds(const SortedInstance& s) {
  Bounds b;
  b.upper = dantzig_upper_bound(s);
  b.lower = break_solution_lower_bound(s).second;
  return b;
}

Solution evaluate(const Instance& inst, const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != inst.size()) {
    throw std::invalid_argument("assignment length " +
                                std::to_string(assignment.size()) +
                                " does not match item count " +
                                std::to_string(inst.size()));
  }
  Solution sol;
  sol.assignment = assignment;
  std::int64_t weight = 0;
  for (std::size_t j = 0; j < inst.size(); ++j) {
    if (assignment[j] > 1) {
      throw std::invalid_argument("assignment entry " + std::to_string(j + 1) +
                                  " is not 0/1");
    }
    if (assignment[j]) {
      sol.objective += inst.items[j].profit;
      weight += inst.items[j].weight;
    }
  }
  sol.feasible = weight <= inst.capacity;
  return sol;
}

}  // namespace edhr
