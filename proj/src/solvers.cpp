#include "edhr/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "arith.hpp"

namespace edhr {
namespace {

constexpr std::int64_t kInfeasibleObjective = std::numeric_limits<std::int64_t>::min();

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_dp_budget(std::size_t n, std::int64_t capacity, std::uint64_t budget) {
  const auto cells = static_cast<std::uint64_t>(n + 1) *
                     (static_cast<std::uint64_t>(capacity) + 1);
  if (cells > budget) {
    throw BudgetExceeded("dynamic program needs n*C = " + std::to_string(cells) +
                         " cells, over the budget of " + std::to_string(budget));
  }
}

Solution infeasible_marker(std::size_t n) {
  Solution sol;
  sol.assignment.assign(n, 0);
  sol.objective = kInfeasibleObjective;
  sol.feasible = false;
  return sol;
}

// Depth-first search state for the branch-and-bound solver. Everything is
// indexed by sorted position.
struct BbSearch {
  std::size_t n = 0;
  std::vector<std::int64_t> profit, weight, prefix_profit, prefix_weight;
  std::int64_t capacity = 0;

  // Cardinality constraints, when present.
  bool has_at_least = false, has_at_most = false;
  std::vector<std::uint8_t> in_s1, in_s4;
  std::vector<std::int64_t> s1_suffix;  // s1 positions at index >= k
  std::int64_t q1 = 0, q4 = 0;

  // Variable fixing: 0 free, 1 forced one, 2 forced zero.
  std::vector<std::uint8_t> state;

  std::vector<std::uint8_t> taken, best_taken;
  std::int64_t best_value = kInfeasibleObjective;
  bool found = false;
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;

  // Dantzig bound of the residual subproblem: greedy LP fill of positions
  // k.. with the remaining capacity.
  std::int64_t suffix_dantzig(std::size_t k, std::int64_t cap) const {
    const std::int64_t base_w = k == 0 ? 0 : prefix_weight[k - 1];
    const std::int64_t base_p = k == 0 ? 0 : prefix_profit[k - 1];
    const auto split = static_cast<std::size_t>(
        std::upper_bound(prefix_weight.begin() + static_cast<std::ptrdiff_t>(k),
                         prefix_weight.end(), base_w + cap) -
        prefix_weight.begin());
    const std::int64_t full =
        (split == 0 ? 0 : prefix_profit[split - 1]) - base_p;
    if (split == n) return full;
    const std::int64_t rem =
        cap - ((split == 0 ? 0 : prefix_weight[split - 1]) - base_w);
    return full + static_cast<std::int64_t>(detail::mul(rem, profit[split]) /
                                            weight[split]);
  }

  void dfs(std::size_t k, std::int64_t cap, std::int64_t prof,
           std::int64_t ones1, std::int64_t ones4) {
    ++nodes;
    if (node_budget != 0 && nodes > node_budget) {
      throw BudgetExceeded("branch and bound exceeded its node budget of " +
                           std::to_string(node_budget));
    }
    if (k == n) {
      if (prof > best_value) {
        best_value = prof;
        best_taken = taken;
        found = true;
      }
      return;
    }
    if (prof + suffix_dantzig(k, cap) <= best_value) return;

    if (state[k] != 2 && weight[k] <= cap &&
        (!has_at_most || !in_s4[k] || ones4 + 1 <= q4)) {
      taken[k] = 1;
      dfs(k + 1, cap - weight[k], prof + profit[k], ones1 + in_s1[k],
          ones4 + in_s4[k]);
    }
    if (state[k] != 1 &&
        (!has_at_least || !in_s1[k] || ones1 + s1_suffix[k + 1] >= q1)) {
      taken[k] = 0;
      dfs(k + 1, cap, prof, ones1, ones4);
    }
  }
};

}  // namespace

std::vector<std::int64_t> dp_value_row(const std::vector<Item>& items,
                                       std::int64_t capacity,
                                       std::uint64_t dp_cell_budget) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  check_dp_budget(items.size(), capacity, dp_cell_budget);
  std::vector<std::int64_t> row(static_cast<std::size_t>(capacity) + 1, 0);
  for (const Item& it : items) {
    for (std::int64_t c = capacity; c >= it.weight; --c) {
      row[static_cast<std::size_t>(c)] =
          std::max(row[static_cast<std::size_t>(c)],
                   row[static_cast<std::size_t>(c - it.weight)] + it.profit);
    }
  }
  return row;
}

Solution dp_solve_items(const std::vector<Item>& items, std::int64_t capacity,
                        std::uint64_t dp_cell_budget) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  check_dp_budget(items.size(), capacity, dp_cell_budget);
  const std::size_t n = items.size();
  const auto width = static_cast<std::size_t>(capacity) + 1;

  // Suffix table, items processed back to front so that the forward
  // reconstruction can prefer x_j = 0 whenever leaving the item still
  // attains the optimum (lexicographically smallest optimal vector).
  std::vector<std::int64_t> row(width, 0);
  std::vector<bool> take(n * width, false);
  for (std::size_t j = n; j-- > 0;) {
    const Item& it = items[j];
    for (std::int64_t c = capacity; c >= it.weight; --c) {
      const auto uc = static_cast<std::size_t>(c);
      const std::int64_t with =
          row[static_cast<std::size_t>(c - it.weight)] + it.profit;
      if (with > row[uc]) {
        row[uc] = with;
        take[j * width + uc] = true;
      }
    }
  }

  Solution sol;
  sol.assignment.assign(n, 0);
  std::int64_t c = capacity;
  for (std::size_t j = 0; j < n; ++j) {
    if (take[j * width + static_cast<std::size_t>(c)]) {
      sol.assignment[j] = 1;
      sol.objective += items[j].profit;
      c -= items[j].weight;
    }
  }
  sol.feasible = true;
  return sol;
}

std::pair<Solution, SearchStats> solve_dp(const Instance& inst,
                                          std::uint64_t dp_cell_budget) {
  Stopwatch timer;
  validate(inst);
  Solution sol = dp_solve_items(inst.items, inst.capacity, dp_cell_budget);
  SearchStats stats;
  stats.nodes_expanded = inst.size();
  stats.branches_solved = 1;
  stats.wall_time = timer.seconds();
  return {std::move(sol), stats};
}

std::pair<Solution, std::vector<std::vector<std::uint8_t>>>
solve_exhaustive(const Instance& inst) {
  validate(inst);
  if (inst.size() > 25) {
    throw std::invalid_argument("exhaustive enumeration is limited to 25 items, got " +
                                std::to_string(inst.size()));
  }

  std::int64_t best = -1;
  std::vector<std::vector<std::uint8_t>> optima;
  std::vector<std::uint8_t> current(inst.size(), 0);

  // x_j = 0 explored first, so assignments are visited in lexicographic
  // order and optima come out sorted.
  auto walk = [&](auto&& self, std::size_t j, std::int64_t w, std::int64_t p) -> void {
    if (j == inst.size()) {
      if (p > best) {
        best = p;
        optima.clear();
      }
      if (p == best) optima.push_back(current);
      return;
    }
    current[j] = 0;
    self(self, j + 1, w, p);
    if (w + inst.items[j].weight <= inst.capacity) {
      current[j] = 1;
      self(self, j + 1, w + inst.items[j].weight, p + inst.items[j].profit);
      current[j] = 0;
    }
  };
  walk(walk, 0, 0, 0);

  Solution sol;
  sol.assignment = optima.front();
  sol.objective = best;
  sol.feasible = true;
  return {std::move(sol), std::move(optima)};
}

std::pair<Solution, SearchStats> solve_branch_bound(
    const Instance& inst, const std::optional<CardinalityConstraints>& constraints,
    const std::optional<Subproblem>& fixed, std::uint64_t node_budget) {
  Stopwatch timer;
  const SortedInstance s = normalize_and_sort(inst);
  const std::size_t n = s.size();

  BbSearch bb;
  bb.n = n;
  bb.node_budget = node_budget;
  bb.capacity = inst.capacity;
  bb.profit.resize(n);
  bb.weight.resize(n);
  bb.prefix_profit.resize(n);
  bb.prefix_weight = s.prefix_weights;
  std::int64_t running_profit = 0;
  for (std::size_t k = 0; k < n; ++k) {
    bb.profit[k] = s.at(k).profit;
    bb.weight[k] = s.at(k).weight;
    running_profit += bb.profit[k];
    bb.prefix_profit[k] = running_profit;
  }

  bb.in_s1.assign(n, 0);
  bb.in_s4.assign(n, 0);
  bb.s1_suffix.assign(n + 1, 0);
  SearchStats stats;
  if (constraints) {
    if (constraints->at_least) {
      bb.has_at_least = true;
      bb.q1 = constraints->at_least->bound;
      for (std::size_t pos : constraints->at_least->positions) bb.in_s1[pos] = 1;
      if (bb.q1 == static_cast<std::int64_t>(constraints->at_least->positions.size())) {
        stats.fixed_by_reduction += constraints->at_least->positions.size();
      }
    }
    if (constraints->at_most) {
      bb.has_at_most = true;
      bb.q4 = constraints->at_most->bound;
      for (std::size_t pos : constraints->at_most->positions) bb.in_s4[pos] = 1;
      if (bb.q4 == 0) stats.fixed_by_reduction += constraints->at_most->positions.size();
    }
    for (std::size_t k = n; k-- > 0;) {
      bb.s1_suffix[k] = bb.s1_suffix[k + 1] + bb.in_s1[k];
    }
  }

  bb.state.assign(n, 0);
  if (fixed) {
    for (std::size_t pos : fixed->fixed_one) bb.state[pos] = 1;
    for (std::size_t pos : fixed->fixed_zero) bb.state[pos] = 2;
    stats.fixed_by_reduction += fixed->fixed_one.size() + fixed->fixed_zero.size();
  }

  // Break solution as the initial incumbent, unless fixings contradict it.
  {
    bool consistent = true;
    std::int64_t ones1 = 0, ones4 = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool selected = k < s.break_pos;
      if ((selected && bb.state[k] == 2) || (!selected && bb.state[k] == 1)) {
        consistent = false;
        break;
      }
      if (selected) {
        ones1 += bb.in_s1[k];
        ones4 += bb.in_s4[k];
      }
    }
    if (consistent && bb.has_at_least && ones1 < bb.q1) consistent = false;
    if (consistent && bb.has_at_most && ones4 > bb.q4) consistent = false;
    if (consistent) {
      bb.best_taken.assign(n, 0);
      std::int64_t lower = 0;
      for (std::size_t k = 0; k < s.break_pos; ++k) {
        bb.best_taken[k] = 1;
        lower += bb.profit[k];
      }
      bb.best_value = lower;
      bb.found = true;
    }
  }

  bb.taken.assign(n, 0);
  bb.dfs(0, inst.capacity, 0, 0, 0);

  stats.nodes_expanded = bb.nodes;
  stats.branches_solved = 1;
  stats.wall_time = timer.seconds();

  if (!bb.found) {
    return {infeasible_marker(n), stats};
  }
  Solution sol;
  sol.assignment.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (bb.best_taken[k]) sol.assignment[s.order[k]] = 1;
  }
  sol.objective = bb.best_value;
  sol.feasible = true;
  return {std::move(sol), stats};
}

std::pair<Solution, SearchStats> solve_edhr(const Instance& inst,
                                            const SolverConfig& cfg) {
  if (cfg.mode == SolveMode::ConstrainedBB) {
    Stopwatch timer;
    const SortedInstance s = normalize_and_sort(inst);
    const EdhrPartition part = edhr_partition(s, cfg.i);
    const CardinalityConstraints constraints = cardinality_constraints(part);
    auto [sol, stats] = solve_branch_bound(inst, constraints, std::nullopt, cfg.node_budget);
    stats.wall_time = timer.seconds();
    return {std::move(sol), stats};
  }
  if (cfg.mode != SolveMode::Enumerate) {
    throw std::invalid_argument("solve_edhr handles constrained-bb and enumerate only");
  }

  Stopwatch timer;
  const SortedInstance s = normalize_and_sort(inst);
  const std::size_t n = s.size();
  const EdhrPartition part = edhr_partition(s, cfg.i);
  const EnumerationPlan plan = enumeration_plan(part, cfg.branch_cap);

  std::vector<std::size_t> free_positions;
  free_positions.reserve(part.n2.size() + part.n3.size() + part.n5.size());
  for (const auto* set : {&part.n2, &part.n3, &part.n5}) {
    free_positions.insert(free_positions.end(), set->begin(), set->end());
  }
  std::sort(free_positions.begin(), free_positions.end());
  std::vector<Item> free_items;
  free_items.reserve(free_positions.size());
  for (std::size_t pos : free_positions) free_items.push_back(s.at(pos));

  // Every branch solves the same free set at a different capacity, so one
  // value row over the full capacity covers the whole family.
  const std::vector<std::int64_t> value_row =
      dp_value_row(free_items, inst.capacity, cfg.dp_cell_budget);

  std::int64_t n1_weight = 0, n1_profit = 0;
  for (std::size_t pos : part.n1) {
    n1_weight += s.at(pos).weight;
    n1_profit += s.at(pos).profit;
  }

  SearchStats stats;
  stats.fixed_by_reduction = part.n1.size() + part.n4.size();
  std::int64_t best = kInfeasibleObjective;
  std::size_t best_branch = 0;
  for (std::size_t idx = 0; idx < plan.branches.size(); ++idx) {
    const Branch& br = plan.branches[idx];
    std::int64_t fixed_weight = n1_weight, fixed_profit = n1_profit;
    for (std::size_t pos : br.excluded) {
      fixed_weight -= s.at(pos).weight;
      fixed_profit -= s.at(pos).profit;
    }
    for (std::size_t pos : br.included) {
      fixed_weight += s.at(pos).weight;
      fixed_profit += s.at(pos).profit;
    }
    const std::int64_t reduced = inst.capacity - fixed_weight;
    if (reduced < 0) continue;  // infeasible forced set, dropped before DP
    ++stats.branches_solved;
    const std::int64_t objective =
        fixed_profit + value_row[static_cast<std::size_t>(reduced)];
    if (objective > best) {
      best = objective;
      best_branch = idx;
    }
  }
  stats.nodes_expanded += free_items.size();

  const Subproblem chosen = assemble_branch(s, part, plan.branches[best_branch]);
  const Solution free_solution =
      dp_solve_items(free_items, chosen.reduced_capacity, cfg.dp_cell_budget);
  stats.nodes_expanded += free_items.size();

  Solution sol;
  sol.assignment.assign(n, 0);
  for (std::size_t pos : chosen.fixed_one) sol.assignment[s.order[pos]] = 1;
  for (std::size_t t = 0; t < free_positions.size(); ++t) {
    if (free_solution.assignment[t]) {
      sol.assignment[s.order[free_positions[t]]] = 1;
    }
  }
  sol.objective = best;
  sol.feasible = true;
  stats.wall_time = timer.seconds();
  return {std::move(sol), stats};
}

std::pair<Solution, SearchStats> solve(const Instance& inst, const SolverConfig& cfg) {
  switch (cfg.mode) {
    case SolveMode::PlainBB:
      return solve_branch_bound(inst, std::nullopt, std::nullopt, cfg.node_budget);
    case SolveMode::ConstrainedBB:
    case SolveMode::Enumerate:
      return solve_edhr(inst, cfg);
    case SolveMode::Dp:
      return solve_dp(inst, cfg.dp_cell_budget);
    case SolveMode::Exhaustive: {
      Stopwatch timer;
      auto [sol, optima] = solve_exhaustive(inst);
      SearchStats stats;
      stats.nodes_expanded = inst.size();
      stats.branches_solved = optima.size();
      stats.wall_time = timer.seconds();
      return {std::move(sol), stats};
    }
  }
  throw std::invalid_argument("unknown solve mode");
}

SolveMode solve_mode_from_string(const std::string& name) {
  if (name == "plain-bb") return SolveMode::PlainBB;
  if (name == "constrained-bb") return SolveMode::ConstrainedBB;
  if (name == "enumerate") return SolveMode::Enumerate;
  if (name == "dp") return SolveMode::Dp;
  if (name == "exhaustive") return SolveMode::Exhaustive;
  throw std::invalid_argument("unknown solve mode: " + name);
}

std::string to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::PlainBB: return "plain-bb";
    case SolveMode::ConstrainedBB: return "constrained-bb";
    case SolveMode::Enumerate: return "enumerate";
    case SolveMode::Dp: return "dp";
    case SolveMode::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

}  // namespace edhr
