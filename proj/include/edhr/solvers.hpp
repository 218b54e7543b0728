#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edhr/instance.hpp"
#include "edhr/reduction.hpp"

namespace edhr {

/// Deterministic effort counters. nodes_expanded is the search-tree size
/// analog used as the speed metric throughout (wall_time is informational
/// only and the one non-deterministic field).
///
/// Per solver, nodes_expanded counts: branch-and-bound nodes entered, or DP
/// item stages processed (the exhaustive dispatcher also reports stages).
struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t branches_solved = 0;
  std::uint64_t fixed_by_reduction = 0;
  double wall_time = 0.0;  // seconds
};

enum class SolveMode { PlainBB, ConstrainedBB, Enumerate, Dp, Exhaustive };

SolveMode solve_mode_from_string(const std::string& name);
std::string to_string(SolveMode mode);

struct SolverConfig {
  SolveMode mode = SolveMode::ConstrainedBB;
  std::int64_t i = 2;
  std::uint64_t branch_cap = 10'000'000;
  std::uint64_t dp_cell_budget = 1'000'000'000;  // max n*(C+1) table cells
  std::uint64_t node_budget = 0;                 // B&B node cap, 0 = unlimited
};

/// Thrown when a dynamic program would exceed its cell budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact capacity-indexed dynamic program. Ties between optimal assignments
/// are broken toward the lexicographically smallest 0/1 vector by original
/// index. Refuses instances whose n*(C+1) table exceeds the cell budget,
/// naming the offending product.
std::pair<Solution, SearchStats> solve_dp(const Instance& inst,
                                          std::uint64_t dp_cell_budget = 1'000'000'000);

/// Enumerates all 2^n assignments (n <= 25). Returns the optimum (the
/// lexicographically smallest optimal assignment) together with every
/// optimal assignment in lexicographic order.
std::pair<Solution, std::vector<std::vector<std::uint8_t>>>
solve_exhaustive(const Instance& inst);

/// Depth-first branch and bound over sorted positions, x=1 branch first,
/// bounded by the Dantzig bound of the residual subproblem, initial
/// incumbent the break solution. Optional cardinality constraints prune
/// violating nodes (with look-ahead on the at-least side); an optional fixed
/// set forces variables. When the forced set is infeasible the returned
/// solution carries feasible = false and objective INT64_MIN. A non-zero
/// node_budget turns pathological searches into an explicit BudgetExceeded
/// refusal (strongly correlated instances grow exponentially under
/// LP-bound search).
std::pair<Solution, SearchStats> solve_branch_bound(
    const Instance& inst,
    const std::optional<CardinalityConstraints>& constraints = std::nullopt,
    const std::optional<Subproblem>& fixed = std::nullopt,
    std::uint64_t node_budget = 0);

/// The reduction pipeline. ConstrainedBB: partition -> aggregated
/// constraints -> branch and bound. Enumerate: partition -> branch family ->
/// every feasible branch solved by DP over the shared free set -> best
/// branch wins (ties to the earliest branch). Other modes are rejected.
std::pair<Solution, SearchStats> solve_edhr(const Instance& inst,
                                            const SolverConfig& cfg);

/// Mode dispatcher used by the CLI and bindings.
std::pair<Solution, SearchStats> solve(const Instance& inst, const SolverConfig& cfg);

/// Low-level 0/1 knapsack DP over an arbitrary item list (no model-assumption
/// guards): best achievable profit for every capacity 0..capacity.
std::vector<std::int64_t> dp_value_row(const std::vector<Item>& items,
                                       std::int64_t capacity,
                                       std::uint64_t dp_cell_budget = 1'000'000'000);

/// Low-level DP with reconstruction; assignment is over the given item list
/// order, ties broken toward the lexicographically smallest vector.
Solution dp_solve_items(const std::vector<Item>& items, std::int64_t capacity,
                        std::uint64_t dp_cell_budget = 1'000'000'000);

}  // namespace edhr
