#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edhr/bench.hpp"
#include "edhr/generators.hpp"
#include "edhr/instance.hpp"
#include "edhr/reduction.hpp"
#include "edhr/solvers.hpp"

namespace {

edhr::Instance load(const std::string& path, bool jooken) {
  return jooken ? edhr::read_jooken(std::filesystem::path(path))
                : edhr::read_instance(std::filesystem::path(path));
}

void print_positions(std::ostream& out, const char* label,
                     const std::vector<std::size_t>& positions,
                     const edhr::SortedInstance& s) {
  out << label << " (" << positions.size() << ")";
  if (!positions.empty() && positions.size() <= 24) {
    out << ":";
    std::vector<std::size_t> original;
    for (std::size_t pos : positions) original.push_back(s.order[pos] + 1);
    std::sort(original.begin(), original.end());
    for (std::size_t idx : original) out << " " << idx;
  }
  out << "\n";
}

void write_text_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact 0-1 knapsack toolkit built around the extended "
               "Dembo-Hammer reduction"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  std::string gen_family = "UC";
  std::size_t gen_n = 200;
  std::int64_t gen_range = 1000;
  std::uint64_t gen_seed = 1;
  bool gen_force_break = true;
  std::string gen_out;
  gen->add_option("--family", gen_family, "UC, WC, SC, IC or ASC")->capture_default_str();
  gen->add_option("--n", gen_n, "item count")->capture_default_str();
  gen->add_option("--range", gen_range, "coefficient range R")->capture_default_str();
  gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
  gen->add_flag("--force-break,!--no-force-break", gen_force_break,
                "apply the break-item convention (b = n/2, w_b = R/5, C = prefix-1)");
  gen->add_option("--out", gen_out, "output file")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Print the reduction partition and fixings");
  std::string reduce_in;
  std::int64_t reduce_i = 2;
  bool reduce_jooken = false;
  reduce->add_option("input", reduce_in, "instance file")->required();
  reduce->add_option("--i", reduce_i, "reduction parameter")->capture_default_str();
  reduce->add_flag("--jooken", reduce_jooken, "read the Jooken layout");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance exactly");
  std::string solve_in;
  std::string solve_mode = "constrained-bb";
  std::int64_t solve_i = 2;
  std::uint64_t solve_branch_cap = 10'000'000;
  std::uint64_t solve_node_budget = 0;
  bool solve_jooken = false;
  bool solve_print_assignment = false;
  solve_cmd->add_option("input", solve_in, "instance file")->required();
  solve_cmd->add_option("--mode", solve_mode,
                        "plain-bb, constrained-bb, enumerate, dp or exhaustive")
      ->capture_default_str();
  solve_cmd->add_option("--i", solve_i, "reduction parameter")->capture_default_str();
  solve_cmd->add_option("--branch-cap", solve_branch_cap, "enumeration branch cap")
      ->capture_default_str();
  solve_cmd->add_option("--node-budget", solve_node_budget,
                        "abort branch and bound beyond this many nodes (0 = unlimited)")
      ->capture_default_str();
  solve_cmd->add_flag("--jooken", solve_jooken, "read the Jooken layout");
  solve_cmd->add_flag("--print-assignment", solve_print_assignment,
                      "also print the 0/1 assignment");

  // bench
  auto* bench = app.add_subcommand("bench", "Compare plain vs constrained search");
  std::vector<std::string> bench_families = {"UC", "WC", "SC", "IC", "ASC"};
  std::vector<std::size_t> bench_sizes = {200, 400, 600, 800, 1000,
                                          1200, 1400, 1600, 1800, 2000};
  std::vector<std::uint64_t> bench_seeds = {1};
  std::int64_t bench_i = 2;
  std::int64_t bench_range = 1000;
  std::uint64_t bench_node_budget = 50'000'000;
  std::string bench_out;
  std::string bench_format = "csv";
  bench->add_option("--families", bench_families, "families to run")
      ->delimiter(',')->capture_default_str();
  bench->add_option("--sizes", bench_sizes, "instance sizes")
      ->delimiter(',')->capture_default_str();
  bench->add_option("--seeds", bench_seeds, "seeds per (family, size)")
      ->delimiter(',')->capture_default_str();
  bench->add_option("--i", bench_i, "reduction parameter")->capture_default_str();
  bench->add_option("--range", bench_range, "coefficient range R")->capture_default_str();
  bench->add_option("--node-budget", bench_node_budget,
                    "per-solve node cap; rows that exceed it are reported as "
                    "errors (0 = unlimited)")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "report file ('-' for stdout)");
  bench->add_option("--format", bench_format, "csv or markdown")->capture_default_str();

  // export-lp
  auto* export_cmd = app.add_subcommand("export-lp", "Write the instance as an LP file");
  std::string export_in;
  std::int64_t export_i = 2;
  bool export_with_constraints = false;
  bool export_jooken = false;
  std::string export_out;
  export_cmd->add_option("input", export_in, "instance file")->required();
  export_cmd->add_option("--i", export_i, "reduction parameter")->capture_default_str();
  export_cmd->add_flag("--with-constraints", export_with_constraints,
                       "append the aggregated cardinality rows");
  export_cmd->add_flag("--jooken", export_jooken, "read the Jooken layout");
  export_cmd->add_option("--out", export_out, "output file ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    edhr::GeneratorConfig cfg;
    cfg.family = edhr::family_from_string(gen_family);
    cfg.n = gen_n;
    cfg.range = gen_range;
    cfg.seed = gen_seed;
    cfg.force_break = gen_force_break;
    const edhr::Instance inst = edhr::generate(cfg);
    edhr::write_instance(inst, std::filesystem::path(gen_out));
    const edhr::SortedInstance s = edhr::normalize_and_sort(inst);
    std::cout << gen_out << ": " << inst.size() << " items, capacity "
              << inst.capacity << ", break position " << (s.break_pos + 1)
              << ", residual " << s.residual << "\n";
    if (cfg.force_break && !edhr::density_order_intact(inst)) {
      std::cerr << "note: the break-item override broke the density order for "
                   "this seed; the break position moves under re-sorting\n";
    }
    return 0;
  }

  if (reduce->parsed()) {
    const edhr::Instance inst = load(reduce_in, reduce_jooken);
    const edhr::SortedInstance s = edhr::normalize_and_sort(inst);
    const edhr::Bounds bounds = edhr::compute_bounds(s);
    std::cout << "items " << inst.size() << ", capacity " << inst.capacity
              << ", break position " << (s.break_pos + 1) << " (item "
              << (s.order[s.break_pos] + 1) << "), residual " << s.residual
              << "\n";
    std::cout << "bounds: L=" << bounds.lower << " U=" << bounds.upper << "\n";

    const edhr::EdhrPartition part = edhr::edhr_partition(s, reduce_i);
    std::cout << "i=" << reduce_i << " partition: |N1|=" << part.n1.size()
              << " |N2|=" << part.n2.size() << " |N3|=" << part.n3.size()
              << " |N4|=" << part.n4.size() << " |N5|=" << part.n5.size() << "\n";
    const edhr::CardinalityConstraints cc = edhr::cardinality_constraints(part);
    if (cc.at_least) {
      std::cout << "at-least: sum over " << cc.at_least->positions.size()
                << " items >= " << cc.at_least->bound << "\n";
    }
    if (cc.at_most) {
      std::cout << "at-most: sum over " << cc.at_most->positions.size()
                << " items <= " << cc.at_most->bound << "\n";
    }
    if (!cc.at_least && !cc.at_most) {
      std::cout << "no effective cardinality constraints at i=" << reduce_i << "\n";
    }
    std::cout << "branch family size: " << edhr::enumeration_branch_count(part)
              << "\n";

    const edhr::Subproblem dhr = edhr::dhr_partition(s);
    print_positions(std::cout, "fixed to one", dhr.fixed_one, s);
    print_positions(std::cout, "fixed to zero", dhr.fixed_zero, s);
    std::cout << "free items " << dhr.free_positions.size()
              << ", reduced capacity " << dhr.reduced_capacity << "\n";
    return 0;
  }

  if (solve_cmd->parsed()) {
    const edhr::Instance inst = load(solve_in, solve_jooken);
    edhr::SolverConfig cfg;
    cfg.mode = edhr::solve_mode_from_string(solve_mode);
    cfg.i = solve_i;
    cfg.branch_cap = solve_branch_cap;
    cfg.node_budget = solve_node_budget;
    const auto [sol, stats] = edhr::solve(inst, cfg);
    std::cout << "mode: " << edhr::to_string(cfg.mode);
    if (cfg.mode == edhr::SolveMode::ConstrainedBB ||
        cfg.mode == edhr::SolveMode::Enumerate) {
      std::cout << " (i=" << cfg.i << ")";
    }
    std::cout << "\n";
    if (!sol.feasible) {
      std::cout << "infeasible\n";
    } else {
      std::cout << "objective: " << sol.objective << "\n";
    }
    std::cout << "nodes expanded: " << stats.nodes_expanded << "\n";
    std::cout << "branches solved: " << stats.branches_solved << "\n";
    std::cout << "fixed by reduction: " << stats.fixed_by_reduction << "\n";
    std::cout << "wall time: " << stats.wall_time << "s\n";
    if (solve_print_assignment && sol.feasible) {
      std::cout << "assignment:";
      for (std::uint8_t x : sol.assignment) std::cout << " " << int(x);
      std::cout << "\n";
    }
    return 0;
  }

  if (bench->parsed()) {
    std::vector<edhr::Family> families;
    for (const std::string& name : bench_families) {
      families.push_back(edhr::family_from_string(name));
    }
    const edhr::BenchResult result =
        edhr::run_bench(families, bench_sizes, bench_seeds, bench_i, bench_range,
                        bench_node_budget);
    for (const std::string& error : result.errors) {
      std::cerr << "row failed: " << error << "\n";
    }
    write_text_output(bench_out,
                      edhr::emit_report(result.rows,
                                        edhr::report_format_from_string(bench_format)));
    return result.errors.empty() ? 0 : 2;
  }

  if (export_cmd->parsed()) {
    const edhr::Instance inst = load(export_in, export_jooken);
    std::string text;
    if (export_with_constraints) {
      const edhr::SortedInstance s = edhr::normalize_and_sort(inst);
      const edhr::CardinalityConstraints cc =
          edhr::cardinality_constraints(edhr::edhr_partition(s, export_i));
      text = edhr::export_lp(s, cc);
    } else {
      text = edhr::export_lp(inst);
    }
    write_text_output(export_out, text);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
