#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "edhr/bench.hpp"
#include "edhr/generators.hpp"
#include "edhr/instance.hpp"
#include "edhr/reduction.hpp"
#include "edhr/solvers.hpp"

namespace py = pybind11;

namespace {

edhr::Instance make_instance(const std::vector<std::int64_t>& profits,
                             const std::vector<std::int64_t>& weights,
                             std::int64_t capacity) {
  if (profits.size() != weights.size()) {
    throw std::invalid_argument("profits and weights must have the same length");
  }
  edhr::Instance inst;
  inst.capacity = capacity;
  inst.items.reserve(profits.size());
  for (std::size_t j = 0; j < profits.size(); ++j) {
    inst.items.push_back(edhr::Item{profits[j], weights[j]});
  }
  return inst;
}

edhr::SolverConfig make_config(const std::string& mode, std::int64_t i,
                               std::uint64_t branch_cap, std::uint64_t dp_cell_budget) {
  edhr::SolverConfig cfg;
  cfg.mode = edhr::solve_mode_from_string(mode);
  cfg.i = i;
  cfg.branch_cap = branch_cap;
  cfg.dp_cell_budget = dp_cell_budget;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact 0-1 knapsack toolkit built around the extended Dembo-Hammer "
            "reduction";

  py::register_exception<edhr::InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
  py::register_exception<edhr::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<edhr::EnumerationBlowup>(m, "EnumerationBlowup",
                                                  PyExc_RuntimeError);
  py::register_exception<edhr::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<edhr::Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("profits"), py::arg("weights"),
           py::arg("capacity"))
      .def_property_readonly("n", &edhr::Instance::size)
      .def_readonly("capacity", &edhr::Instance::capacity)
      .def_property_readonly("profits",
                             [](const edhr::Instance& inst) {
                               std::vector<std::int64_t> out;
                               for (const auto& it : inst.items) out.push_back(it.profit);
                               return out;
                             })
      .def_property_readonly("weights",
                             [](const edhr::Instance& inst) {
                               std::vector<std::int64_t> out;
                               for (const auto& it : inst.items) out.push_back(it.weight);
                               return out;
                             })
      .def("__eq__", [](const edhr::Instance& a, const edhr::Instance& b) { return a == b; })
      .def("__len__", &edhr::Instance::size)
      .def("__repr__", [](const edhr::Instance& inst) {
        return "Instance(n=" + std::to_string(inst.size()) +
               ", capacity=" + std::to_string(inst.capacity) + ")";
      });

  py::class_<edhr::SortedInstance>(m, "SortedInstance")
      .def_readonly("order", &edhr::SortedInstance::order)
      .def_readonly("prefix_weights", &edhr::SortedInstance::prefix_weights)
      .def_readonly("break_pos", &edhr::SortedInstance::break_pos)
      .def_readonly("residual", &edhr::SortedInstance::residual);

  py::class_<edhr::Solution>(m, "Solution")
      .def_readonly("assignment", &edhr::Solution::assignment)
      .def_readonly("objective", &edhr::Solution::objective)
      .def_readonly("feasible", &edhr::Solution::feasible);

  py::class_<edhr::SearchStats>(m, "SearchStats")
      .def_readonly("nodes_expanded", &edhr::SearchStats::nodes_expanded)
      .def_readonly("branches_solved", &edhr::SearchStats::branches_solved)
      .def_readonly("fixed_by_reduction", &edhr::SearchStats::fixed_by_reduction)
      .def_readonly("wall_time", &edhr::SearchStats::wall_time);

  py::class_<edhr::EdhrPartition>(m, "Partition")
      .def_readonly("i", &edhr::EdhrPartition::i)
      .def_readonly("n1", &edhr::EdhrPartition::n1)
      .def_readonly("n2", &edhr::EdhrPartition::n2)
      .def_readonly("n3", &edhr::EdhrPartition::n3)
      .def_readonly("n4", &edhr::EdhrPartition::n4)
      .def_readonly("n5", &edhr::EdhrPartition::n5);

  py::class_<edhr::Subproblem>(m, "Subproblem")
      .def_readonly("fixed_one", &edhr::Subproblem::fixed_one)
      .def_readonly("fixed_zero", &edhr::Subproblem::fixed_zero)
      .def_readonly("free_positions", &edhr::Subproblem::free_positions)
      .def_readonly("reduced_capacity", &edhr::Subproblem::reduced_capacity)
      .def_readonly("feasible", &edhr::Subproblem::feasible);

  m.def("normalize_and_sort", &edhr::normalize_and_sort, py::arg("instance"),
        "Density-ordered view with break position (0-based) and residual.");
  m.def("dantzig_upper_bound",
        [](const edhr::Instance& inst) {
          return edhr::dantzig_upper_bound(edhr::normalize_and_sort(inst));
        },
        py::arg("instance"));
  m.def("break_solution_lower_bound",
        [](const edhr::Instance& inst) {
          return edhr::break_solution_lower_bound(edhr::normalize_and_sort(inst)).second;
        },
        py::arg("instance"));
  m.def("evaluate", &edhr::evaluate, py::arg("instance"), py::arg("assignment"));

  m.def("dhr_partition",
        [](const edhr::Instance& inst) {
          return edhr::dhr_partition(edhr::normalize_and_sort(inst));
        },
        py::arg("instance"),
        "Classical fixing; positions refer to the sorted order.");
  m.def("edhr_partition",
        [](const edhr::Instance& inst, std::int64_t i) {
          return edhr::edhr_partition(edhr::normalize_and_sort(inst), i);
        },
        py::arg("instance"), py::arg("i"),
        "Five-set partition; positions refer to the sorted order.");

  m.def("solve",
        [](const edhr::Instance& inst, const std::string& mode, std::int64_t i,
           std::uint64_t branch_cap, std::uint64_t dp_cell_budget) {
          return edhr::solve(inst, make_config(mode, i, branch_cap, dp_cell_budget));
        },
        py::arg("instance"), py::arg("mode") = "constrained-bb", py::arg("i") = 2,
        py::arg("branch_cap") = 10'000'000,
        py::arg("dp_cell_budget") = 1'000'000'000,
        "Returns (Solution, SearchStats). Modes: plain-bb, constrained-bb, "
        "enumerate, dp, exhaustive.");
  m.def("solve_exhaustive",
        [](const edhr::Instance& inst) { return edhr::solve_exhaustive(inst); },
        py::arg("instance"),
        "Returns (Solution, list of all optimal assignments).");

  m.def("generate",
        [](const std::string& family, std::size_t n, std::int64_t range,
           std::uint64_t seed, bool force_break) {
          edhr::GeneratorConfig cfg;
          cfg.family = edhr::family_from_string(family);
          cfg.n = n;
          cfg.range = range;
          cfg.seed = seed;
          cfg.force_break = force_break;
          return edhr::generate(cfg);
        },
        py::arg("family"), py::arg("n"), py::arg("range") = 1000, py::arg("seed") = 0,
        py::arg("force_break") = true);
  m.def("make_adversary",
        [](std::int64_t m_param, std::int64_t r) {
          return edhr::make_adversary({m_param, r});
        },
        py::arg("m"), py::arg("r"));
  m.def("density_order_intact", &edhr::density_order_intact, py::arg("instance"));

  m.def("read_instance",
        [](const std::filesystem::path& path) { return edhr::read_instance(path); },
        py::arg("path"));
  m.def("write_instance",
        [](const edhr::Instance& inst, const std::filesystem::path& path) {
          edhr::write_instance(inst, path);
        },
        py::arg("instance"), py::arg("path"));
  m.def("read_jooken",
        [](const std::filesystem::path& path) { return edhr::read_jooken(path); },
        py::arg("path"));
  m.def("write_jooken",
        [](const edhr::Instance& inst, const std::filesystem::path& path) {
          edhr::write_jooken(inst, path);
        },
        py::arg("instance"), py::arg("path"));

  m.def("export_lp",
        [](const edhr::Instance& inst, std::optional<std::int64_t> i) {
          if (!i) return edhr::export_lp(inst);
          const edhr::SortedInstance s = edhr::normalize_and_sort(inst);
          return edhr::export_lp(
              s, edhr::cardinality_constraints(edhr::edhr_partition(s, *i)));
        },
        py::arg("instance"), py::arg("i") = std::nullopt,
        "LP text; pass i to append the aggregated cardinality rows.");

  py::class_<edhr::BenchRow>(m, "BenchRow")
      .def_readonly("instance_name", &edhr::BenchRow::instance_name)
      .def_readonly("family", &edhr::BenchRow::family)
      .def_readonly("n", &edhr::BenchRow::n)
      .def_readonly("i", &edhr::BenchRow::i)
      .def_readonly("obj_base", &edhr::BenchRow::obj_base)
      .def_readonly("nodes_base", &edhr::BenchRow::nodes_base)
      .def_readonly("obj_edhr", &edhr::BenchRow::obj_edhr)
      .def_readonly("nodes_edhr", &edhr::BenchRow::nodes_edhr)
      .def_readonly("rate", &edhr::BenchRow::rate)
      .def_readonly("n_i1", &edhr::BenchRow::n_i1)
      .def_readonly("n_i4", &edhr::BenchRow::n_i4);

  m.def("run_bench",
        [](const std::vector<std::string>& families,
           const std::vector<std::size_t>& sizes,
           const std::vector<std::uint64_t>& seeds, std::int64_t i,
           std::int64_t range, std::uint64_t node_budget) {
          std::vector<edhr::Family> parsed;
          for (const std::string& name : families) {
            parsed.push_back(edhr::family_from_string(name));
          }
          const edhr::BenchResult result =
              edhr::run_bench(parsed, sizes, seeds, i, range, node_budget);
          return py::make_tuple(result.rows, result.errors);
        },
        py::arg("families"), py::arg("sizes"), py::arg("seeds"), py::arg("i") = 2,
        py::arg("range") = 1000, py::arg("node_budget") = 50'000'000,
        "Returns (rows, errors); rows end with one 'average' row per family.");
  m.def("emit_report",
        [](const std::vector<edhr::BenchRow>& rows, const std::string& format) {
          return edhr::emit_report(rows, edhr::report_format_from_string(format));
        },
        py::arg("rows"), py::arg("format") = "csv");

  m.attr("__version__") = "0.1.0";
}
