#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edhr/generators.hpp"
#include "edhr/reduction.hpp"
#include "edhr/solvers.hpp"

namespace edhr {

/// One benchmark comparison: the same instance solved by plain branch and
/// bound (baseline) and by the constrained pipeline with parameter i.
/// rate is the raw node-reduction ratio (nodes_base - nodes_edhr) /
/// nodes_base, zero when the counts match. Per-family "average" rows carry
/// the family name, the mean rate, and zeros elsewhere.
struct BenchRow {
  std::string instance_name;
  std::string family;
  std::size_t n = 0;
  std::int64_t i = 0;
  std::int64_t obj_base = 0;
  std::uint64_t nodes_base = 0;
  std::int64_t obj_edhr = 0;
  std::uint64_t nodes_edhr = 0;
  double rate = 0.0;
  std::size_t n_i1 = 0;
  std::size_t n_i4 = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchResult {
  std::vector<BenchRow> rows;        // data rows, then one average row per family
  std::vector<std::string> errors;   // per-row failures; the batch never aborts
};

/// Runs the full grid: for every (family, size, seed) generate with the
/// break-item convention, solve plain-bb and constrained-bb with parameter
/// i, and emit one row. Rows are ordered by (family, size, seed) and each
/// family gets an "average" row appended.
BenchResult run_bench(const std::vector<Family>& families,
                      const std::vector<std::size_t>& sizes,
                      const std::vector<std::uint64_t>& seeds,
                      std::int64_t i, std::int64_t range = 1000,
                      std::uint64_t node_budget = 0);

/// LP-file export with deterministic variable naming x1..xn in original
/// index order: Maximize / Subject To (capacity row, then any cardinality
/// rows) / Binaries / End.
std::string export_lp(const Instance& inst);

/// Constrained variant; the cardinality constraints are given in sorted
/// positions (as produced by cardinality_constraints) and are translated to
/// original indices through the sorted view.
std::string export_lp(const SortedInstance& s, const CardinalityConstraints& constraints);

enum class ReportFormat { Csv, Markdown };

ReportFormat report_format_from_string(const std::string& name);

/// CSV: fixed header
/// instance,family,n,i,obj_base,nodes_base,obj_edhr,nodes_edhr,rate,n_i1,n_i4
/// with rates as raw ratios at round-trip precision. Markdown: one table per
/// family mirroring the instance/n/result/nodes/result/nodes/rate layout,
/// rates as percentages with two decimals, average rows last.
std::string emit_report(const std::vector<BenchRow>& rows, ReportFormat format);

/// Parses emit_report's CSV output back into rows (round-trip identity).
std::vector<BenchRow> parse_csv_report(const std::string& text);

}  // namespace edhr
