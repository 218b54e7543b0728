#include <doctest.h>

#include <sstream>

#include "edhr/bench.hpp"
#include "support/oracles.hpp"

using namespace edhr;

namespace {

Instance t1() { return Instance{{{7, 2}, {5, 2}, {4, 2}, {1, 2}}, 5}; }
Instance t2() { return Instance{{{7, 2}, {9, 4}, {4, 2}, {1, 2}}, 7}; }

BenchRow sample_row(std::size_t k) {
  BenchRow row;
  row.instance_name = "UC-n200-s" + std::to_string(k);
  row.family = "UC";
  row.n = 200;
  row.i = 2;
  row.obj_base = 62673 + static_cast<std::int64_t>(k);
  row.nodes_base = 300 + k;
  row.obj_edhr = row.obj_base;
  row.nodes_edhr = 100 + k;
  row.rate = static_cast<double>(row.nodes_base - row.nodes_edhr) /
             static_cast<double>(row.nodes_base);
  row.n_i1 = 3;
  row.n_i4 = 4;
  return row;
}

}  // namespace

TEST_SUITE_BEGIN("bench");

TEST_CASE("lp export of the unconstrained model") {
  const std::string text = export_lp(t1());
  CHECK(text.find("2 x1 + 2 x2 + 2 x3 + 2 x4 <= 5") != std::string::npos);
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);

  const auto parsed = oracles::parse_lp(text);
  CHECK(parsed.instance == t1());
  CHECK(parsed.cardinality_rows.empty());
}

TEST_CASE("lp export with i=1 constraints") {
  const SortedInstance s = normalize_and_sort(t2());
  const CardinalityConstraints cc = cardinality_constraints(edhr_partition(s, 1));
  const std::string text = export_lp(s, cc);
  CHECK(text.find("x1 >= 1") != std::string::npos);
  CHECK(text.find("x4 <= 0") != std::string::npos);

  const auto parsed = oracles::parse_lp(text);
  CHECK(parsed.instance == t2());
  REQUIRE(parsed.cardinality_rows.size() == 2);
  CHECK(parsed.cardinality_rows[0].indices == std::vector<std::size_t>{0});
  CHECK(parsed.cardinality_rows[0].sense == ">=");
  CHECK(parsed.cardinality_rows[0].bound == 1);
  CHECK(parsed.cardinality_rows[1].indices == std::vector<std::size_t>{3});
  CHECK(parsed.cardinality_rows[1].sense == "<=");
  CHECK(parsed.cardinality_rows[1].bound == 0);
}

TEST_CASE("an empty constraint set exports the plain model") {
  const SortedInstance s = normalize_and_sort(t2());
  const std::string with_empty = export_lp(s, CardinalityConstraints{});
  CHECK(with_empty == export_lp(t2()));
}

TEST_CASE("re-parsed exports solve to the original optimum") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig cfg;
    cfg.family = seed % 2 ? Family::UC : Family::ASC;
    cfg.n = 16;
    cfg.range = 100;
    cfg.seed = seed;
    cfg.force_break = false;
    const Instance inst = generate(cfg);
    const auto parsed = oracles::parse_lp(export_lp(inst));
    CHECK(parsed.instance == inst);
    CHECK(solve_dp(parsed.instance).first.objective == solve_dp(inst).first.objective);
  }
}

TEST_CASE("csv report shape and round-trip") {
  std::vector<BenchRow> rows;
  CHECK(emit_report(rows, ReportFormat::Csv) ==
        "instance,family,n,i,obj_base,nodes_base,obj_edhr,nodes_edhr,rate,n_i1,n_i4\n");

  for (std::size_t k = 0; k < 10; ++k) rows.push_back(sample_row(k));
  BenchRow avg;
  avg.instance_name = "average";
  avg.family = "UC";
  avg.i = 2;
  avg.rate = 0.5388;
  rows.push_back(avg);

  const std::string csv = emit_report(rows, ReportFormat::Csv);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 12);  // header + 10 rows + average

  CHECK(parse_csv_report(csv) == rows);
}

TEST_CASE("markdown mirrors the benchmark table layout") {
  std::vector<BenchRow> rows{sample_row(0)};
  BenchRow avg;
  avg.instance_name = "average";
  avg.family = "UC";
  avg.i = 2;
  avg.rate = 0.53884;
  rows.push_back(avg);

  const std::string md = emit_report(rows, ReportFormat::Markdown);
  CHECK(md.find("### UC") != std::string::npos);
  CHECK(md.find("| UC-n200-s0 | 200 | 62673 | 300 | 62673 | 100 | 66.67% |") !=
        std::string::npos);
  CHECK(md.find("| average |  |  |  |  |  | 53.88% |") != std::string::npos);
}

TEST_CASE("a small bench run is exact and dominated") {
  const BenchResult result = run_bench({Family::UC, Family::IC}, {20}, {1, 2, 3}, 2, 100);
  CHECK(result.errors.empty());
  REQUIRE(result.rows.size() == 8);  // 3 + average, per family

  std::size_t averages = 0;
  for (const BenchRow& row : result.rows) {
    if (row.instance_name == "average") {
      ++averages;
      continue;
    }
    CHECK(row.obj_base == row.obj_edhr);
    CHECK(row.nodes_edhr <= row.nodes_base);
    if (row.n_i1 == 0 && row.n_i4 == 0) {
      CHECK(row.nodes_edhr == row.nodes_base);
      CHECK(row.rate == 0.0);
    }
  }
  CHECK(averages == 2);
  CHECK(result.rows[3].instance_name == "average");
  CHECK(result.rows[3].family == "UC");
}

TEST_CASE("bench rows order is deterministic") {
  const BenchResult a = run_bench({Family::SC}, {12, 16}, {7}, 2, 50);
  const BenchResult b = run_bench({Family::SC}, {12, 16}, {7}, 2, 50);
  CHECK(a.rows == b.rows);
  REQUIRE(a.rows.size() == 3);
  CHECK(a.rows[0].instance_name == "SC-n12-s7");
  CHECK(a.rows[1].instance_name == "SC-n16-s7");
}

TEST_SUITE_END();
