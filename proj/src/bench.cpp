#include "edhr/bench.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace edhr {
namespace {

std::string format_rate(double rate) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", rate);
  return buf;
}

std::string format_percent(double rate) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f%%", rate * 100.0);
  return buf;
}

// Rows of "<coeff> x<j>" terms, wrapped so no single line grows unwieldy.
void write_terms(std::ostream& out, const std::vector<std::pair<std::int64_t, std::size_t>>& terms) {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t > 0) {
      out << " +";
      if (t % 8 == 0) out << "\n     ";
    }
    out << ' ' << terms[t].first << " x" << (terms[t].second + 1);
  }
}

void write_lp(std::ostream& out, const Instance& inst) {
  out << "Maximize\n obj:";
  std::vector<std::pair<std::int64_t, std::size_t>> terms;
  terms.reserve(inst.size());
  for (std::size_t j = 0; j < inst.size(); ++j) terms.emplace_back(inst.items[j].profit, j);
  write_terms(out, terms);
  out << "\nSubject To\n cap:";
  terms.clear();
  for (std::size_t j = 0; j < inst.size(); ++j) terms.emplace_back(inst.items[j].weight, j);
  write_terms(out, terms);
  out << " <= " << inst.capacity << '\n';
}

void write_cardinality_row(std::ostream& out, const std::string& name,
                           std::vector<std::size_t> indices, const char* sense,
                           std::int64_t bound) {
  std::sort(indices.begin(), indices.end());
  out << ' ' << name << ':';
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (t > 0) {
      out << " +";
      if (t % 12 == 0) out << "\n     ";
    }
    out << " x" << (indices[t] + 1);
  }
  out << ' ' << sense << ' ' << bound << '\n';
}

void write_lp_tail(std::ostream& out, std::size_t n) {
  out << "Binaries\n";
  for (std::size_t j = 0; j < n; ++j) {
    out << (j % 16 == 0 ? (j == 0 ? "" : "\n") : " ") << 'x' << (j + 1);
  }
  out << "\nEnd\n";
}

}  // namespace

std::string export_lp(const Instance& inst) {
  std::ostringstream out;
  write_lp(out, inst);
  write_lp_tail(out, inst.size());
  return out.str();
}

std::string export_lp(const SortedInstance& s, const CardinalityConstraints& constraints) {
  std::ostringstream out;
  write_lp(out, s.base);
  if (constraints.at_least) {
    std::vector<std::size_t> indices;
    for (std::size_t pos : constraints.at_least->positions) indices.push_back(s.order[pos]);
    write_cardinality_row(out, "card_min", std::move(indices), ">=",
                          constraints.at_least->bound);
  }
  if (constraints.at_most) {
    std::vector<std::size_t> indices;
    for (std::size_t pos : constraints.at_most->positions) indices.push_back(s.order[pos]);
    write_cardinality_row(out, "card_max", std::move(indices), "<=",
                          constraints.at_most->bound);
  }
  write_lp_tail(out, s.size());
  return out.str();
}

BenchResult run_bench(const std::vector<Family>& families,
                      const std::vector<std::size_t>& sizes,
                      const std::vector<std::uint64_t>& seeds, std::int64_t i,
                      std::int64_t range, std::uint64_t node_budget) {
  BenchResult result;
  for (Family family : families) {
    std::size_t family_rows = 0;
    double rate_sum = 0.0;
    for (std::size_t n : sizes) {
      for (std::uint64_t seed : seeds) {
        const std::string name = to_string(family) + "-n" + std::to_string(n) +
                                 "-s" + std::to_string(seed);
        try {
          GeneratorConfig cfg;
          cfg.family = family;
          cfg.n = n;
          cfg.range = range;
          cfg.seed = seed;
          cfg.force_break = true;
          const Instance inst = generate(cfg);
          const SortedInstance s = normalize_and_sort(inst);
          const EdhrPartition part = edhr_partition(s, i);

          const auto [base_sol, base_stats] =
              solve_branch_bound(inst, std::nullopt, std::nullopt, node_budget);
          SolverConfig solver_cfg;
          solver_cfg.mode = SolveMode::ConstrainedBB;
          solver_cfg.i = i;
          solver_cfg.node_budget = node_budget;
          const auto [edhr_sol, edhr_stats] = solve_edhr(inst, solver_cfg);

          BenchRow row;
          row.instance_name = name;
          row.family = to_string(family);
          row.n = n;
          row.i = i;
          row.obj_base = base_sol.objective;
          row.nodes_base = base_stats.nodes_expanded;
          row.obj_edhr = edhr_sol.objective;
          row.nodes_edhr = edhr_stats.nodes_expanded;
          row.rate = row.nodes_base == row.nodes_edhr
                         ? 0.0
                         : static_cast<double>(row.nodes_base - row.nodes_edhr) /
                               static_cast<double>(row.nodes_base);
          row.n_i1 = part.n1.size();
          row.n_i4 = part.n4.size();
          rate_sum += row.rate;
          ++family_rows;
          result.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
          result.errors.push_back(name + ": " + e.what());
        }
      }
    }
    if (family_rows > 0) {
      BenchRow avg;
      avg.instance_name = "average";
      avg.family = to_string(family);
      avg.i = i;
      avg.rate = rate_sum / static_cast<double>(family_rows);
      result.rows.push_back(std::move(avg));
    }
  }
  return result;
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format: " + name);
}

namespace {

constexpr const char* kCsvHeader =
    "instance,family,n,i,obj_base,nodes_base,obj_edhr,nodes_edhr,rate,n_i1,n_i4";

std::string emit_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const BenchRow& row : rows) {
    out << row.instance_name << ',' << row.family << ',' << row.n << ',' << row.i
        << ',' << row.obj_base << ',' << row.nodes_base << ',' << row.obj_edhr
        << ',' << row.nodes_edhr << ',' << format_rate(row.rate) << ','
        << row.n_i1 << ',' << row.n_i4 << '\n';
  }
  return out.str();
}

std::string emit_markdown(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  std::vector<std::string> family_order;
  for (const BenchRow& row : rows) {
    if (std::find(family_order.begin(), family_order.end(), row.family) ==
        family_order.end()) {
      family_order.push_back(row.family);
    }
  }
  for (const std::string& family : family_order) {
    out << "### " << family << "\n\n";
    out << "| instance | n | obj (baseline) | nodes (baseline) | obj (reduced) "
           "| nodes (reduced) | rate |\n";
    out << "|---|---:|---:|---:|---:|---:|---:|\n";
    for (const BenchRow& row : rows) {
      if (row.family != family) continue;
      if (row.instance_name == "average") {
        out << "| average |  |  |  |  |  | " << format_percent(row.rate) << " |\n";
      } else {
        out << "| " << row.instance_name << " | " << row.n << " | " << row.obj_base
            << " | " << row.nodes_base << " | " << row.obj_edhr << " | "
            << row.nodes_edhr << " | " << format_percent(row.rate) << " |\n";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::vector<BenchRow>& rows, ReportFormat format) {
  return format == ReportFormat::Csv ? emit_csv(rows) : emit_markdown(rows);
}

std::vector<BenchRow> parse_csv_report(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("unexpected CSV header");
  }
  std::vector<BenchRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream fieldstream(line);
    std::string field;
    while (std::getline(fieldstream, field, ',')) fields.push_back(field);
    if (fields.size() != 11) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 11 fields, got " +
                                  std::to_string(fields.size()));
    }
    BenchRow row;
    row.instance_name = fields[0];
    row.family = fields[1];
    row.n = std::stoull(fields[2]);
    row.i = std::stoll(fields[3]);
    row.obj_base = std::stoll(fields[4]);
    row.nodes_base = std::stoull(fields[5]);
    row.obj_edhr = std::stoll(fields[6]);
    row.nodes_edhr = std::stoull(fields[7]);
    row.rate = std::stod(fields[8]);
    row.n_i1 = std::stoull(fields[9]);
    row.n_i4 = std::stoull(fields[10]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace edhr
