#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "edhr/generators.hpp"
#include "edhr/reduction.hpp"
#include "edhr/solvers.hpp"
#include "support/oracles.hpp"

using namespace edhr;

namespace {

Instance t1() { return Instance{{{7, 2}, {5, 2}, {4, 2}, {1, 2}}, 5}; }
Instance t2() { return Instance{{{7, 2}, {9, 4}, {4, 2}, {1, 2}}, 7}; }

bool contains(const std::vector<std::size_t>& set, std::size_t pos) {
  return std::find(set.begin(), set.end(), pos) != set.end();
}

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Instance> random_instances(std::size_t count, std::size_t max_n,
                                       std::uint64_t seed_base) {
  std::vector<Instance> out;
  const Family families[] = {Family::UC, Family::WC, Family::SC, Family::IC, Family::ASC};
  for (std::size_t k = 0; k < count; ++k) {
    GeneratorConfig cfg;
    cfg.family = families[k % 5];
    cfg.n = 6 + k % (max_n - 5);
    cfg.range = k % 2 ? 100 : 50;
    cfg.seed = seed_base + k;
    cfg.force_break = false;
    out.push_back(generate(cfg));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("reduction");

TEST_CASE("dhr fixes the worked examples") {
  const Subproblem one = dhr_partition(normalize_and_sort(t1()));
  CHECK(one.fixed_one == std::vector<std::size_t>{0});
  CHECK(one.fixed_zero == std::vector<std::size_t>{3});
  CHECK(one.free_positions == std::vector<std::size_t>{1, 2});
  CHECK(one.reduced_capacity == 3);
  CHECK(one.feasible);

  const Subproblem two = dhr_partition(normalize_and_sort(t2()));
  CHECK(two.fixed_one == std::vector<std::size_t>{0});
  CHECK(two.fixed_zero == std::vector<std::size_t>{3});
  CHECK(two.free_positions == std::vector<std::size_t>{1, 2});
  CHECK(two.reduced_capacity == 5);
}

TEST_CASE("equal densities fix nothing") {
  // Both determinants degenerate to -p_b*r and +p_b*r.
  const Subproblem sub = dhr_partition(
      normalize_and_sort(Instance{{{2, 1}, {2, 1}, {2, 1}, {2, 1}}, 2}));
  CHECK(sub.fixed_one.empty());
  CHECK(sub.fixed_zero.empty());
  CHECK(sub.free_positions.size() == 4);
}

TEST_CASE("edhr partition of the worked example") {
  const SortedInstance s = normalize_and_sort(t2());

  const EdhrPartition one = edhr_partition(s, 1);
  CHECK(one.n1 == std::vector<std::size_t>{0});
  CHECK(one.n2 == std::vector<std::size_t>{1});
  CHECK(one.n3 == std::vector<std::size_t>{2});
  CHECK(one.n4 == std::vector<std::size_t>{3});
  CHECK(one.n5.empty());

  // At i = 3 the second item clears the scaled test: 3*9*2 - 4*(1 + 3*4) = 2.
  const EdhrPartition three = edhr_partition(s, 3);
  CHECK(three.n1 == std::vector<std::size_t>{0, 1});
  CHECK(three.n2.empty());
  CHECK(three.n3 == std::vector<std::size_t>{2});
  CHECK(three.n4 == std::vector<std::size_t>{3});

  CHECK_THROWS_AS(edhr_partition(s, 0), std::invalid_argument);
}

TEST_CASE("partition matches the rational re-evaluation") {
  for (const Instance& inst : random_instances(120, 24, 555)) {
    const SortedInstance s = normalize_and_sort(inst);
    for (std::int64_t i : {1, 2, 3, 5, 8}) {
      const EdhrPartition part = edhr_partition(s, i);
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        switch (oracles::classify(s, pos, i)) {
          case oracles::SetLabel::N1: CHECK(contains(part.n1, pos)); break;
          case oracles::SetLabel::N2: CHECK(contains(part.n2, pos)); break;
          case oracles::SetLabel::N3: CHECK(contains(part.n3, pos)); break;
          case oracles::SetLabel::N4: CHECK(contains(part.n4, pos)); break;
          case oracles::SetLabel::N5: CHECK(contains(part.n5, pos)); break;
        }
      }
    }
  }
}

TEST_CASE("partition law: disjoint cover with the break item in n3") {
  for (const Instance& inst : random_instances(100, 26, 99)) {
    const SortedInstance s = normalize_and_sort(inst);
    for (std::int64_t i = 1; i <= 8; ++i) {
      const EdhrPartition part = edhr_partition(s, i);
      std::vector<std::size_t> all;
      for (const auto* set : {&part.n1, &part.n2, &part.n3, &part.n4, &part.n5}) {
        all.insert(all.end(), set->begin(), set->end());
      }
      std::sort(all.begin(), all.end());
      CHECK(all.size() == s.size());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      CHECK(contains(part.n3, s.break_pos));
    }
  }
}

TEST_CASE("n1 and n4 grow with i") {
  for (const Instance& inst : random_instances(100, 26, 321)) {
    const SortedInstance s = normalize_and_sort(inst);
    EdhrPartition prev = edhr_partition(s, 1);
    for (std::int64_t i = 2; i <= 8; ++i) {
      const EdhrPartition next = edhr_partition(s, i);
      CHECK(is_subset(prev.n1, next.n1));
      CHECK(is_subset(prev.n4, next.n4));
      prev = next;
    }
  }
}

TEST_CASE("i=1 reproduces the classical fixing") {
  CHECK(fixing_sets_agree_with_dhr(normalize_and_sort(t1())));
  CHECK(fixing_sets_agree_with_dhr(normalize_and_sort(t2())));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratorConfig cfg;
    cfg.family = Family::UC;
    cfg.n = 50;
    cfg.range = 1000;
    cfg.seed = seed;
    cfg.force_break = false;
    CHECK(fixing_sets_agree_with_dhr(normalize_and_sort(generate(cfg))));
  }
}

TEST_CASE("cardinality constraints reduce to fixing at i=1") {
  const SortedInstance s = normalize_and_sort(t2());
  const CardinalityConstraints cc = cardinality_constraints(edhr_partition(s, 1));
  REQUIRE(cc.at_least.has_value());
  CHECK(cc.at_least->positions == std::vector<std::size_t>{0});
  CHECK(cc.at_least->bound == 1);
  REQUIRE(cc.at_most.has_value());
  CHECK(cc.at_most->positions == std::vector<std::size_t>{3});
  CHECK(cc.at_most->bound == 0);
}

TEST_CASE("vacuous constraints are emitted as absent") {
  const SortedInstance s = normalize_and_sort(t2());
  // |N_{3,1}| = 2 with slack 2, and |N_{3,4}| = 1 with slack 2: both vacuous.
  const CardinalityConstraints cc = cardinality_constraints(edhr_partition(s, 3));
  CHECK_FALSE(cc.at_least.has_value());
  CHECK_FALSE(cc.at_most.has_value());

  EdhrPartition empty;
  empty.i = 2;
  const CardinalityConstraints none = cardinality_constraints(empty);
  CHECK_FALSE(none.at_least.has_value());
  CHECK_FALSE(none.at_most.has_value());
}

TEST_CASE("enumeration plan of the worked example") {
  const SortedInstance s = normalize_and_sort(t2());
  const EdhrPartition part = edhr_partition(s, 2);
  REQUIRE(part.n1 == std::vector<std::size_t>{0});
  REQUIRE(part.n4 == std::vector<std::size_t>{3});
  CHECK(enumeration_branch_count(part) == 4);

  const EnumerationPlan plan = enumeration_plan(part);
  REQUIRE(plan.branches.size() == 4);
  CHECK(plan.branches[0].excluded.empty());
  CHECK(plan.branches[0].included.empty());
  CHECK(plan.branches[1].excluded == std::vector<std::size_t>{0});
  CHECK(plan.branches[1].included.empty());
  CHECK(plan.branches[2].excluded.empty());
  CHECK(plan.branches[2].included == std::vector<std::size_t>{3});
  CHECK(plan.branches[3].excluded == std::vector<std::size_t>{0});
  CHECK(plan.branches[3].included == std::vector<std::size_t>{3});
}

TEST_CASE("enumeration counts") {
  EdhrPartition part;
  part.i = 1;
  part.n1 = {0, 1, 2};
  part.n4 = {5, 6};
  CHECK(enumeration_branch_count(part) == 1);  // only the empty pair
  CHECK(enumeration_plan(part).branches.size() == 1);

  EdhrPartition big;
  big.i = 2;
  for (std::size_t v = 0; v < 10; ++v) {
    big.n1.push_back(v);
    big.n4.push_back(20 + v);
  }
  // Binomial sums: (1 + 10) * (1 + 10).
  CHECK(enumeration_branch_count(big) == 121);
  CHECK(enumeration_plan(big).branches.size() == 121);

  big.i = 9;
  CHECK_THROWS_WITH_AS(enumeration_plan(big, 1000),
                       doctest::Contains("enumeration blow-up"), EnumerationBlowup);

  // Binomial sums beyond 64 bits saturate instead of wrapping.
  EdhrPartition wide;
  wide.i = 51;
  for (std::size_t v = 0; v < 100; ++v) wide.n1.push_back(v);
  CHECK(enumeration_branch_count(wide) ==
        std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(enumeration_plan(wide), EnumerationBlowup);
}

TEST_CASE("assemble_branch on the worked example") {
  const SortedInstance s = normalize_and_sort(t2());
  const EdhrPartition part = edhr_partition(s, 2);
  const EnumerationPlan plan = enumeration_plan(part);

  const Subproblem root = assemble_branch(s, part, plan.branches[0]);
  CHECK(root.fixed_one == std::vector<std::size_t>{0});
  CHECK(root.fixed_zero == std::vector<std::size_t>{3});
  CHECK(root.free_positions == std::vector<std::size_t>{1, 2});
  CHECK(root.reduced_capacity == 5);
  CHECK(root.feasible);

  const Subproblem flipped = assemble_branch(s, part, plan.branches[3]);
  CHECK(flipped.fixed_one == std::vector<std::size_t>{3});
  CHECK(flipped.fixed_zero == std::vector<std::size_t>{0});
  CHECK(flipped.free_positions == std::vector<std::size_t>{1, 2});
  CHECK(flipped.reduced_capacity == 5);
}

TEST_CASE("branches whose forced set overflows the capacity are marked") {
  // N_{2,1} = {0} (weight 5) and N_{2,4} = {3} (weight 6) with C = 8, so
  // forcing both in exceeds the capacity.
  const SortedInstance s =
      normalize_and_sort(Instance{{{50, 5}, {9, 4}, {4, 2}, {3, 6}}, 8});
  const EdhrPartition part = edhr_partition(s, 2);
  REQUIRE(part.n1 == std::vector<std::size_t>{0});
  REQUIRE(part.n4 == std::vector<std::size_t>{3});
  const Subproblem sub = assemble_branch(s, part, Branch{{}, {3}});
  CHECK_FALSE(sub.feasible);
  CHECK(sub.reduced_capacity == -3);
}

TEST_CASE("audit of verified optima") {
  const SortedInstance s2 = normalize_and_sort(t2());
  Solution opt2;
  opt2.assignment = {1, 1, 0, 0};
  opt2.objective = 16;
  opt2.feasible = true;
  const TheoremAudit audit2 = audit_optimal(s2, edhr_partition(s2, 3), opt2, 16);
  CHECK(audit2.d1.empty());
  CHECK(audit2.d2.empty());
  CHECK(audit2.within_bounds(3));

  const SortedInstance s1 = normalize_and_sort(t1());
  Solution opt1;
  opt1.assignment = {1, 1, 0, 0};
  opt1.objective = 12;
  opt1.feasible = true;
  const TheoremAudit audit1 = audit_optimal(s1, edhr_partition(s1, 1), opt1, 12);
  CHECK(audit1.d1.empty());
  CHECK(audit1.d2.empty());

  opt1.objective = 11;
  CHECK_THROWS_AS(audit_optimal(s1, edhr_partition(s1, 1), opt1), std::invalid_argument);
  opt1.objective = 12;
  CHECK_THROWS_AS(audit_optimal(s1, edhr_partition(s1, 1), opt1, 13), std::invalid_argument);
}

TEST_CASE("deviation bounds hold for every enumerated optimum") {
  for (const Instance& inst : random_instances(60, 16, 777)) {
    const SortedInstance s = normalize_and_sort(inst);
    const auto [best, optima] = solve_exhaustive(inst);
    for (std::int64_t i : {1, 2, 3}) {
      const EdhrPartition part = edhr_partition(s, i);
      for (const auto& assignment : optima) {
        const TheoremAudit audit = audit_solution(s, part, assignment);
        CHECK(audit.within_bounds(i));
      }
    }
    (void)best;
  }
}

TEST_CASE("mediant inequality holds for arbitrary assignments") {
  // Whenever more than i-1 items of n1 are left out, the packed n4/n5
  // density cannot exceed the left-out density against r.
  std::mt19937_64 rng(2024);
  for (const Instance& inst : random_instances(80, 20, 888)) {
    const SortedInstance s = normalize_and_sort(inst);
    std::vector<std::uint8_t> assignment(inst.size());
    for (int round = 0; round < 8; ++round) {
      for (auto& x : assignment) x = static_cast<std::uint8_t>(rng() & 1);
      for (std::int64_t i : {1, 2, 3}) {
        const EdhrPartition part = edhr_partition(s, i);
        const TheoremAudit audit = audit_solution(s, part, assignment);
        if (audit.d1.size() <= static_cast<std::size_t>(i - 1)) continue;
        std::int64_t p23 = 0, w23 = 0, p1 = 0, w1 = 0;
        for (std::size_t pos : audit.d2) { p23 += s.at(pos).profit; w23 += s.at(pos).weight; }
        for (std::size_t pos : audit.d3) { p23 += s.at(pos).profit; w23 += s.at(pos).weight; }
        for (std::size_t pos : audit.d1) { p1 += s.at(pos).profit; w1 += s.at(pos).weight; }
        if (w23 == 0) continue;
        CHECK(oracles::Rational(p23, w23) <= oracles::Rational(p1, s.residual + w1));
      }
    }
  }
}

TEST_CASE("merged-pair test forces one of the pair into every optimum") {
  for (const Instance& inst : random_instances(50, 14, 4242)) {
    const SortedInstance s = normalize_and_sort(inst);
    const Item& b = s.break_item();
    const auto [best, optima] = solve_exhaustive(inst);
    (void)best;
    for (std::size_t j = 0; j < s.break_pos; ++j) {
      for (std::size_t k = j + 1; k < s.break_pos; ++k) {
        const std::int64_t p = s.at(j).profit + s.at(k).profit;
        const std::int64_t w = s.at(j).weight + s.at(k).weight;
        if (oracles::Rational(p, w + s.residual) > oracles::density(b)) {
          for (const auto& assignment : optima) {
            CHECK(assignment[s.order[j]] + assignment[s.order[k]] >= 1);
          }
        }
      }
    }
  }
}

TEST_CASE("classical fixing never changes the optimum") {
  for (const Instance& inst : random_instances(60, 22, 31415)) {
    const SortedInstance s = normalize_and_sort(inst);
    const Subproblem sub = dhr_partition(s);
    REQUIRE(sub.feasible);
    std::vector<Item> free_items;
    std::int64_t fixed_profit = 0;
    for (std::size_t pos : sub.free_positions) free_items.push_back(s.at(pos));
    for (std::size_t pos : sub.fixed_one) fixed_profit += s.at(pos).profit;
    const std::int64_t reduced_best =
        fixed_profit + dp_value_row(free_items, sub.reduced_capacity).back();
    CHECK(reduced_best == solve_dp(inst).first.objective);
  }
}

TEST_CASE("the branch family always contains an optimal completion") {
  for (const Instance& inst : random_instances(40, 18, 2718)) {
    const SortedInstance s = normalize_and_sort(inst);
    const std::int64_t optimum = solve_dp(inst).first.objective;
    for (std::int64_t i : {1, 2, 3}) {
      const EdhrPartition part = edhr_partition(s, i);
      const EnumerationPlan plan = enumeration_plan(part);
      std::int64_t best = -1;
      for (const Branch& branch : plan.branches) {
        const Subproblem sub = assemble_branch(s, part, branch);
        if (!sub.feasible) continue;
        std::vector<Item> free_items;
        std::int64_t fixed_profit = 0;
        for (std::size_t pos : sub.free_positions) free_items.push_back(s.at(pos));
        for (std::size_t pos : sub.fixed_one) fixed_profit += s.at(pos).profit;
        best = std::max(best, fixed_profit +
                                  dp_value_row(free_items, sub.reduced_capacity).back());
      }
      CHECK(best == optimum);
    }
  }
}

TEST_SUITE_END();
