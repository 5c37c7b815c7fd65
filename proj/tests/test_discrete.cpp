#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ikp/discrete.hpp"
#include "ikp/generator.hpp"
#include "ikp/model.hpp"
#include "ikp/oracle.hpp"

using namespace ikp;
using namespace ikp::discrete;

namespace {

Item make_item(long long p, long long w, long long improved_w, long long cost) {
  Item it;
  it.profit = p;
  it.base_weight = w;
  it.levels.push_back({Rational(improved_w), Rational(cost)});
  return it;
}

Item plain_item(long long p, long long w) {
  Item it;
  it.profit = p;
  it.base_weight = w;
  return it;
}

Instance make_instance(long long B, long long C, std::vector<Item> items) {
  Instance inst;
  inst.knapsack_budget = B;
  inst.improvement_budget = C;
  inst.items = std::move(items);
  return inst;
}

Instance random_single_level(std::uint64_t seed, int n, bool unit_cost) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.max_levels = 1;
  cfg.family = unit_cost ? Family::UnitCost : Family::Uniform;
  cfg.weight_max = 25;
  cfg.profit_max = 25;
  cfg.cost_max = 6;
  return generate(cfg);
}

void check_ratio(const Instance& raw, const RunReport& report, const Rational& oracle_value) {
  Evaluation ev = evaluate(raw, report.solution);
  REQUIRE(ev.feasible);
  CHECK(ev.total_profit == report.objective);
  CHECK(report.objective <= oracle_value);
  CHECK(report.objective >= report.bound * oracle_value);
}

}  // namespace

TEST_CASE("greedy knapsack 2-approximation") {
  SUBCASE("density order with skip-and-continue") {
    // Densities: 6/4, 5/5, 3/1. Budget 5: take item 2 (w=1), item 0 (w=4).
    std::vector<Rational> p = {6, 5, 3}, w = {4, 5, 1};
    CHECK(greedy_kp_2approx(p, w, 5) == std::vector<int>{0, 2});
  }
  SUBCASE("best single item beats a dense-but-small greedy pick") {
    // Greedy takes item 0 (density 2) and stops; item 1 alone is worth more.
    std::vector<Rational> p = {2, 9}, w = {1, 10};
    CHECK(greedy_kp_2approx(p, w, 10) == std::vector<int>{1});
  }
  SUBCASE("weightless items always enter") {
    std::vector<Rational> p = {1, 7}, w = {0, 3};
    CHECK(greedy_kp_2approx(p, w, 3) == std::vector<int>{0, 1});
  }
  SUBCASE("value is at least half of the exact knapsack optimum") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Instance inst = random_single_level(seed, 1 + static_cast<int>(seed % 8), false);
      std::vector<Rational> p, w;
      for (const Item& it : inst.items) {
        p.push_back(it.profit);
        w.push_back(it.base_weight);
      }
      Rational budget = inst.knapsack_budget;
      std::vector<Rational> pf, wf;
      std::vector<int> keep;
      for (size_t i = 0; i < p.size(); ++i)
        if (w[i] <= budget) {
          keep.push_back(static_cast<int>(i));
          pf.push_back(p[i]);
          wf.push_back(w[i]);
        }
      Rational greedy_value = 0;
      for (int i : greedy_kp_2approx(pf, wf, budget)) greedy_value += pf[size_t(i)];

      Instance plain = inst;
      for (Item& it : plain.items) it.levels.clear();
      plain.improvement_budget = 0;
      Rational opt = oracle::exact_discrete(plain).value;
      CHECK(2 * greedy_value >= opt);
    }
  }
}

TEST_CASE("six_approx on a worked example") {
  // B = 6, C = 2. Improved forms: item 0 (w 5->3, c 1), item 1 (w 5->3, c 1).
  // Both improved fit: profit 9. The plain knapsack packs at most one.
  Instance inst = make_instance(6, 2, {make_item(5, 5, 3, 1), make_item(4, 5, 3, 1)});
  RunReport r = six_approx(preprocess(inst).instance);
  CHECK(r.objective == 9);
  CHECK(r.bound == Rational(1, 6));
}

TEST_CASE("six_approx stays within its ratio on random instances") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Instance inst = random_single_level(seed, 1 + static_cast<int>(seed % 9), false);
    Instance pre = preprocess(inst).instance;
    RunReport r = six_approx(pre);
    CHECK(r.diag.fractional_vars <= 2);
    check_ratio(pre, r, oracle::exact_discrete(pre).value);
  }
}

TEST_CASE("ckp_three_approx on a worked example") {
  // Unit costs, C = 1: only one improvement. B = 4.
  // Item 0: w 4->1; item 1: w 3->1; item 2: plain w 3.
  // Improve item 1 (w 1) and pack item 2 (w 3): profit 5 + 4 = optimum 9? No:
  // improving item 0 gives w 1, plus item 1 base w 3 = 4: profit 6 + 5 = 11.
  Instance inst =
      make_instance(4, 1, {make_item(6, 4, 1, 1), make_item(5, 3, 1, 1), plain_item(4, 3)});
  Instance pre = preprocess(inst).instance;
  Rational opt = oracle::exact_discrete(pre).value;
  CHECK(opt == 11);
  RunReport r = ckp_three_approx(pre);
  check_ratio(pre, r, opt);
}

TEST_CASE("ckp_three_approx respects its ratio and the pair lemma") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance inst = random_single_level(seed, 1 + static_cast<int>(seed % 9), true);
    Instance pre = preprocess(inst).instance;
    RunReport r = ckp_three_approx(pre);
    CHECK(r.diag.fractional_vars <= 2);
    CHECK(r.diag.pair_lemma_holds);
    check_ratio(pre, r, oracle::exact_discrete(pre).value);
  }
}

TEST_CASE("categorize_items") {
  // x = 1, y = 0: both outer constraints tight -> integral T4.
  // x = y = 1: x=y and x=1 tight -> T4.
  // x = 1/2, y = 1/2: only x=y tight -> T2.
  // x = 1, y = 1/2: only x=1 tight -> T3.
  // x = 1/2, y = 0: only y=0 tight -> T3.
  // x = 1/2, y = 1/4: nothing tight -> T1.
  std::vector<Rational> x = {1, 1, Rational(1, 2), 1, Rational(1, 2), Rational(1, 2)};
  std::vector<Rational> y = {0, 1, Rational(1, 2), Rational(1, 2), 0, Rational(1, 4)};
  auto cats = categorize_items(x, y);
  CHECK(cats[0].type == ItemType::T4);
  CHECK(cats[1].type == ItemType::T4);
  CHECK(cats[2].type == ItemType::T2);
  CHECK(cats[3].type == ItemType::T3);
  CHECK(cats[4].type == ItemType::T3);
  CHECK(cats[5].type == ItemType::T1);
  CHECK_THROWS_AS(categorize_items({Rational(0)}, {Rational(0), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("lp_two_approx on a worked example") {
  Instance inst =
      make_instance(4, 1, {make_item(6, 4, 1, 1), make_item(5, 3, 1, 1), plain_item(4, 3)});
  Instance pre = preprocess(inst).instance;
  RunReport r = lp_two_approx(pre);
  Rational opt = oracle::exact_discrete(pre).value;
  CHECK(2 * r.objective >= opt);
  check_ratio(pre, r, opt);
}

TEST_CASE("lp_two_approx respects its ratio on random unit-cost instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance inst = random_single_level(seed, 1 + static_cast<int>(seed % 9), true);
    Instance pre = preprocess(inst).instance;
    RunReport r = lp_two_approx(pre);
    CHECK(r.diag.non_integral_items <= 2);
    check_ratio(pre, r, oracle::exact_discrete(pre).value);
  }
}

TEST_CASE("lp_two_approx joins the weight-safe member of a fractional pair") {
  // Vertex with one x=y item (heavy improved form) and one x=1 item (light
  // improved form) sharing y_i + y_j = 1. Joining the x=y item would blow the
  // weight budget; the x=1 item must be chosen instead.
  Instance inst = make_instance(16, 1, {make_item(16, 3, 3, 1), make_item(9, 12, 10, 1),
                                        make_item(14, 7, 5, 1), make_item(3, 3, 1, 1),
                                        make_item(16, 3, 3, 1), make_item(3, 8, 6, 1)});
  inst.knapsack_budget = Rational(81, 5);   // 16.2
  inst.improvement_budget = Rational(87, 50);  // 1.74, floor -> k = 1
  Instance pre = preprocess(inst).instance;
  RunReport r = lp_two_approx(pre);
  Rational opt = oracle::exact_discrete(pre).value;
  check_ratio(pre, r, opt);
}

TEST_CASE("exact bound is reported when the relaxation is integral") {
  // A single plain item: the LP optimum is integral, so the answer is exact.
  Instance inst = make_instance(5, 0, {plain_item(7, 3)});
  RunReport r = lp_two_approx(preprocess(inst).instance);
  CHECK(r.objective == 7);
  CHECK(r.bound == 1);
  CHECK(r.diag.non_integral_items == 0);
}

TEST_CASE("variant preconditions are enforced") {
  Instance multi = make_instance(5, 5, {plain_item(1, 1)});
  multi.items[0].levels.push_back({Rational(1), Rational(1)});
  multi.items[0].levels.push_back({Rational(0), Rational(2)});
  CHECK_THROWS_AS(six_approx(multi), std::invalid_argument);

  Instance non_unit = make_instance(5, 5, {make_item(1, 2, 1, 3)});
  CHECK_THROWS_AS(ckp_three_approx(non_unit), std::invalid_argument);
  CHECK_THROWS_AS(lp_two_approx(non_unit), std::invalid_argument);

  Instance cont = make_instance(5, 5, {plain_item(1, 1)});
  cont.mode = ImprovementMode::Continuous;
  CHECK_THROWS_AS(six_approx(cont), std::invalid_argument);
}
