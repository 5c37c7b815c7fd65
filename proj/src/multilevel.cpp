#include "ikp/multilevel.hpp"

#include <chrono>
#include <stdexcept>

#include "ikp/ratlp.hpp"

namespace ikp {
namespace multilevel {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_integral_data(const Instance& instance, bool profits_too) {
  for (const Item& it : instance.items) {
    if (profits_too && !is_integral(it.profit))
      throw std::invalid_argument("dp_exact: non-integral profit; use ptas_scaled");
    for (const auto& lev : it.levels)
      if (!is_integral(lev.cost))
        throw std::invalid_argument("dp_exact: non-integral improvement cost; use ptas_scaled");
  }
}

long long floor_ll(const Rational& r) {
  return static_cast<long long>(numerator(r) / denominator(r));
}

}  // namespace

DpTable build_dp_table(const Instance& instance) {
  if (instance.mode != ImprovementMode::Discrete)
    throw std::invalid_argument("dp_exact: instance is not in discrete mode");
  require_integral_data(instance, true);

  DpTable t;
  t.n = instance.size();
  t.budget = floor_ll(instance.improvement_budget);
  t.max_profit = 0;
  for (const Item& it : instance.items) t.max_profit += to_int(it.profit);

  size_t cell_count = static_cast<size_t>(t.n + 1) * static_cast<size_t>(t.budget + 1) *
                      static_cast<size_t>(t.max_profit + 1);
  if (cell_count > 200'000'000)
    throw std::runtime_error("dp_exact: table too large (" + std::to_string(cell_count) +
                             " cells); scale the instance down");
  t.cells.assign(cell_count, DpTable::Cell{});

  for (long long q = 0; q <= t.budget; ++q) {
    auto& base = t.at(0, q, 0);
    base.weight = 0;
    base.branch = 0;
  }

  for (long long q = 0; q <= t.budget; ++q) {
    for (int i = 1; i <= t.n; ++i) {
      const Item& it = instance.items[static_cast<size_t>(i - 1)];
      long long p = to_int(it.profit);
      for (long long r = 0; r <= t.max_profit; ++r) {
        DpTable::Cell& cell = t.at(i, q, r);
        const DpTable::Cell& skip = t.at(i - 1, q, r);
        if (skip.branch >= 0) {
          cell.weight = skip.weight;
          cell.branch = 0;
        }
        if (r < p) continue;
        for (int level = 0; level <= it.num_levels(); ++level) {
          long long c = level == 0 ? 0 : to_int(it.cost_at(level));
          if (c > q) break;  // costs are non-decreasing across levels
          const DpTable::Cell& prev = t.at(i - 1, q - c, r - p);
          if (prev.branch < 0) continue;
          Rational w = prev.weight + it.weight_at(level);
          if (cell.branch < 0 || w < cell.weight) {
            cell.weight = w;
            cell.branch = 1 + level;
          }
        }
      }
    }
  }
  return t;
}

RunReport dp_exact(const Instance& instance) {
  auto start = Clock::now();
  DpTable t = build_dp_table(instance);

  long long best_r = 0;
  for (long long r = t.max_profit; r >= 0; --r) {
    if (t.reachable(t.n, t.budget, r) &&
        t.at(t.n, t.budget, r).weight <= instance.knapsack_budget) {
      best_r = r;
      break;
    }
  }

  Solution sol = Solution::empty(t.n);
  long long q = t.budget, r = best_r;
  for (int i = t.n; i >= 1; --i) {
    const DpTable::Cell& cell = t.at(i, q, r);
    if (cell.branch > 0) {
      int level = cell.branch - 1;
      const Item& it = instance.items[static_cast<size_t>(i - 1)];
      sol.packed[static_cast<size_t>(i - 1)] = 1;
      sol.improvement[static_cast<size_t>(i - 1)] = level;
      q -= level == 0 ? 0 : to_int(it.cost_at(level));
      r -= to_int(it.profit);
    }
  }

  Evaluation ev = evaluate(instance, sol);
  if (!ev.feasible || ev.total_profit != best_r)
    throw std::logic_error("dp_exact: reconstructed solution does not match the table");

  RunReport report;
  report.algorithm = "dp";
  report.bound = 1;
  report.solution = std::move(sol);
  report.objective = best_r;
  report.wall_ms = ms_since(start);
  return report;
}

RunReport ptas_scaled(const Instance& instance, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("ptas_scaled: eps must be positive");
  require_integral_data(instance, false);
  auto start = Clock::now();

  RunReport report;
  report.algorithm = "ptas";
  report.bound = 1 - eps;

  // Scale by the largest profit among items that fit alone in some form;
  // that profit is a lower bound on the optimum, which the loss argument
  // needs. Items with no feasible form can never contribute.
  Rational p_max = 0;
  for (int i = 0; i < instance.size(); ++i)
    for (int l = 0; l <= instance.items[static_cast<size_t>(i)].num_levels(); ++l)
      if (form_fits(instance, i, l)) {
        p_max = std::max(p_max, instance.items[static_cast<size_t>(i)].profit);
        break;
      }
  if (p_max == 0 || instance.size() == 0) {
    report.solution = Solution::empty(instance.size());
    report.objective = 0;
    report.wall_ms = ms_since(start);
    return report;
  }

  Rational scale = eps * p_max / instance.size();  // K
  Instance scaled = instance;
  for (Item& it : scaled.items) it.profit = Rational(floor_ll(it.profit / scale));

  RunReport inner = dp_exact(scaled);
  Evaluation ev = evaluate(instance, inner.solution);
  if (!ev.feasible) throw std::logic_error("ptas_scaled: DP solution infeasible under original data");

  report.solution = std::move(inner.solution);
  report.objective = ev.total_profit;
  report.wall_ms = ms_since(start);
  return report;
}

RunReport lp_three_approx(const Instance& instance) {
  if (instance.mode != ImprovementMode::Discrete)
    throw std::invalid_argument("lp_three_approx: instance is not in discrete mode");
  auto start = Clock::now();

  RunReport report;
  report.algorithm = "lp3";
  report.bound = Rational(1, 3);

  const int n = instance.size();

  // Variables: x_0..x_{n-1}, then the improvement chains item by item.
  LinearProgram lp;
  std::vector<int> y_offset(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    (void)lp.add_variable(instance.items[static_cast<size_t>(i)].profit, 0, Rational(1));
  for (int i = 0; i < n; ++i) {
    y_offset[static_cast<size_t>(i)] = lp.num_vars();
    for (int l = 0; l < instance.items[static_cast<size_t>(i)].num_levels(); ++l)
      (void)lp.add_variable(0, 0, Rational(1));
  }
  const int total = lp.num_vars();

  LinearProgram::Row wrow, crow;
  wrow.coeffs.assign(static_cast<size_t>(total), Rational(0));
  crow.coeffs.assign(static_cast<size_t>(total), Rational(0));
  std::vector<LinearProgram::Row> chain;
  for (int i = 0; i < n; ++i) {
    const Item& it = instance.items[static_cast<size_t>(i)];
    wrow.coeffs[static_cast<size_t>(i)] = it.base_weight;
    for (int l = 1; l <= it.num_levels(); ++l) {
      int v = y_offset[static_cast<size_t>(i)] + l - 1;
      wrow.coeffs[static_cast<size_t>(v)] = it.weight_at(l) - it.weight_at(l - 1);
      crow.coeffs[static_cast<size_t>(v)] = it.cost_at(l) - it.cost_at(l - 1);
      LinearProgram::Row link;  // y_i^l <= y_i^{l-1} (or x_i for l = 1)
      link.coeffs.assign(static_cast<size_t>(total), Rational(0));
      link.coeffs[static_cast<size_t>(v)] = 1;
      link.coeffs[static_cast<size_t>(l == 1 ? i : v - 1)] = -1;
      link.rhs = 0;
      chain.push_back(std::move(link));
    }
  }
  wrow.rhs = instance.knapsack_budget;
  crow.rhs = instance.improvement_budget;
  lp.rows = {wrow, crow};
  for (auto& row : chain) lp.rows.push_back(std::move(row));

  BasicLpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("lp_three_approx: LP not optimal");
  report.diag.fractional_vars = static_cast<int>(fractional_vars(sol).size());

  std::vector<int> non_integral;
  Solution integral_part = Solution::empty(n);
  for (int i = 0; i < n; ++i) {
    const Item& it = instance.items[static_cast<size_t>(i)];
    bool ok = is_integral(sol.values[static_cast<size_t>(i)]);
    int level = 0;
    for (int l = 1; l <= it.num_levels(); ++l) {
      const Rational& yv = sol.values[static_cast<size_t>(y_offset[static_cast<size_t>(i)] + l - 1)];
      if (!is_integral(yv)) ok = false;
      if (yv == 1) level = l;
    }
    if (!ok) {
      non_integral.push_back(i);
    } else if (sol.values[static_cast<size_t>(i)] == 1) {
      integral_part.packed[static_cast<size_t>(i)] = 1;
      integral_part.improvement[static_cast<size_t>(i)] = level;
    }
  }
  report.diag.non_integral_items = static_cast<int>(non_integral.size());
  if (non_integral.size() > 2)
    throw std::logic_error("lp_three_approx: more than two non-integral items in a basic solution");

  Solution best = Solution::empty(n);
  Rational best_value = 0;
  auto keep = [&](const Solution& cand) {
    Evaluation ev = evaluate(instance, cand);
    if (!ev.feasible) throw std::logic_error("lp_three_approx: candidate infeasible");
    if (ev.total_profit > best_value) {
      best = cand;
      best_value = ev.total_profit;
    }
  };
  keep(integral_part);
  for (int i : non_integral) {
    // Cheapest individually feasible form; preprocessing guarantees one.
    Solution s = Solution::empty(n);
    s.packed[static_cast<size_t>(i)] = 1;
    int level = -1;
    for (int l = 0; l <= instance.items[static_cast<size_t>(i)].num_levels(); ++l)
      if (form_fits(instance, i, l)) {
        level = l;
        break;
      }
    if (level < 0) throw std::logic_error("lp_three_approx: non-integral item has no feasible form");
    s.improvement[static_cast<size_t>(i)] = level;
    keep(s);
  }

  if (non_integral.empty()) report.bound = 1;
  report.solution = std::move(best);
  report.objective = best_value;
  report.wall_ms = ms_since(start);
  return report;
}

}  // namespace multilevel
}  // namespace ikp
