#include "ikp/continuous.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ikp {
namespace continuous {

namespace {

// 0 = free improvement (c=0, w̄>0), 1 = paid, 2 = non-improvable (w̄=0).
int ratio_class(const Item& it) {
  if (it.reduction() == 0) return 2;
  return it.improvement_cost() == 0 ? 0 : 1;
}

}  // namespace

std::vector<int> improvement_order(const Instance& instance) {
  std::vector<int> order(static_cast<size_t>(instance.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Item& ia = instance.items[static_cast<size_t>(a)];
    const Item& ib = instance.items[static_cast<size_t>(b)];
    int ca = ratio_class(ia), cb = ratio_class(ib);
    if (ca != cb) return ca < cb;
    if (ca == 1) {
      // c_a/w̄_a < c_b/w̄_b, cross-multiplied to stay exact.
      Rational lhs = ia.improvement_cost() * ib.reduction();
      Rational rhs = ib.improvement_cost() * ia.reduction();
      if (lhs != rhs) return lhs < rhs;
    }
    return a < b;
  });
  return order;
}

GreedyResult greedy_improvement(const Instance& instance, const std::vector<int>& packed,
                                const Rational& budget) {
  GreedyResult res;
  res.y.assign(instance.items.size(), Rational(0));
  res.reduction = 0;
  res.cost = 0;
  Rational spent = 0;
  for (int i : improvement_order(instance)) {
    if (!packed[static_cast<size_t>(i)]) continue;
    const Item& it = instance.items[static_cast<size_t>(i)];
    const Rational wbar = it.reduction();
    const Rational c = it.improvement_cost();
    if (wbar == 0) continue;
    if (c == 0) {
      res.y[static_cast<size_t>(i)] = 1;
      res.reduction += wbar;
    } else if (spent + c <= budget) {
      res.y[static_cast<size_t>(i)] = 1;
      res.reduction += wbar;
      spent += c;
    } else if (spent < budget) {
      Rational y = (budget - spent) / c;
      res.y[static_cast<size_t>(i)] = y;
      res.reduction += wbar * y;
      spent = budget;
    }
  }
  res.cost = spent;
  return res;
}

bool feasibility_check(const Instance& instance, const std::vector<int>& packed) {
  Rational total = 0;
  for (size_t i = 0; i < instance.items.size(); ++i)
    if (packed[i]) total += instance.items[i].base_weight;
  if (total <= instance.knapsack_budget) return true;
  GreedyResult g = greedy_improvement(instance, packed, instance.improvement_budget);
  return g.reduction >= total - instance.knapsack_budget;
}

SortedItems sorted_items(const Instance& instance) {
  if (!instance.single_level())
    throw std::invalid_argument("continuous: multi-level instances are not supported");
  SortedItems s;
  s.budget_b = instance.knapsack_budget;
  s.budget_c = instance.improvement_budget;
  for (int i : improvement_order(instance)) {
    const Item& it = instance.items[static_cast<size_t>(i)];
    s.orig.push_back(i);
    s.profit.push_back(it.profit);
    if (ratio_class(it) == 0) {
      // Free improvement applied to saturation up front.
      s.weight.push_back(it.improved_weight());
      s.reduction.push_back(0);
      s.cost.push_back(0);
    } else {
      s.weight.push_back(it.base_weight);
      s.reduction.push_back(it.reduction());
      s.cost.push_back(it.improvement_cost());
    }
  }
  return s;
}

PkProblem build_pk(const SortedItems& items, int k) {
  if (k < 0 || k >= items.size()) throw std::invalid_argument("build_pk: index out of range");
  if (items.reduction[static_cast<size_t>(k)] == 0 || items.cost[static_cast<size_t>(k)] == 0)
    throw std::invalid_argument("build_pk: degenerate fractional index (w̄_k = 0 or c_k = 0)");

  PkProblem pk;
  pk.k = k;
  for (int i = 0; i < items.size(); ++i) {
    if (i == k) continue;
    pk.positions.push_back(i);
    pk.profit.push_back(items.profit[static_cast<size_t>(i)]);
    if (i < k) {
      pk.w_coeff.push_back(items.weight[static_cast<size_t>(i)] - items.reduction[static_cast<size_t>(i)]);
      pk.c_coeff.push_back(items.cost[static_cast<size_t>(i)]);
    } else {
      pk.w_coeff.push_back(items.weight[static_cast<size_t>(i)]);
      pk.c_coeff.push_back(0);
    }
  }
  pk.y_w_coeff = -items.reduction[static_cast<size_t>(k)];
  pk.y_c_coeff = items.cost[static_cast<size_t>(k)];
  pk.w_rhs = items.budget_b - items.weight[static_cast<size_t>(k)];
  pk.c_rhs = items.budget_c;
  pk.fixed_profit = items.profit[static_cast<size_t>(k)];
  return pk;
}

namespace {

int guess_size(int n, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Rational q = 2 / eps;
  Integer qi = numerator(q) / denominator(q);
  if (qi * denominator(q) != numerator(q)) qi += 1;  // ceil
  if (qi < 1) qi = 1;
  if (qi > n) return n;
  return static_cast<int>(qi);
}

// All index subsets of {0..n-1} of the given size, lexicographic.
template <typename F>
void for_each_subset(int n, int size, F&& fn) {
  std::vector<int> pick(static_cast<size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  if (size > n) return;
  while (true) {
    fn(pick);
    int i = size - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - size + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::optional<PkSolution> ptas_pk(const SortedItems& items, const PkProblem& pk,
                                  const Rational& eps) {
  (void)items;  // the subproblem is self-contained; kept for interface symmetry
  const int nvars = static_cast<int>(pk.positions.size());
  const int q = guess_size(nvars, eps);

  std::optional<PkSolution> best;

  auto consider_packing = [&](const std::vector<int>& vars, const Rational& y) {
    Rational profit = pk.fixed_profit;
    for (int v : vars) profit += pk.profit[static_cast<size_t>(v)];
    if (!best || profit > best->profit) {
      PkSolution sol;
      for (int v : vars) sol.packed_positions.push_back(pk.positions[static_cast<size_t>(v)]);
      sol.packed_positions.push_back(pk.k);
      sol.y = y;
      sol.profit = profit;
      best = std::move(sol);
    }
  };

  // A complete packing: only y remains free, pick the cheapest feasible value.
  auto try_complete = [&](const std::vector<int>& vars) {
    Rational wsum = 0, csum = 0;
    for (int v : vars) {
      wsum += pk.w_coeff[static_cast<size_t>(v)];
      csum += pk.c_coeff[static_cast<size_t>(v)];
    }
    Rational y_lo = 0;
    if (wsum > pk.w_rhs) y_lo = (wsum - pk.w_rhs) / -pk.y_w_coeff;  // y_w_coeff = -w̄_k < 0
    Rational y_hi = 1;
    Rational slack = pk.c_rhs - csum;
    if (slack < pk.y_c_coeff) y_hi = slack / pk.y_c_coeff;
    if (y_lo > y_hi || y_hi < 0) return;
    consider_packing(vars, y_lo);
  };

  for (int s = 0; s < q; ++s) for_each_subset(nvars, s, try_complete);

  // Guessed sets of size exactly q: fix them, exclude higher-profit items,
  // solve the restricted LP relaxation and round binaries down.
  for_each_subset(nvars, q, [&](const std::vector<int>& guess) {
    Rational pmin;
    bool first = true;
    for (int v : guess) {
      if (first || pk.profit[static_cast<size_t>(v)] < pmin) pmin = pk.profit[static_cast<size_t>(v)];
      first = false;
    }
    std::vector<char> in_guess(static_cast<size_t>(nvars), 0);
    for (int v : guess) in_guess[static_cast<size_t>(v)] = 1;

    Rational w_used = 0, c_used = 0;
    std::vector<int> free_vars;
    for (int v = 0; v < nvars; ++v) {
      if (in_guess[static_cast<size_t>(v)]) {
        w_used += pk.w_coeff[static_cast<size_t>(v)];
        c_used += pk.c_coeff[static_cast<size_t>(v)];
      } else if (pk.profit[static_cast<size_t>(v)] <= pmin) {
        free_vars.push_back(v);  // strict exclusion: p > pmin is out, ties stay
      }
    }

    LinearProgram lp;
    for (int v : free_vars) (void)lp.add_variable(pk.profit[static_cast<size_t>(v)], 0, Rational(1));
    int y_var = lp.add_variable(0, 0, Rational(1));
    LinearProgram::Row wrow, crow;
    wrow.coeffs.assign(static_cast<size_t>(lp.num_vars()), Rational(0));
    crow.coeffs.assign(static_cast<size_t>(lp.num_vars()), Rational(0));
    for (size_t f = 0; f < free_vars.size(); ++f) {
      wrow.coeffs[f] = pk.w_coeff[static_cast<size_t>(free_vars[f])];
      crow.coeffs[f] = pk.c_coeff[static_cast<size_t>(free_vars[f])];
    }
    wrow.coeffs[static_cast<size_t>(y_var)] = pk.y_w_coeff;
    crow.coeffs[static_cast<size_t>(y_var)] = pk.y_c_coeff;
    wrow.rhs = pk.w_rhs - w_used;
    crow.rhs = pk.c_rhs - c_used;
    lp.rows = {wrow, crow};

    BasicLpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) return;
    if (fractional_vars(sol).size() > 2)
      throw std::logic_error("ptas_pk: P(k) LP with more than two fractional variables");

    std::vector<int> vars;
    Rational rounded = 0;
    for (int v : guess) vars.push_back(v);
    for (size_t f = 0; f < free_vars.size(); ++f) {
      if (sol.values[f] == 1) {
        vars.push_back(free_vars[f]);
        rounded += pk.profit[static_cast<size_t>(free_vars[f])];
      }
    }
    // Rounding loses at most the two fractional binaries, each worth <= pmin.
    if (rounded < sol.objective - 2 * pmin)
      throw std::logic_error("ptas_pk: rounding gap exceeds 2 p_min");
    std::sort(vars.begin(), vars.end());
    consider_packing(vars, sol.values[static_cast<size_t>(y_var)]);
  });

  return best;
}

namespace {

// No-improvement candidate: a guess-and-round knapsack PTAS on the effective
// base weights. Covers optima that spend nothing of the improvement budget,
// which no P(k) represents.
std::optional<PkSolution> ptas_plain_knapsack(const SortedItems& items, const Rational& eps) {
  const int n = items.size();
  const int q = guess_size(n, eps);
  std::optional<PkSolution> best;

  auto consider = [&](const std::vector<int>& packed) {
    Rational profit = 0;
    for (int v : packed) profit += items.profit[static_cast<size_t>(v)];
    if (!best || profit > best->profit) {
      PkSolution sol;
      sol.packed_positions = packed;
      sol.y = 0;
      sol.profit = profit;
      best = std::move(sol);
    }
  };

  auto try_complete = [&](const std::vector<int>& vars) {
    Rational wsum = 0;
    for (int v : vars) wsum += items.weight[static_cast<size_t>(v)];
    if (wsum <= items.budget_b) consider(vars);
  };
  for (int s = 0; s < q; ++s) for_each_subset(n, s, try_complete);

  for_each_subset(n, q, [&](const std::vector<int>& guess) {
    Rational pmin;
    bool first = true;
    for (int v : guess) {
      if (first || items.profit[static_cast<size_t>(v)] < pmin)
        pmin = items.profit[static_cast<size_t>(v)];
      first = false;
    }
    std::vector<char> in_guess(static_cast<size_t>(n), 0);
    for (int v : guess) in_guess[static_cast<size_t>(v)] = 1;
    Rational w_used = 0;
    std::vector<int> free_vars;
    for (int v = 0; v < n; ++v) {
      if (in_guess[static_cast<size_t>(v)])
        w_used += items.weight[static_cast<size_t>(v)];
      else if (items.profit[static_cast<size_t>(v)] <= pmin)
        free_vars.push_back(v);
    }
    if (w_used > items.budget_b) return;

    LinearProgram lp;
    for (int v : free_vars) (void)lp.add_variable(items.profit[static_cast<size_t>(v)], 0, Rational(1));
    LinearProgram::Row row;
    row.coeffs.resize(free_vars.size());
    for (size_t f = 0; f < free_vars.size(); ++f)
      row.coeffs[f] = items.weight[static_cast<size_t>(free_vars[f])];
    row.rhs = items.budget_b - w_used;
    lp.rows = {row};

    BasicLpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) return;
    std::vector<int> vars(guess);
    for (size_t f = 0; f < free_vars.size(); ++f)
      if (sol.values[f] == 1) vars.push_back(free_vars[f]);
    std::sort(vars.begin(), vars.end());
    consider(vars);
  });

  return best;
}

}  // namespace

Solution ptas_ikcs(const Instance& instance, const Rational& eps) {
  if (instance.mode != ImprovementMode::Continuous)
    throw std::invalid_argument("ptas_ikcs: instance is not in continuous mode");
  SortedItems items = sorted_items(instance);
  const int n = items.size();

  std::optional<PkSolution> best = ptas_plain_knapsack(items, eps);
  int best_k = -1;  // -1 marks the no-improvement candidate
  for (int k = 0; k < n; ++k) {
    if (items.reduction[static_cast<size_t>(k)] == 0 || items.cost[static_cast<size_t>(k)] == 0)
      continue;
    auto sol = ptas_pk(items, build_pk(items, k), eps);
    if (sol && (!best || sol->profit > best->profit)) {
      best = std::move(sol);
      best_k = k;
    }
  }

  Solution out = Solution::empty(instance.size());
  if (!best) return out;
  for (int pos : best->packed_positions) {
    int orig = items.orig[static_cast<size_t>(pos)];
    const Item& it = instance.items[static_cast<size_t>(orig)];
    out.packed[static_cast<size_t>(orig)] = 1;
    if (best_k >= 0 && pos == best_k) {
      out.improvement[static_cast<size_t>(orig)] = best->y;
    } else if (it.reduction() > 0 && (it.improvement_cost() == 0 || (best_k >= 0 && pos < best_k))) {
      out.improvement[static_cast<size_t>(orig)] = 1;  // free or fully improved prefix
    }
  }

  Evaluation ev = evaluate(instance, out);
  if (!ev.feasible) throw std::logic_error("ptas_ikcs: constructed solution is infeasible");
  return out;
}

}  // namespace continuous
}  // namespace ikp
