#include "ikp/oracle.hpp"

#include "ikp/continuous.hpp"

namespace ikp {
namespace oracle {

Result exact_discrete(const Instance& instance, long long limit) {
  if (instance.mode != ImprovementMode::Discrete)
    throw std::invalid_argument("exact_discrete: instance is not in discrete mode");
  const int n = instance.size();

  long long states = 1;
  for (const Item& it : instance.items) {
    states *= it.num_levels() + 2;
    if (states > limit)
      throw LimitError("exact_discrete: state count exceeds limit " + std::to_string(limit));
  }

  Result best{Solution::empty(n), Rational(0)};
  Solution current = Solution::empty(n);
  bool have_best = false;

  // DFS over item states: unpacked, or packed at level 0..j(i).
  auto recurse = [&](auto&& self, int i, const Rational& profit, const Rational& weight,
                     const Rational& cost) -> void {
    if (weight > instance.knapsack_budget || cost > instance.improvement_budget) return;
    if (i == n) {
      if (!have_best || profit > best.value) {
        best.solution = current;
        best.value = profit;
        have_best = true;
      }
      return;
    }
    const Item& it = instance.items[static_cast<size_t>(i)];
    current.packed[static_cast<size_t>(i)] = 0;
    current.improvement[static_cast<size_t>(i)] = 0;
    self(self, i + 1, profit, weight, cost);
    current.packed[static_cast<size_t>(i)] = 1;
    for (int level = 0; level <= it.num_levels(); ++level) {
      current.improvement[static_cast<size_t>(i)] = level;
      self(self, i + 1, profit + it.profit, weight + it.weight_at(level), cost + it.cost_at(level));
    }
    current.packed[static_cast<size_t>(i)] = 0;
    current.improvement[static_cast<size_t>(i)] = 0;
  };
  recurse(recurse, 0, Rational(0), Rational(0), Rational(0));
  return best;
}

Result exact_continuous(const Instance& instance, long long limit) {
  if (instance.mode != ImprovementMode::Continuous)
    throw std::invalid_argument("exact_continuous: instance is not in continuous mode");
  if (!instance.single_level())
    throw std::invalid_argument("exact_continuous: instance is not single-level");
  const int n = instance.size();
  if (n < 63 && (1LL << n) > limit)
    throw LimitError("exact_continuous: 2^n exceeds limit " + std::to_string(limit));

  Result best{Solution::empty(n), Rational(0)};
  std::vector<int> packed(static_cast<size_t>(n), 0);

  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    Rational profit = 0, weight = 0;
    for (int i = 0; i < n; ++i) {
      packed[static_cast<size_t>(i)] = (mask >> i) & 1ULL;
      if (packed[static_cast<size_t>(i)]) {
        profit += instance.items[static_cast<size_t>(i)].profit;
        weight += instance.items[static_cast<size_t>(i)].base_weight;
      }
    }
    if (profit <= best.value && mask != 0) continue;
    auto g = continuous::greedy_improvement(instance, packed, instance.improvement_budget);
    if (weight - g.reduction > instance.knapsack_budget) continue;
    if (mask == 0 || profit > best.value) {
      best.value = profit;
      best.solution.packed = packed;
      best.solution.improvement = g.y;
    }
  }
  return best;
}

}  // namespace oracle
}  // namespace ikp
