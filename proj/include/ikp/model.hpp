#ifndef IKP_MODEL_HPP
#define IKP_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ikp/rational.hpp"

namespace ikp {

/// One improvement step of an item: the item's weight after taking this step
/// and the cumulative cost of all steps up to and including it.
struct ImprovementLevel {
  Rational weight;
  Rational cost;
};

struct Item {
  Rational profit;
  Rational base_weight;
  std::vector<ImprovementLevel> levels;  // ordered, weights non-increasing, costs non-decreasing

  int num_levels() const { return static_cast<int>(levels.size()); }

  /// Weight when used at improvement level `level` (0 = unimproved).
  const Rational& weight_at(int level) const {
    return level == 0 ? base_weight : levels.at(static_cast<size_t>(level) - 1).weight;
  }
  /// Cumulative improvement cost at level `level` (0 for the base form).
  Rational cost_at(int level) const {
    return level == 0 ? Rational(0) : levels.at(static_cast<size_t>(level) - 1).cost;
  }

  // Single-level shorthands. Items without a level behave as non-improvable.
  Rational reduction() const { return levels.empty() ? Rational(0) : base_weight - levels[0].weight; }
  Rational improvement_cost() const { return levels.empty() ? Rational(0) : levels[0].cost; }
  Rational improved_weight() const { return levels.empty() ? base_weight : levels[0].weight; }
};

enum class ImprovementMode { Continuous, Discrete };

struct Instance {
  std::vector<Item> items;
  Rational knapsack_budget;     // B
  Rational improvement_budget;  // C
  ImprovementMode mode = ImprovementMode::Discrete;

  int size() const { return static_cast<int>(items.size()); }

  bool single_level() const {
    for (const auto& it : items)
      if (it.num_levels() > 1) return false;
    return true;
  }

  bool unit_costs() const {
    if (!single_level()) return false;
    for (const auto& it : items)
      if (!it.levels.empty() && it.levels[0].cost != 1) return false;
    return true;
  }
};

/// Packing plus per-item improvement. In discrete mode `improvement[i]` is an
/// integral level in {0..j(i)}; in continuous mode a rational y_i in [0,1].
/// Unpacked items carry improvement 0.
struct Solution {
  std::vector<int> packed;            // 0/1 per item
  std::vector<Rational> improvement;  // level or y_i per item

  static Solution empty(int n) {
    return Solution{std::vector<int>(static_cast<size_t>(n), 0),
                    std::vector<Rational>(static_cast<size_t>(n), Rational(0))};
  }
};

struct Evaluation {
  Rational total_profit;
  Rational effective_weight;
  Rational improvement_cost;
  bool feasible = false;
};

struct Violation {
  int item;   // -1 for instance-wide violations
  int level;  // 0 if not level-specific
  std::string message;
};

/// Checks all type invariants. Empty result iff the instance is well formed;
/// violations are returned as data, never thrown.
std::vector<Violation> validate(const Instance& instance);

/// Exact evaluation of a solution: profit, effective weight, improvement cost,
/// and feasibility against both budgets.
/// Throws std::invalid_argument on dimension mismatch, out-of-range
/// improvement values, or nonzero improvement of an unpacked item.
Evaluation evaluate(const Instance& instance, const Solution& solution);

struct PreprocessResult {
  Instance instance;
  std::vector<int> original_index;  // new item index -> original item index
  // Per kept item, original level index of each surviving level (position
  // l - 1 holds the original index of new level l). Discrete preprocessing
  // renumbers levels when it drops some; lifting must translate back.
  std::vector<std::vector<int>> original_level;
};

/// Removes item forms no feasible solution can use, preserving the optimum.
/// Discrete mode: drops every level with weight > B or cost > C, then items
/// with no surviving form at all. Continuous mode: levels stay (partial
/// improvement may use them), only items unpackable even at the best
/// improvement affordable within C are dropped.
PreprocessResult preprocess(const Instance& instance);

/// True iff packing item `i` at level `level` is feasible on its own.
bool form_fits(const Instance& instance, int item, int level);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document {"B","C","mode","items":[{"p","w","levels":[{"w","c"},...]},...]}
/// with all numbers as exact decimal strings (or "num/den"). Throws ParseError.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

/// {"packed":[0/1,...], "improvement":["level or rational",...]}
Solution parse_solution(const std::string& text);
std::string serialize_solution(const Solution& solution);

/// Lifts a solution on a preprocessed instance back to the original item
/// indexing; removed items stay unpacked.
Solution lift_solution(const PreprocessResult& pre, int original_n, const Solution& solution);

}  // namespace ikp

#endif
