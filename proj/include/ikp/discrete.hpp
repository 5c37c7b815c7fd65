#ifndef IKP_DISCRETE_HPP
#define IKP_DISCRETE_HPP

#include <vector>

#include "ikp/model.hpp"
#include "ikp/report.hpp"

namespace ikp {
namespace discrete {

/// Classic greedy-by-density knapsack with the best-single-item safeguard.
/// Returns the selected indices; value >= KP*/2. Pre: every item fits alone.
std::vector<int> greedy_kp_2approx(const std::vector<Rational>& profits,
                                   const std::vector<Rational>& weights, const Rational& budget);

/// Single-level discrete 6-approximation: LP rounding of the two-constraint
/// knapsack on improved forms vs. greedy knapsack on base forms.
/// Pre: single-level discrete instance, preprocessed.
RunReport six_approx(const Instance& instance);

/// Unit-cost 3-approximation via the cardinality-constrained doubled-item
/// relaxation CKP'. Pre: unit costs, preprocessed.
RunReport ckp_three_approx(const Instance& instance);

/// Tight-constraint category of one item at an LP vertex of the unit-cost
/// relaxation: which of {y_i = 0, x_i = y_i, x_i = 1} hold.
enum class ItemType { T1, T2, T3, T4 };

struct ItemCategory {
  ItemType type = ItemType::T1;
  bool tight_y_zero = false;
  bool tight_x_eq_y = false;
  bool tight_x_one = false;

  bool integral() const { return type == ItemType::T4; }
};

/// Per-item census over the values of an optimal basic solution. All three
/// constraints tight simultaneously is impossible; breach throws
/// std::logic_error.
std::vector<ItemCategory> categorize_items(const std::vector<Rational>& x,
                                           const std::vector<Rational>& y);

/// Unit-cost 2-approximation from the basic-solution structure of the
/// relaxation with the cardinality row. Pre: unit costs, preprocessed.
RunReport lp_two_approx(const Instance& instance);

}  // namespace discrete
}  // namespace ikp

#endif
