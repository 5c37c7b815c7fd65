#ifndef IKP_CONTINUOUS_HPP
#define IKP_CONTINUOUS_HPP

#include <optional>
#include <vector>

#include "ikp/model.hpp"
#include "ikp/ratlp.hpp"

namespace ikp {
namespace continuous {

/// Permutation of item indices in improvement-cost-per-reduced-weight order
/// c_i / w̄_i ascending; free improvements (c = 0, w̄ > 0) first, items with
/// w̄ = 0 last, ties by index.
std::vector<int> improvement_order(const Instance& instance);

struct GreedyResult {
  std::vector<Rational> y;  // per original item index; 0 outside the packed set
  Rational reduction;       // total weight reduction sum w̄_i y_i
  Rational cost;            // improvement cost spent
};

/// Optimal improvement for a fixed packing: full improvement along the ratio
/// order while budget remains, one fractional item, zeros after. Free
/// improvements are always applied in full; items with w̄ = 0 are never
/// improved.
GreedyResult greedy_improvement(const Instance& instance, const std::vector<int>& packed,
                                const Rational& budget);

/// True iff some improvement vector repairs the packing, i.e. the maximum
/// achievable reduction covers the weight excess over B.
bool feasibility_check(const Instance& instance, const std::vector<int>& packed);

/// Ratio-sorted working copy of a single-level continuous instance with
/// zero-cost improvements already applied to saturation.
struct SortedItems {
  std::vector<int> orig;  // sorted position -> original item index
  std::vector<Rational> profit;
  std::vector<Rational> weight;     // effective base weight (free improvements applied)
  std::vector<Rational> reduction;  // w̄_i, zero for items pre-applied or non-improvable
  std::vector<Rational> cost;       // c_i
  Rational budget_b, budget_c;

  int size() const { return static_cast<int>(orig.size()); }
};

SortedItems sorted_items(const Instance& instance);

/// The binary subproblem for a fixed fractional index k (position in the
/// sorted order): item k is packed, items before k are improved in full,
/// items after k are unimproved, and the single continuous variable y couples
/// the two budget rows.
struct PkProblem {
  int k = -1;                      // sorted position of the fractional index
  std::vector<int> positions;      // sorted positions of the binary variables (all i != k)
  std::vector<Rational> profit;    // per binary variable
  std::vector<Rational> w_coeff;   // weight-row coefficient (w_i - w̄_i before k, w_i after)
  std::vector<Rational> c_coeff;   // cost-row coefficient (c_i before k, 0 after)
  Rational y_w_coeff;              // -w̄_k
  Rational y_c_coeff;              // c_k
  Rational w_rhs;                  // B - w_k
  Rational c_rhs;                  // C
  Rational fixed_profit;           // p_k
};

/// Builds P(k). Pre: 0 <= k < n, reduction[k] > 0 and cost[k] > 0; throws
/// std::invalid_argument for a degenerate k.
PkProblem build_pk(const SortedItems& items, int k);

struct PkSolution {
  std::vector<int> packed_positions;  // sorted positions packed, including k
  Rational y;                         // improvement of the fractional index
  Rational profit;
};

/// Guess-and-round PTAS for P(k): enumerate candidate top-profit sets of size
/// q = min(n, ceil(2/eps)), exclude items more profitable than the cheapest
/// guess, solve the restricted LP relaxation and round fractional binaries
/// down. Returns nullopt when P(k) is infeasible. The LP never shows more
/// than two fractional variables; breach raises std::logic_error.
std::optional<PkSolution> ptas_pk(const SortedItems& items, const PkProblem& pk,
                                  const Rational& eps);

/// PTAS for the single-level continuous problem: best over ptas_pk for every
/// admissible fractional index plus the no-improvement knapsack candidate.
/// Value >= (1 - eps) * optimum; the result always evaluates feasible.
Solution ptas_ikcs(const Instance& instance, const Rational& eps);

}  // namespace continuous
}  // namespace ikp

#endif
