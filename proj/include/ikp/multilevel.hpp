#ifndef IKP_MULTILEVEL_HPP
#define IKP_MULTILEVEL_HPP

#include "ikp/model.hpp"
#include "ikp/report.hpp"

namespace ikp {
namespace multilevel {

/// Minimum-weight table W(i, q, r): least total weight over the first i items
/// reaching profit exactly r with improvement spend at most q. Unreachable
/// states carry the infinity sentinel (the recurrence minimizes weights, so
/// the sentinel must absorb upward).
struct DpTable {
  int n = 0;
  long long budget = 0;   // q range 0..budget
  long long max_profit = 0;  // r range 0..max_profit

  struct Cell {
    Rational weight;
    int branch = -1;  // -1 unreachable, 0 skip item, 1+level packed at `level`
  };
  std::vector<Cell> cells;

  Cell& at(int i, long long q, long long r) {
    return cells[(static_cast<size_t>(i) * static_cast<size_t>(budget + 1) +
                  static_cast<size_t>(q)) *
                     static_cast<size_t>(max_profit + 1) +
                 static_cast<size_t>(r)];
  }
  const Cell& at(int i, long long q, long long r) const {
    return const_cast<DpTable*>(this)->at(i, q, r);
  }

  bool reachable(int i, long long q, long long r) const { return at(i, q, r).branch >= 0; }
};

/// Fills the table for an instance with integral profits and improvement
/// costs; weights may be rational. C is floored to an integer spend grid.
DpTable build_dp_table(const Instance& instance);

/// Pseudo-polynomial exact solver: max{r : W(n, floor(C), r) <= B} with the
/// solution reconstructed from branch markers.
/// Throws std::invalid_argument for non-integral profits or costs (use
/// ptas_scaled instead).
RunReport dp_exact(const Instance& instance);

/// Profit-scaling PTAS: runs dp_exact on p' = floor(p / K), K = eps*p_max/n,
/// and evaluates the resulting solution under the original profits.
/// Value >= (1 - eps) * optimum. Improvement costs must be integral.
RunReport ptas_scaled(const Instance& instance, const Rational& eps);

/// LP rounding 3-approximation for the multi-level relaxation: the integral
/// sub-solution plus each of the (at most two) non-integral items packed
/// alone at its cheapest feasible level. Pre: preprocessed instance.
RunReport lp_three_approx(const Instance& instance);

}  // namespace multilevel
}  // namespace ikp

#endif
