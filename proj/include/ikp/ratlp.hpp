#ifndef IKP_RATLP_HPP
#define IKP_RATLP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ikp/rational.hpp"

namespace ikp {

/// Maximization LP over exact rationals with per-variable bounds.
/// Bounds are handled implicitly by the simplex, never as rows, so that the
/// basis size equals the row count and the fractionality census of a basic
/// solution is directly readable.
struct LinearProgram {
  enum class Relation { LessEq, Eq };

  struct Row {
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEq;
    Rational rhs;
  };

  std::vector<Rational> objective;  // maximize objective . x
  std::vector<Row> rows;
  std::vector<Rational> lower;                 // finite lower bound per variable
  std::vector<std::optional<Rational>> upper;  // nullopt = unbounded above

  int num_vars() const { return static_cast<int>(objective.size()); }

  /// Variable with bounds [lo, up]; returns its index.
  int add_variable(const Rational& obj, const Rational& lo, std::optional<Rational> up);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// A vertex of the feasible polyhedron. `basis` lists the basic column ids
/// (structural variables first, then one slack per row).
struct BasicLpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;  // structural variables only
  Rational objective;
  std::vector<int> basis;
  int num_structural = 0;
};

/// Bounded-variable primal simplex with Bland's pivoting rule, exact rational
/// arithmetic throughout. Phase 1 uses auxiliary variables; the returned
/// optimum is always a basic feasible solution, and constraints, bounds and
/// reduced-cost signs are re-verified before returning.
BasicLpSolution solve(const LinearProgram& lp);

/// Structural variables with a non-integral value in an optimal solution.
/// Exact rational test, no tolerance. Throws std::invalid_argument if the
/// solution is not optimal.
std::vector<std::pair<int, Rational>> fractional_vars(const BasicLpSolution& sol);

}  // namespace ikp

#endif
