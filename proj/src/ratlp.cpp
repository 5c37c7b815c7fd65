#include "ikp/ratlp.hpp"

#include <stdexcept>

namespace ikp {

int LinearProgram::add_variable(const Rational& obj, const Rational& lo, std::optional<Rational> up) {
  objective.push_back(obj);
  lower.push_back(lo);
  upper.push_back(std::move(up));
  for (auto& row : rows) row.coeffs.push_back(0);
  return num_vars() - 1;
}

namespace {

// Bounded-variable tableau simplex. Columns: structural, then one slack per
// row, then phase-1 auxiliaries.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    n_ = lp.num_vars();
    m_ = static_cast<int>(lp.rows.size());
    if (static_cast<int>(lp.lower.size()) != n_ || static_cast<int>(lp.upper.size()) != n_)
      throw std::invalid_argument("ratlp: bound vectors do not match variable count");
    for (int j = 0; j < n_; ++j)
      if (lp.upper[j] && *lp.upper[j] < lp.lower[j])
        throw std::invalid_argument("ratlp: lower bound exceeds upper bound");
    for (const auto& row : lp.rows)
      if (static_cast<int>(row.coeffs.size()) != n_)
        throw std::invalid_argument("ratlp: row width does not match variable count");

    ncols_ = n_ + m_;
    tab_.assign(m_, std::vector<Rational>(ncols_, Rational(0)));
    rhs_.resize(m_);
    lo_.resize(ncols_);
    up_.resize(ncols_);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lp.lower[j];
      up_[j] = lp.upper[j];
    }
    for (int r = 0; r < m_; ++r) {
      for (int j = 0; j < n_; ++j) tab_[r][j] = lp.rows[r].coeffs[j];
      int slack = n_ + r;
      tab_[r][slack] = 1;
      lo_[slack] = 0;
      up_[slack] = lp.rows[r].relation == LinearProgram::Relation::Eq
                       ? std::optional<Rational>(Rational(0))
                       : std::nullopt;
      rhs_[r] = lp.rows[r].rhs;
    }

    x_.assign(ncols_, Rational(0));
    at_upper_.assign(ncols_, false);
    is_basic_.assign(ncols_, false);
    for (int j = 0; j < ncols_; ++j) x_[j] = lo_[j];

    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      Rational residual = rhs_[r];
      for (int j = 0; j < ncols_; ++j) residual -= tab_[r][j] * x_[j];
      int slack = n_ + r;
      bool slack_usable = lp.rows[r].relation == LinearProgram::Relation::LessEq && residual >= 0;
      if (slack_usable) {
        basis_[r] = slack;
      } else {
        int aux = static_cast<int>(lo_.size());
        lo_.push_back(0);
        up_.push_back(std::nullopt);
        x_.push_back(0);
        at_upper_.push_back(false);
        is_basic_.push_back(false);
        aux_.push_back(aux);
        for (int rr = 0; rr < m_; ++rr) tab_[rr].push_back(0);
        tab_[r][aux] = residual < 0 ? Rational(-1) : Rational(1);
        basis_[r] = aux;
        ++ncols_;
      }
      is_basic_[basis_[r]] = true;
      // Normalize so the basic column of row r is +1.
      if (tab_[r][basis_[r]] != 1) {
        Rational piv = tab_[r][basis_[r]];
        for (int j = 0; j < ncols_; ++j)
          if (tab_[r][j] != 0) tab_[r][j] /= piv;
        rhs_[r] /= piv;
      }
    }
    ncols_ = static_cast<int>(lo_.size());
  }

  BasicLpSolution run() {
    // Phase 1: drive the auxiliaries to zero.
    if (!aux_.empty()) {
      std::vector<Rational> cost(ncols_, Rational(0));
      for (int a : aux_) cost[a] = -1;
      LpStatus st = iterate(cost);
      if (st != LpStatus::Optimal) throw std::logic_error("ratlp: phase 1 cannot be unbounded");
      refresh_basic_values();
      Rational infeas = 0;
      for (int a : aux_) infeas += x_[a];
      if (infeas != 0) return BasicLpSolution{LpStatus::Infeasible, {}, Rational(0), {}, n_};
      for (int a : aux_) up_[a] = Rational(0);
      expel_basic_auxiliaries();
    }

    std::vector<Rational> cost(ncols_, Rational(0));
    for (int j = 0; j < n_; ++j) cost[j] = lp_.objective[j];
    LpStatus st = iterate(cost);
    BasicLpSolution sol;
    sol.status = st;
    sol.num_structural = n_;
    if (st != LpStatus::Optimal) return sol;

    refresh_basic_values();
    sol.values.assign(x_.begin(), x_.begin() + n_);
    sol.objective = 0;
    for (int j = 0; j < n_; ++j) sol.objective += lp_.objective[j] * x_[j];
    sol.basis = basis_;
    verify(sol, cost);
    return sol;
  }

 private:
  void refresh_basic_values() {
    for (int r = 0; r < m_; ++r) {
      Rational v = rhs_[r];
      for (int j = 0; j < ncols_; ++j)
        if (!is_basic_[j] && x_[j] != 0) v -= tab_[r][j] * x_[j];
      x_[basis_[r]] = v;
    }
  }

  void pivot(int row, int col) {
    Rational piv = tab_[row][col];
    for (int j = 0; j < ncols_; ++j)
      if (tab_[row][j] != 0) tab_[row][j] /= piv;
    rhs_[row] /= piv;
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      Rational f = tab_[r][col];
      if (f == 0) continue;
      for (int j = 0; j < ncols_; ++j)
        if (tab_[row][j] != 0) tab_[r][j] -= f * tab_[row][j];
      tab_[r][col] = 0;
      rhs_[r] -= f * rhs_[row];
    }
    is_basic_[basis_[row]] = false;
    is_basic_[col] = true;
    basis_[row] = col;
  }

  // After phase 1, pivot zero-valued auxiliaries out of the basis where a
  // non-auxiliary column is available; rows with none are redundant.
  void expel_basic_auxiliaries() {
    for (int r = 0; r < m_; ++r) {
      int b = basis_[r];
      if (b < n_ + m_) continue;
      for (int j = 0; j < n_ + m_; ++j) {
        if (is_basic_[j] || tab_[r][j] == 0) continue;
        if (up_[j] && *up_[j] == lo_[j]) continue;  // fixed, keep out of the basis
        pivot(r, j);
        break;
      }
    }
  }

  LpStatus iterate(const std::vector<Rational>& cost) {
    const long max_iter = 2000L * (m_ + ncols_ + 4);
    for (long iter = 0; iter < max_iter; ++iter) {
      refresh_basic_values();

      // Reduced costs via the basic-row prices.
      std::vector<Rational> price(m_);
      for (int r = 0; r < m_; ++r) price[r] = cost[basis_[r]];

      int enter = -1;
      int dir = 0;
      for (int j = 0; j < ncols_ && enter < 0; ++j) {
        if (is_basic_[j]) continue;
        if (up_[j] && *up_[j] == lo_[j]) continue;  // fixed
        Rational d = cost[j];
        for (int r = 0; r < m_; ++r)
          if (price[r] != 0 && tab_[r][j] != 0) d -= price[r] * tab_[r][j];
        if (!at_upper_[j] && d > 0) {
          enter = j;
          dir = 1;
        } else if (at_upper_[j] && d < 0) {
          enter = j;
          dir = -1;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      // Ratio test: smallest step, ties broken by smallest blocking variable
      // index (Bland). The entering variable's own opposite bound competes.
      bool bounded = false;
      Rational best_t;
      int leave_row = -1;     // -1 = bound flip of the entering variable
      int leave_var = enter;  // blocking variable id for the tie-break
      bool leave_to_upper = false;

      if (up_[enter]) {
        bounded = true;
        best_t = *up_[enter] - lo_[enter];
      }
      for (int r = 0; r < m_; ++r) {
        const Rational& coef = tab_[r][enter];
        if (coef == 0) continue;
        int b = basis_[r];
        Rational rate = -coef * dir;  // d x_b / d t
        Rational t;
        bool to_upper;
        if (rate < 0) {
          t = (x_[b] - lo_[b]) / -rate;
          to_upper = false;
        } else {
          if (!up_[b]) continue;
          t = (*up_[b] - x_[b]) / rate;
          to_upper = true;
        }
        if (!bounded || t < best_t || (t == best_t && b < leave_var)) {
          bounded = true;
          best_t = t;
          leave_row = r;
          leave_var = b;
          leave_to_upper = to_upper;
        }
      }
      if (!bounded) return LpStatus::Unbounded;

      if (leave_row < 0) {
        at_upper_[enter] = !at_upper_[enter];
        x_[enter] = at_upper_[enter] ? *up_[enter] : lo_[enter];
      } else {
        Rational enter_val = (at_upper_[enter] ? *up_[enter] : lo_[enter]) + best_t * dir;
        int b = basis_[leave_row];
        at_upper_[b] = leave_to_upper;
        x_[b] = leave_to_upper ? *up_[b] : lo_[b];
        pivot(leave_row, enter);
        x_[enter] = enter_val;
        at_upper_[enter] = false;
      }
    }
    throw std::logic_error("ratlp: iteration limit exceeded (cycling?)");
  }

  void verify(const BasicLpSolution& sol, const std::vector<Rational>& cost) const {
    for (int j = 0; j < n_; ++j) {
      if (sol.values[j] < lp_.lower[j]) throw std::logic_error("ratlp: lower bound violated");
      if (lp_.upper[j] && sol.values[j] > *lp_.upper[j])
        throw std::logic_error("ratlp: upper bound violated");
    }
    for (const auto& row : lp_.rows) {
      Rational lhs = 0;
      for (int j = 0; j < n_; ++j)
        if (row.coeffs[j] != 0) lhs += row.coeffs[j] * sol.values[j];
      if (row.relation == LinearProgram::Relation::Eq ? lhs != row.rhs : lhs > row.rhs)
        throw std::logic_error("ratlp: constraint violated at claimed optimum");
    }
    // Dual sign-feasibility: no nonbasic variable prices an improving step.
    std::vector<Rational> price(m_);
    for (int r = 0; r < m_; ++r) price[r] = cost[basis_[r]];
    for (int j = 0; j < ncols_; ++j) {
      if (is_basic_[j]) continue;
      if (up_[j] && *up_[j] == lo_[j]) continue;
      Rational d = cost[j];
      for (int r = 0; r < m_; ++r)
        if (price[r] != 0 && tab_[r][j] != 0) d -= price[r] * tab_[r][j];
      if ((!at_upper_[j] && d > 0) || (at_upper_[j] && d < 0))
        throw std::logic_error("ratlp: reduced costs not sign-feasible at claimed optimum");
    }
  }

  const LinearProgram& lp_;
  int n_ = 0, m_ = 0, ncols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<Rational> lo_;
  std::vector<std::optional<Rational>> up_;
  std::vector<Rational> x_;
  std::vector<int> basis_;
  std::vector<int> aux_;
  std::vector<bool> is_basic_;
  std::vector<bool> at_upper_;
};

}  // namespace

BasicLpSolution solve(const LinearProgram& lp) { return Simplex(lp).run(); }

std::vector<std::pair<int, Rational>> fractional_vars(const BasicLpSolution& sol) {
  if (sol.status != LpStatus::Optimal)
    throw std::invalid_argument("fractional_vars: solution is not optimal");
  std::vector<std::pair<int, Rational>> out;
  for (int j = 0; j < sol.num_structural; ++j)
    if (!is_integral(sol.values[j])) out.emplace_back(j, sol.values[j]);
  return out;
}

}  // namespace ikp
