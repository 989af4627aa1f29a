#include "capcalc/linear_feasibility.hpp"

#include <optional>

namespace capcalc {

namespace {

// Tableau rows 0..m-1 hold constraints with the rhs in the last column;
// `basis[r]` is the basic column of row r.
class Tableau {
 public:
  Tableau(RatMatrix body, std::vector<std::size_t> basis)
      : t_(std::move(body)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.rows(); }
  std::size_t rhs_col() const { return t_.cols() - 1; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_(r, c); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j < t_.cols(); ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = -t_(i, c);
      t_.add_row_multiple(i, r, f);
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    RatMatrix next(t_.rows() - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) next(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Minimizes cost over columns [0, allowed). Returns false if unbounded.
  bool optimize(const RatVector& cost, std::size_t allowed) {
    for (;;) {
      // Reduced costs c_j - c_B B^-1 A_j; Bland: first improving column.
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < rows(); ++r) reduced -= cost[basis_[r]] * t_(r, j);
        if (reduced < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t c = *entering;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (t_(r, c) <= 0) continue;
        const Rational ratio = t_(r, rhs_col()) / t_(r, c);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, c);
    }
  }

 private:
  RatMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_linear_program(const LinearProgram& lp) {
  const std::size_t m = lp.constraints.rows();
  const std::size_t n = lp.constraints.cols();
  if (lp.rhs.size() != m || lp.cost.size() != n) throw InputError("linear program shape mismatch");

  // Phase one: artificial columns n..n+m-1, rows sign-normalized so b >= 0.
  RatMatrix body(m, n + m + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = lp.rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) body(i, j) = sign * lp.constraints(i, j);
    body(i, n + i) = 1;
    body(i, n + m) = sign * lp.rhs[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(body), std::move(basis));

  RatVector phase_one(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = 1;
  tab.optimize(phase_one, n + m);  // bounded below by zero

  Rational infeasibility = 0;
  for (std::size_t r = 0; r < tab.rows(); ++r)
    if (tab.basis()[r] >= n) infeasibility += tab.at(r, tab.rhs_col());
  LpResult out;
  if (infeasibility != 0) return out;

  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basis()[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (tab.at(r, j) != 0) col = j;
    if (col) {
      tab.pivot(r, *col);
      ++r;
    } else {
      tab.drop_row(r);  // redundant constraint
    }
  }

  RatVector phase_two(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase_two[j] = lp.cost[j];
  if (!tab.optimize(phase_two, n)) {
    out.status = LpStatus::unbounded;
    return out;
  }

  out.status = LpStatus::optimal;
  out.solution.assign(n, Rational(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) out.solution[tab.basis()[r]] = tab.at(r, tab.rhs_col());
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.cost[j] * out.solution[j];
  return out;
}

}  // namespace capcalc
