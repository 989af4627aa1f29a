#include "capcalc/linalg.hpp"

namespace capcalc {

namespace {

// Reduced row echelon form in place over an augmented matrix; returns pivot columns
// restricted to the first `coefficient_cols` columns.
std::vector<std::size_t> reduce(RatMatrix& m, std::size_t coefficient_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < coefficient_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = -m(i, c);
      m.add_row_multiple(i, r, f);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const RatMatrix& a) {
  RatMatrix m = a;
  return reduce(m, m.cols()).size();
}

std::size_t rational_rank(const IntMatrix& a) { return rational_rank(to_rational(a)); }

AffineSolution solve_affine(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length does not match matrix");
  const std::size_t n = a.cols();
  RatMatrix m(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  const auto pivots = reduce(m, n);

  AffineSolution out;
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (m(i, n) != 0) return out;
  out.consistent = true;

  out.particular.assign(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = m(r, n);

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(z);
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a) {
  const RatVector zero(a.rows(), Rational(0));
  const auto sol = solve_affine(to_rational(a), zero);
  std::vector<IntVector> out;
  for (const auto& v : sol.kernel) out.push_back(primitive_integer_vector(v));
  return out;
}

}  // namespace capcalc
