#include "reflective/linsolve.hpp"

#include <utility>

#include "reflective/errors.hpp"

namespace reflective {

ExactSolution exact_solve(const Matrix<Rational>& A, std::span<const Rational> b) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m) throw invalid_input("right-hand side length does not match the matrix");
  if (m < n) throw invalid_input("exact_solve needs at least as many equations as unknowns");

  // Clear denominators row by row: [A | b] -> integer augmented matrix.
  Matrix<Integer> M(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = A(i, j) * l;
      M(i, j) = scaled.get_num();
    }
    Rational scaled = b[i] * l;
    M(i, n) = scaled.get_num();
  }

  // Bareiss elimination to row echelon form; pivots may skip columns.
  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && is_zero(M(p, col))) ++p;
    if (p == m) continue;
    if (p != row) {
      for (std::size_t j = 0; j <= n; ++j) std::swap(M(p, j), M(row, j));
    }
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j) {
        Integer v = M(row, col) * M(i, j) - M(i, col) * M(row, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M(i, col) = 0;
    }
    prev = M(row, col);
    pivot_cols.push_back(col);
    ++row;
  }

  const std::size_t rank = pivot_cols.size();
  for (std::size_t i = rank; i < m; ++i) {
    if (!is_zero(M(i, n))) {
      throw Error(ErrorKind::InconsistentSystem,
                  "equation " + std::to_string(i) + " of the reduced system has no solution");
    }
  }
  if (rank < n) {
    throw Error(ErrorKind::NonUniqueSolution,
                "rank " + std::to_string(rank) + " < " + std::to_string(n) + " unknowns");
  }

  std::vector<Rational> x(n);
  for (std::size_t k = rank; k-- > 0;) {
    Rational acc = M(k, n);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(M(k, j)) * x[j];
    x[k] = acc / Rational(M(k, k));
    x[k].canonicalize();
  }

  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += A(i, j) * x[j];
    if (lhs != b[i]) {
      throw Error(ErrorKind::InconsistentSystem, "solution fails equation " + std::to_string(i));
    }
  }
  return {std::move(x), rank};
}

std::vector<Integer> exact_solve_integer(const Matrix<Rational>& A, std::span<const Rational> b) {
  ExactSolution sol = exact_solve(A, b);
  std::vector<Integer> out;
  out.reserve(sol.x.size());
  for (std::size_t j = 0; j < sol.x.size(); ++j) {
    if (sol.x[j].get_den() != 1) {
      throw Error(ErrorKind::NonIntegerSolution,
                  "unknown " + std::to_string(j) + " = " + sol.x[j].get_str() + " is not an integer");
    }
    out.push_back(sol.x[j].get_num());
  }
  return out;
}

}  // namespace reflective
