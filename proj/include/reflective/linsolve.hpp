#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "reflective/integer.hpp"

namespace reflective {

/// Row-major dense matrix; just enough structure for exact elimination.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct ExactSolution {
  std::vector<Rational> x;
  std::size_t rank = 0;
};

/// Unique exact solution of A x = b for a consistent system with at least as
/// many rows as columns. Fraction-free (Bareiss) elimination on the row-scaled
/// integer system; the result is checked against every row of the input.
///
/// Throws Error{InconsistentSystem} when no solution exists and
/// Error{NonUniqueSolution} when A has a nontrivial kernel.
ExactSolution exact_solve(const Matrix<Rational>& A, std::span<const Rational> b);

/// Convenience wrapper that also demands an integral solution
/// (Error{NonIntegerSolution} otherwise).
std::vector<Integer> exact_solve_integer(const Matrix<Rational>& A, std::span<const Rational> b);

}  // namespace reflective
