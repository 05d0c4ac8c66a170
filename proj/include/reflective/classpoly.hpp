#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reflective/integer.hpp"
#include "reflective/intpoly.hpp"

namespace reflective {

/// A class in the Chow ring Z[H]/(H^N) of P^{N-1}, stored as exactly N
/// coefficients in ascending powers of the hyperplane class H.
///
/// The coefficient of H^k is the k-codimensional part of the class. For the
/// CSM or Chern-Mather class of an irreducible variety the lowest nonzero
/// coefficient is its degree and sits in the codimension of the variety; the
/// top coefficient is the Euler characteristic.
class ClassPoly {
 public:
  /// The zero class in Z[H]/(H^modulus).
  explicit ClassPoly(std::size_t modulus);
  /// Coefficients beyond the modulus are dropped; missing ones are zero.
  ClassPoly(std::vector<Integer> coeffs, std::size_t modulus);
  static ClassPoly from(std::initializer_list<long> coeffs, std::size_t modulus);
  static ClassPoly monomial(std::size_t power, std::size_t modulus, const Integer& c = 1);
  /// Truncation of an untruncated polynomial.
  static ClassPoly truncate(const IntPoly& p, std::size_t modulus);

  std::size_t modulus() const { return coeffs_.size(); }
  /// Dimension of the ambient projective space, N - 1.
  long ambient_dim() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Power of H of the lowest nonzero coefficient.
  std::optional<std::size_t> codim() const;
  /// N - 1 - codim. Throws InvalidInput on the zero class.
  long dim() const;
  /// Highest power with nonzero coefficient, -1 for zero.
  long poly_degree() const;
  Integer euler_characteristic() const { return coeffs_.back(); }
  Integer degree() const;

  Integer eval(const Integer& t) const;
  IntPoly to_intpoly() const;

  ClassPoly& operator+=(const ClassPoly& o);
  ClassPoly& operator-=(const ClassPoly& o);
  ClassPoly& operator*=(const Integer& c);

  friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
  friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
  friend ClassPoly operator*(ClassPoly a, const Integer& c) { return a *= c; }
  friend ClassPoly operator*(const Integer& c, ClassPoly a) { return a *= c; }
  friend ClassPoly operator-(ClassPoly a) { return a *= Integer(-1); }
  friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
  friend bool operator==(const ClassPoly& a, const ClassPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "a0 + a1*H + a2*H^2", zero terms omitted.
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

ClassPoly add(const ClassPoly& f, const ClassPoly& g);
ClassPoly scale(const ClassPoly& f, const Integer& a);
ClassPoly mul(const ClassPoly& f, const ClassPoly& g);

/// I_d(f) = f(-1-H) - f(-1)((1+H)^{d+1} - H^{d+1}).
/// Requires deg f <= d and N >= d + 1, so nothing is lost to truncation.
ClassPoly involute(const ClassPoly& f, long d);

/// (-1)^{dim f} f with the dimension read off the lowest coefficient.
ClassPoly signed_class(const ClassPoly& f);
/// Same, with the dimension supplied by the caller.
ClassPoly signed_class(const ClassPoly& f, long dim);

/// B_n = (1+H)^{n+1} - H^{n+1}, the pushforward CSM class of a linear P^n.
ClassPoly chern_B(long n, std::size_t modulus);

/// f / (1 + 2H) as a truncated power series.
ClassPoly div_1p2H(const ClassPoly& f);

/// Parses "a0,a1,..." (whitespace tolerated).
std::vector<Integer> parse_coeff_list(const std::string& text);
std::string join_coeffs(std::span<const Integer> coeffs, const std::string& sep = ",");

}  // namespace reflective
