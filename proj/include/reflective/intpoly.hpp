#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "reflective/integer.hpp"

namespace reflective {

/// Dense univariate polynomial over Z with no truncation. Used as the
/// coefficient domain for Chow-ring elements that carry a formal variable,
/// and as scratch space for substitutions.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  IntPoly(long constant) : IntPoly(Integer(constant)) {}  // NOLINT
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly from(std::initializer_list<long> coeffs);
  static IntPoly monomial(std::size_t power, const Integer& c = 1);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  Integer eval(const Integer& t) const;
  /// p(a + b*x).
  IntPoly compose_linear(const Integer& a, const Integer& b) const;
  IntPoly pow(unsigned e) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a) { return a *= Integer(-1); }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

inline bool is_zero(const IntPoly& p) { return p.is_zero(); }

}  // namespace reflective
