#pragma once

#include <optional>
#include <utility>

#include "reflective/classpoly.hpp"
#include "reflective/strata.hpp"

namespace reflective {

/// A quadric X_A in P^n given by a symmetric (n+1)x(n+1) matrix A of rank r.
/// For r <= n the singular locus S_A is a linear P^{n-r}; r = n+1 is smooth.
struct QuadricSpec {
  long n;
  long r;

  std::size_t modulus() const { return static_cast<std::size_t>(n + 1); }
  bool smooth() const { return r == n + 1; }
};

/// Validates 3 <= r <= n+1. Ranks 1 and 2 are rejected: rank 1 is a double
/// hyperplane (smooth reduced structure), rank 2 two hyperplanes meeting
/// transversally.
QuadricSpec make_quadric_spec(long n, long r);

/// sum_{k=0}^{n-r} C(n-r+1, k) H^{r+k}, the class of the linear P^{n-r}.
ClassPoly csm_singular_locus(const QuadricSpec& spec);

/// 2H B_n/(1+2H) - (-1)^{n-1} mu csm(S_A)/(1+2H), mu = (-1)^{n+r}.
ClassPoly csm_quadric(const QuadricSpec& spec);

/// Closed form (-1)^{n+r} sum_k (sum_j C(n-r+1, k-j)(-2)^j) H^{k+r};
/// zero for a smooth quadric.
ClassPoly milnor_class(const QuadricSpec& spec);
/// mu csm(S_A)/(1+2H).
ClassPoly milnor_class_from_singular_locus(const QuadricSpec& spec);
/// (-1)^{n-1}(2H B_n/(1+2H) - csm).
ClassPoly milnor_class_from_csm(const QuadricSpec& spec, const ClassPoly& csm);

struct EuValues {
  long generic = 1;
  std::optional<long> singular;
};
EuValues eu_values(const QuadricSpec& spec);

long milnor_number(const QuadricSpec& spec);
/// Euler characteristic of the complex link of the affine cone at 0, taken
/// as a constant of the family (r >= 3).
long complex_link_chi();

/// Chern-Mather classes of the dual varieties, pushed to P^n:
/// X_A^vee = 2H^{n-r+2}(1+H)^r/(1+2H) and S_A^vee = H^{n-r+1}(1+H)^r.
std::pair<ClassPoly, ClassPoly> dual_cm_classes(const QuadricSpec& spec);

/// c_M(X_A) = csm(X_A \ S_A) + ((-1)^r + 1) csm(S_A).
ClassPoly chern_mather_quadric(const QuadricSpec& spec);

/// Whether I_n carries the signed Chern-Mather classes of X_A and S_A to
/// those of their duals. `singular` is absent for a smooth quadric.
struct ExchangeCheck {
  bool quadric = false;
  std::optional<bool> singular;
};
ExchangeCheck involution_exchange(const QuadricSpec& spec);

/// CSM classes of X_A \ S_A and S_A built as iterated cones over the smooth
/// quadric of rank r in P^{r-1}; independent of the Milnor-class formula.
std::pair<ClassPoly, ClassPoly> cone_strata_classes(const QuadricSpec& spec);

/// {X_A \ S_A, S_A} against {X_A^vee} with the open strata paired.
StratifiedPair quadric_strata(const QuadricSpec& spec);

struct QuadricCheck {
  EulerTable table;
  /// Eu_{X_A}(S_A) from the solver; absent when smooth.
  std::optional<Integer> eu_singular;
  /// Milnor number recovered from the solved classes; absent when smooth.
  std::optional<Integer> mu;
  bool agrees = false;
};

/// Solves the duality system for the quadric stratification and compares
/// with eu_values / milnor_number. Disagreement throws Error{Internal}.
QuadricCheck cross_validate(const QuadricSpec& spec);

/// X^t A Y = 0 in P^{m+n_cols-1} is the quadric of the block matrix
/// [[0, A], [A^t, 0]], whose rank is 2 rank(A).
QuadricSpec bilinear_embed(long m, long n_cols, long rank_a);

}  // namespace reflective
