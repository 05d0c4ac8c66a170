#pragma once

#include "reflective/classpoly.hpp"
#include "reflective/grassmann.hpp"
#include "reflective/strata.hpp"

namespace reflective {

/// Rank stratification of P(M_{n,n}) = P^{n^2-1}. Stratum k (0 <= k <= n-1)
/// is the projectivized set of matrices with kernel of dimension exactly k;
/// its closure tau_{n,k} has dimension n^2 - k^2 - 1 and is dual to
/// tau_{n,n-k}.
struct DetFamily {
  long n;

  std::size_t ambient() const { return static_cast<std::size_t>(n * n); }
  long stratum_dim(long k) const { return n * n - k * k - 1; }
};

/// The Grassmannian class whose integral defines the q-polynomial:
/// (sum_k (1+d)^{n(n-r)-k} c_k(Q^{vee n})) * (sum_k d^{nr-k} c_k(S^{vee n}))
/// on G(r, n), with d kept symbolic.
ChowPoly q_class(long n, long r);

/// int_{G(r,n)} c(S^vee (x) Q) q_class(n, r) - d^{n^2} C(n, r), with d -> H.
ClassPoly q_poly(long n, long r);

/// CSM class of the open rank stratum: sum_{r=k}^{n-1} (-1)^{r-k} C(r,k) q_{n,r}.
ClassPoly csm_stratum(long n, long k);

/// True iff I_{n^2-1}(signed q_{n,r}) == signed q_{n,n-r}.
bool duality_check(long n, long r);
/// Same identity on caller-supplied polynomials; used for negative controls.
bool duality_holds(long n, long r, const ClassPoly& q_r, const ClassPoly& q_dual);

/// Solver-ready pair: primal = dual = the open rank strata, pairing k <-> n-k
/// and the open dense stratum (whole space) paired with the empty dual.
StratifiedPair det_strata(long n);

/// Runs the duality solver on det_strata(n) and checks the binomial pattern
/// Eu_{Sigma_{n,k}}(Sigma_{n,r}^o) = C(r,k) and Eu_{Sigma_{n,k}}(0) = C(n,k).
/// A mismatch throws Error{Internal}.
EulerTable eu_table_det(long n);

/// q_{n,r}, checked against the solver's Chern-Mather class of tau_{n,r}.
ClassPoly chern_mather_det(long n, long r);

}  // namespace reflective
