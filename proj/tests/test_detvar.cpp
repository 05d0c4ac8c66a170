#include <doctest.h>

#include "oracles.hpp"
#include "reflective/detvar.hpp"
#include "reflective/errors.hpp"
#include "reflective/quadric.hpp"

using namespace reflective;

namespace {

ClassPoly cp(std::initializer_list<long> c, std::size_t N) { return ClassPoly::from(c, N); }

ClassPoly whole_space(long n) {
  const std::size_t N = static_cast<std::size_t>(n * n);
  return chern_B(n * n - 1, N);
}

}  // namespace

TEST_CASE("q_{2,1} is the smooth quadric surface") {
  CHECK(q_poly(2, 1) == cp({0, 2, 4, 4}, 4));
  CHECK(q_poly(2, 1) == csm_quadric(make_quadric_spec(3, 4)));
}

TEST_CASE("q_{n,0} is the class of the whole space and q_{n,n} vanishes") {
  for (long n = 2; n <= 4; ++n) {
    CHECK(q_poly(n, 0) == whole_space(n));
    CHECK(q_poly(n, n).is_zero());
  }
}

TEST_CASE("q_{n,n-1} is the Segre variety") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(q_poly(n, n - 1) == ClassPoly(oracle::segre_csm(n), static_cast<std::size_t>(n * n)));
  }
}

TEST_CASE("dimensions and degrees of q-polynomials") {
  for (long n = 2; n <= 4; ++n) {
    const DetFamily fam{n};
    for (long r = 0; r <= n - 1; ++r) {
      const ClassPoly q = q_poly(n, r);
      CHECK(q.dim() == fam.stratum_dim(r));
    }
  }
  // Degrees of the rank <= 1 and rank <= 2 loci of 4x4 matrices.
  CHECK(q_poly(4, 3).degree() == 20);
  CHECK(q_poly(4, 2).degree() == 20);
  CHECK(q_poly(3, 1).degree() == 3);
}

TEST_CASE("duality identity") {
  for (long n = 2; n <= 4; ++n) {
    for (long r = 1; r <= n - 1; ++r) CHECK(duality_check(n, r));
  }
  CHECK(involute(signed_class(q_poly(3, 1), 7), 8) == signed_class(q_poly(3, 2), 4));
  CHECK(involute(signed_class(q_poly(3, 2), 4), 8) == signed_class(q_poly(3, 1), 7));
}

TEST_CASE("duality identity rejects a corrupted coefficient") {
  for (long n = 2; n <= 4; ++n) {
    for (long r = 1; r <= n - 1; ++r) {
      const ClassPoly q = q_poly(n, r);
      ClassPoly bad = q + ClassPoly::monomial(static_cast<std::size_t>(n * n - 1), q.modulus());
      CHECK_FALSE(duality_holds(n, r, bad, q_poly(n, n - r)));
    }
  }
}

TEST_CASE("CSM classes of the rank strata") {
  CHECK(csm_stratum(2, 1) == q_poly(2, 1));
  CHECK(csm_stratum(2, 0) == q_poly(2, 0) - q_poly(2, 1));
  for (long n = 2; n <= 4; ++n) {
    ClassPoly total(static_cast<std::size_t>(n * n));
    for (long k = 0; k <= n - 1; ++k) total += csm_stratum(n, k);
    CHECK(total == q_poly(n, 0));
    CHECK(total.euler_characteristic() == n * n);
    // Moebius inversion: q_{n,r} = sum_k C(k, r) csm_stratum(n, k).
    for (long r = 0; r <= n - 1; ++r) {
      ClassPoly q(static_cast<std::size_t>(n * n));
      for (long k = r; k <= n - 1; ++k) q += csm_stratum(n, k) * binomial(k, r);
      CHECK(q == q_poly(n, r));
    }
  }
}

TEST_CASE("Euler obstructions are binomial coefficients") {
  for (long n = 2; n <= 4; ++n) {
    const EulerTable t = eu_table_det(n);
    for (long k = 0; k <= n - 1; ++k) {
      for (long r = 0; r <= n - 1; ++r) CHECK(t.primal[k][r] == binomial(r, k));
      CHECK(t.primal_origin[k] == binomial(n, k));
      CHECK(t.dual[k] == t.primal[k]);
    }
  }
  CHECK(eu_table_det(3).primal[1][2] == 2);
}

TEST_CASE("Chern-Mather classes equal q-polynomials") {
  CHECK(chern_mather_det(2, 1) == cp({0, 2, 4, 4}, 4));
  CHECK(chern_mather_det(2, 0) == whole_space(2));
  CHECK(chern_mather_det(3, 1) == q_poly(3, 1));
}

TEST_CASE("q_class carries the formal variable") {
  const ChowPoly q = q_class(2, 1);
  CHECK(q.ring()->r() == 1);
  CHECK(integrate(q).degree() >= 0);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(q_poly(2, 3), Error);
  CHECK_THROWS_AS(q_poly(1, 0), Error);
  CHECK_THROWS_AS(csm_stratum(3, 3), Error);
  CHECK_THROWS_AS(duality_check(3, 0), Error);
  CHECK_THROWS_AS(det_strata(7), Error);
}
