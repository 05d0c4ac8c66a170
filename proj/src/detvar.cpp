#include "reflective/detvar.hpp"

#include "reflective/errors.hpp"

namespace reflective {

namespace {

void require_n(long n) {
  if (n < 2) throw invalid_input("determinantal family needs n >= 2");
  // n^2 variables in the formal d; G(r,n) tables grow like C(n,r)^2.
  if (n > 6) throw invalid_input("determinantal family limited to n <= 6");
}

void require_rank(long n, long r) {
  if (r < 0 || r > n) {
    throw invalid_input("r = " + std::to_string(r) + " outside 0..n for n = " + std::to_string(n));
  }
}

}  // namespace

ChowPoly q_class(long n, long r) {
  require_n(n);
  require_rank(n, r);
  auto ring = SchubertRing::make(static_cast<int>(r), static_cast<int>(n));
  const BundleChern qdual_n = chern_power(chern_dual(taut_quot(ring)), n);
  const BundleChern sdual_n = chern_power(chern_dual(taut_sub(ring)), n);

  const IntPoly one_plus_d = IntPoly::from({1, 1});
  ChowPoly left(ring);
  for (long k = 0; k <= qdual_n.rank; ++k) {
    left += lift(qdual_n.classes[k]) * one_plus_d.pow(static_cast<unsigned>(qdual_n.rank - k));
  }
  ChowPoly right(ring);
  for (long k = 0; k <= sdual_n.rank; ++k) {
    right += lift(sdual_n.classes[k]) * IntPoly::monomial(static_cast<std::size_t>(sdual_n.rank - k));
  }
  return left * right;
}

ClassPoly q_poly(long n, long r) {
  const ChowPoly q = q_class(n, r);
  const RingPtr& ring = q.ring();
  const BundleChern tangent = chern_tensor(chern_dual(taut_sub(ring)), taut_quot(ring));
  IntPoly value = integrate(lift(tangent.total()) * q);
  value -= IntPoly::monomial(static_cast<std::size_t>(n * n), binomial(n, r));
  if (value.degree() >= n * n) {
    throw Error(ErrorKind::Internal, "q-polynomial has degree " + std::to_string(value.degree()));
  }
  return ClassPoly::truncate(value, static_cast<std::size_t>(n * n));
}

ClassPoly csm_stratum(long n, long k) {
  require_n(n);
  if (k < 0 || k > n - 1) throw invalid_input("stratum index k must be in 0..n-1");
  ClassPoly out(static_cast<std::size_t>(n * n));
  for (long r = k; r <= n - 1; ++r) out += q_poly(n, r) * (binomial(r, k) * parity_sign(r - k));
  return out;
}

bool duality_holds(long n, long r, const ClassPoly& q_r, const ClassPoly& q_dual) {
  const DetFamily fam{n};
  const ClassPoly lhs = involute(signed_class(q_r, fam.stratum_dim(r)), static_cast<long>(fam.ambient()) - 1);
  return lhs == signed_class(q_dual, fam.stratum_dim(n - r));
}

bool duality_check(long n, long r) {
  require_n(n);
  if (r < 1 || r > n - 1) throw invalid_input("duality_check needs 1 <= r <= n-1");
  return duality_holds(n, r, q_poly(n, r), q_poly(n, n - r));
}

StratifiedPair det_strata(long n) {
  require_n(n);
  const DetFamily fam{n};
  StratifiedPair pair;
  pair.N = fam.ambient();
  for (long k = 0; k <= n - 1; ++k) {
    const std::string name = "rank_" + std::to_string(n - k);
    Stratum s = make_stratum(name, csm_stratum(n, k), fam.stratum_dim(k));
    pair.primal.push_back(s);
    pair.dual.push_back(std::move(s));
  }
  pair.pairing.push_back(PairLink{0, std::nullopt});
  pair.pairing.push_back(PairLink{std::nullopt, 0});
  for (long k = 1; k <= n - 1; ++k) {
    pair.pairing.push_back(PairLink{static_cast<std::size_t>(k), static_cast<std::size_t>(n - k)});
  }
  pair.validate();
  return pair;
}

EulerTable eu_table_det(long n) {
  const StratifiedPair pair = det_strata(n);
  EulerTable table = euler_table(pair);
  for (long k = 0; k <= n - 1; ++k) {
    for (long r = 0; r <= n - 1; ++r) {
      if (table.primal[k][r] != binomial(r, k)) {
        throw Error(ErrorKind::Internal,
                    "Eu(" + std::to_string(k) + "," + std::to_string(r) + ") = " + table.primal[k][r].get_str() +
                        ", expected C(r,k)");
      }
    }
    if (table.primal_origin[k] != binomial(n, k)) {
      throw Error(ErrorKind::Internal, "Eu at the origin for k = " + std::to_string(k) + " is " +
                                           table.primal_origin[k].get_str() + ", expected C(n,k)");
    }
  }
  return table;
}

ClassPoly chern_mather_det(long n, long r) {
  require_n(n);
  if (r < 0 || r > n - 1) throw invalid_input("chern_mather_det needs 0 <= r <= n-1");
  const ClassPoly q = q_poly(n, r);
  const StratifiedPair pair = det_strata(n);
  const SystemSolution sol = solve_system(pair, static_cast<std::size_t>(r));
  const ClassPoly solved = chern_mather(pair, static_cast<std::size_t>(r), sol.alpha);
  if (solved != q) {
    throw Error(ErrorKind::Internal, "solver Chern-Mather class " + solved.to_string() + " differs from q_{" +
                                         std::to_string(n) + "," + std::to_string(r) + "} = " + q.to_string());
  }
  return q;
}

}  // namespace reflective
