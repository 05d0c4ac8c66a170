#include "reflective/quadric.hpp"

#include "reflective/errors.hpp"

namespace reflective {

namespace {

ClassPoly one_plus_H_pow(long e, std::size_t modulus) {
  return ClassPoly::truncate(IntPoly::from({1, 1}).pow(static_cast<unsigned>(e)), modulus);
}

void require_singular(const QuadricSpec& spec, const char* what) {
  if (spec.smooth()) throw invalid_input(std::string(what) + " needs a singular quadric (r <= n)");
}

// 2H B_n / (1 + 2H): the smooth quadric hypersurface in P^n.
ClassPoly smooth_quadric(long n) {
  const std::size_t N = static_cast<std::size_t>(n + 1);
  return div_1p2H(ClassPoly::monomial(1, N, 2) * chern_B(n, N));
}

}  // namespace

QuadricSpec make_quadric_spec(long n, long r) {
  if (r == 1) {
    throw invalid_input("rank 1: the quadric is a double hyperplane and its reduced structure is smooth; need r >= 3");
  }
  if (r == 2) {
    throw invalid_input("rank 2: the quadric is two hyperplanes meeting transversally; need r >= 3");
  }
  if (r < 3) throw invalid_input("quadric rank must be at least 3");
  if (n < 2) throw invalid_input("quadric needs ambient dimension n >= 2");
  if (r > n + 1) {
    throw invalid_input("rank " + std::to_string(r) + " exceeds the matrix size n+1 = " + std::to_string(n + 1));
  }
  return QuadricSpec{n, r};
}

ClassPoly csm_singular_locus(const QuadricSpec& spec) {
  require_singular(spec, "csm_singular_locus");
  ClassPoly out(spec.modulus());
  const long dim_s = spec.n - spec.r;
  for (long k = 0; k <= dim_s; ++k) out += ClassPoly::monomial(spec.r + k, spec.modulus(), binomial(dim_s + 1, k));
  return out;
}

ClassPoly csm_quadric(const QuadricSpec& spec) {
  ClassPoly out = smooth_quadric(spec.n);
  if (spec.smooth()) return out;
  const Integer mu = milnor_number(spec);
  out -= div_1p2H(csm_singular_locus(spec)) * (mu * parity_sign(spec.n - 1));
  return out;
}

ClassPoly milnor_class(const QuadricSpec& spec) {
  ClassPoly out(spec.modulus());
  if (spec.smooth()) return out;
  const long n = spec.n;
  const long r = spec.r;
  for (long k = 0; k <= n - r; ++k) {
    Integer c = 0;
    Integer pow2 = 1;
    for (long j = 0; j <= k; ++j) {
      c += binomial(n - r + 1, k - j) * pow2;
      pow2 *= -2;
    }
    out += ClassPoly::monomial(k + r, spec.modulus(), c);
  }
  return out * Integer(parity_sign(n + r));
}

ClassPoly milnor_class_from_singular_locus(const QuadricSpec& spec) {
  if (spec.smooth()) return ClassPoly(spec.modulus());
  return div_1p2H(csm_singular_locus(spec)) * Integer(milnor_number(spec));
}

ClassPoly milnor_class_from_csm(const QuadricSpec& spec, const ClassPoly& csm) {
  return (smooth_quadric(spec.n) - csm) * Integer(parity_sign(spec.n - 1));
}

EuValues eu_values(const QuadricSpec& spec) {
  EuValues out;
  if (!spec.smooth()) out.singular = parity_sign(spec.r) + 1;
  return out;
}

long milnor_number(const QuadricSpec& spec) { return parity_sign(spec.n + spec.r); }

long complex_link_chi() { return -2; }

std::pair<ClassPoly, ClassPoly> dual_cm_classes(const QuadricSpec& spec) {
  const std::size_t N = spec.modulus();
  const long n = spec.n;
  const long r = spec.r;
  ClassPoly x_dual = div_1p2H(ClassPoly::monomial(n - r + 2, N, 2) * one_plus_H_pow(r, N));
  ClassPoly s_dual(N);
  if (!spec.smooth()) s_dual = ClassPoly::monomial(n - r + 1, N) * one_plus_H_pow(r, N);
  return {std::move(x_dual), std::move(s_dual)};
}

ClassPoly chern_mather_quadric(const QuadricSpec& spec) {
  if (spec.smooth()) return csm_quadric(spec);
  const ClassPoly csm_s = csm_singular_locus(spec);
  return csm_quadric(spec) - csm_s + csm_s * Integer(parity_sign(spec.r) + 1);
}

ExchangeCheck involution_exchange(const QuadricSpec& spec) {
  const auto [x_dual, s_dual] = dual_cm_classes(spec);
  ExchangeCheck out;
  out.quadric = involute(signed_class(chern_mather_quadric(spec)), spec.n) == signed_class(x_dual);
  if (!spec.smooth()) out.singular = involute(signed_class(csm_singular_locus(spec)), spec.n) == signed_class(s_dual);
  return out;
}

std::pair<ClassPoly, ClassPoly> cone_strata_classes(const QuadricSpec& spec) {
  const std::size_t N = spec.modulus();
  const long r = spec.r;
  // Smooth quadric of rank r in P^{r-1}, truncated there, then coned n-r+1
  // times: each cone minus its vertex multiplies the class by (1+H).
  const ClassPoly base = smooth_quadric(r - 1);
  const ClassPoly base_in_pn(std::vector<Integer>(base.coeffs().begin(), base.coeffs().end()), N);
  ClassPoly open = base_in_pn * one_plus_H_pow(spec.n - r + 1, N);
  ClassPoly sing = spec.smooth() ? ClassPoly(N) : csm_singular_locus(spec);
  return {std::move(open), std::move(sing)};
}

StratifiedPair quadric_strata(const QuadricSpec& spec) {
  auto [open, sing] = cone_strata_classes(spec);
  StratifiedPair pair;
  pair.N = spec.modulus();
  pair.primal.push_back(make_stratum(spec.smooth() ? "X_A" : "X_A_open", std::move(open), spec.n - 1));
  if (!spec.smooth()) pair.primal.push_back(make_stratum("S_A", std::move(sing), spec.n - spec.r));
  pair.dual.push_back(make_stratum("X_A_dual", dual_cm_classes(spec).first, spec.r - 2));
  pair.pairing.push_back(PairLink{0, 0});
  pair.validate();
  return pair;
}

QuadricCheck cross_validate(const QuadricSpec& spec) {
  const StratifiedPair pair = quadric_strata(spec);
  QuadricCheck out;
  out.table = euler_table(pair);
  const ClassPoly& cm = out.table.primal_chern_mather[0];

  if (spec.smooth()) {
    if (!milnor_class_from_csm(spec, cm).is_zero()) {
      throw Error(ErrorKind::Internal, "smooth quadric has a nonzero Milnor class", "quadric");
    }
    out.agrees = true;
    return out;
  }

  const Integer e = out.table.primal[0][1];
  out.eu_singular = e;
  // csm(X_A) = c_M - (e-1) csm(S_A); the Milnor class is mu csm(S_A)/(1+2H),
  // whose H^r coefficient is mu.
  const ClassPoly& csm_s = pair.primal[1].csm;
  const ClassPoly csm_x = cm - csm_s * Integer(e - 1);
  const ClassPoly milnor = milnor_class_from_csm(spec, csm_x);
  const Integer mu = milnor[static_cast<std::size_t>(spec.r)];
  if (milnor != div_1p2H(csm_s) * mu) {
    throw Error(ErrorKind::Internal, "Milnor class is not a multiple of csm(S_A)/(1+2H)", "quadric");
  }
  out.mu = mu;

  const EuValues expected = eu_values(spec);
  out.agrees = (e == *expected.singular) && (mu == milnor_number(spec));
  if (!out.agrees) {
    throw Error(ErrorKind::Internal,
                "solver gives Eu = " + e.get_str() + ", mu = " + mu.get_str() + " for n = " + std::to_string(spec.n) +
                    ", r = " + std::to_string(spec.r),
                "quadric");
  }
  return out;
}

QuadricSpec bilinear_embed(long m, long n_cols, long rank_a) {
  if (m < 1 || n_cols < 1) throw invalid_input("bilinear form needs positive matrix dimensions");
  if (rank_a < 0 || rank_a > std::min(m, n_cols)) throw invalid_input("rank of A exceeds min(m, n)");
  return make_quadric_spec(m + n_cols - 1, 2 * rank_a);
}

}  // namespace reflective
