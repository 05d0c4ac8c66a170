#include "reflective/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "reflective/errors.hpp"
#include "reflective/linsolve.hpp"

namespace reflective {

Stratum make_stratum(std::string name, ClassPoly csm, std::optional<long> dim) {
  if (csm.is_zero()) throw invalid_input("stratum '" + name + "' has a zero CSM class");
  const long derived = csm.dim();
  if (dim && *dim != derived) {
    throw invalid_input("stratum '" + name + "' declares dimension " + std::to_string(*dim) +
                        " but its class has dimension " + std::to_string(derived));
  }
  return Stratum{std::move(name), std::move(csm), derived};
}

namespace {

void validate_side(const std::vector<Stratum>& side, std::size_t N, const char* label) {
  for (std::size_t i = 0; i < side.size(); ++i) {
    const Stratum& s = side[i];
    if (s.csm.modulus() != N) {
      throw invalid_input(std::string(label) + " stratum '" + s.name + "' has " +
                          std::to_string(s.csm.modulus()) + " coefficients, expected N = " + std::to_string(N));
    }
    if (s.csm.is_zero()) throw invalid_input(std::string(label) + " stratum '" + s.name + "' has a zero class");
    if (s.csm.dim() != s.dim) {
      throw invalid_input(std::string(label) + " stratum '" + s.name + "' dimension disagrees with its class");
    }
    if (i > 0 && side[i - 1].dim <= s.dim) {
      throw invalid_input(std::string(label) + " strata dimensions must strictly decrease ('" + side[i - 1].name +
                          "' then '" + s.name + "')");
    }
  }
}

std::string label(const std::vector<Stratum>& side, std::size_t i, const char* which) {
  return std::string(which) + "[" + std::to_string(i) + "] '" + side[i].name + "'";
}

std::vector<std::size_t> order_by_dim(const std::vector<Stratum>& side, const char* which) {
  std::vector<std::size_t> idx(side.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return side[a].dim > side[b].dim; });
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (side[idx[k]].dim == side[idx[k - 1]].dim) {
      throw invalid_input(std::string(which) + " strata '" + side[idx[k - 1]].name + "' and '" + side[idx[k]].name +
                          "' share dimension " + std::to_string(side[idx[k]].dim));
    }
  }
  return idx;
}

}  // namespace

void StratifiedPair::validate() const {
  if (N == 0) throw invalid_input("ambient dimension N must be positive");
  if (primal.empty()) throw invalid_input("empty primal strata list");
  validate_side(primal, N, "primal");
  validate_side(dual, N, "dual");

  std::set<std::size_t> seen_primal;
  std::set<std::size_t> seen_dual;
  for (const PairLink& link : pairing) {
    if (!link.primal && !link.dual) throw invalid_input("pairing entry with both sides null");
    if (link.primal) {
      if (*link.primal >= primal.size()) throw invalid_input("pairing refers to missing primal stratum");
      if (!seen_primal.insert(*link.primal).second) throw invalid_input("primal stratum paired twice");
    }
    if (link.dual) {
      if (*link.dual >= dual.size()) throw invalid_input("pairing refers to missing dual stratum");
      if (!seen_dual.insert(*link.dual).second) throw invalid_input("dual stratum paired twice");
    }
  }

  // Reflectivity: dual varieties of successively deeper closures grow.
  long last = -2;
  for (std::size_t r = 0; r < primal.size(); ++r) {
    auto p = primal_partner(r);
    if (!p) continue;
    const long d = p->index ? dual[*p->index].dim : -1;
    if (d <= last) {
      throw invalid_input("reflectivity chain fails at " + label(primal, r, "primal") +
                          ": dual dimensions must strictly increase");
    }
    last = d;
  }
}

StratifiedPair StratifiedPair::normalized() const {
  const auto po = order_by_dim(primal, "primal");
  const auto dor = order_by_dim(dual, "dual");
  std::vector<std::size_t> pinv(po.size());
  std::vector<std::size_t> dinv(dor.size());
  for (std::size_t k = 0; k < po.size(); ++k) pinv[po[k]] = k;
  for (std::size_t k = 0; k < dor.size(); ++k) dinv[dor[k]] = k;

  StratifiedPair out;
  out.N = N;
  for (std::size_t k : po) out.primal.push_back(primal[k]);
  for (std::size_t k : dor) out.dual.push_back(dual[k]);
  for (const PairLink& link : pairing) {
    PairLink l;
    if (link.primal) {
      if (*link.primal >= pinv.size()) throw invalid_input("pairing refers to missing primal stratum");
      l.primal = pinv[*link.primal];
    }
    if (link.dual) {
      if (*link.dual >= dinv.size()) throw invalid_input("pairing refers to missing dual stratum");
      l.dual = dinv[*link.dual];
    }
    out.pairing.push_back(l);
  }
  out.validate();
  return out;
}

std::optional<Partner> StratifiedPair::primal_partner(std::size_t r) const {
  for (const PairLink& link : pairing) {
    if (link.primal == r) return Partner{link.dual};
  }
  return std::nullopt;
}

std::optional<Partner> StratifiedPair::dual_partner(std::size_t j) const {
  for (const PairLink& link : pairing) {
    if (link.dual == j) return Partner{link.primal};
  }
  return std::nullopt;
}

StratifiedPair StratifiedPair::swapped() const {
  StratifiedPair out;
  out.N = N;
  out.primal = dual;
  out.dual = primal;
  for (const PairLink& link : pairing) out.pairing.push_back(PairLink{link.dual, link.primal});
  return out;
}

SystemSolution solve_system(const StratifiedPair& pair, std::size_t r) {
  if (r >= pair.primal.size()) throw invalid_input("stratum index out of range");
  const std::string subsystem = label(pair.primal, r, "primal");
  const std::size_t n_primal = pair.primal.size();
  const auto partner = pair.primal_partner(r);

  SystemSolution sol;
  sol.stratum = r;
  sol.alpha.assign(n_primal, 0);
  sol.alpha[r] = 1;

  if (!partner) {
    if (r + 1 != n_primal) {
      throw Error(ErrorKind::InvalidInput, "stratum has no dual partner and is not the deepest one", subsystem);
    }
    return sol;
  }
  sol.partner = partner->index;

  const std::size_t N = pair.N;
  const long d = static_cast<long>(N) - 1;
  const Integer sx = parity_sign(pair.primal[r].dim);

  // Columns: alpha_{r+1..}, then beta_{p+1..}.
  std::vector<ClassPoly> columns;
  for (std::size_t i = r + 1; i < n_primal; ++i) columns.push_back(involute(pair.primal[i].csm * sx, d));
  ClassPoly rhs = -involute(pair.primal[r].csm * sx, d);
  std::size_t first_beta = 0;
  if (partner->index) {
    const std::size_t p = *partner->index;
    const Integer sy = parity_sign(pair.dual[p].dim);
    first_beta = p + 1;
    for (std::size_t j = p + 1; j < pair.dual.size(); ++j) columns.push_back(-(pair.dual[j].csm * sy));
    rhs += pair.dual[p].csm * sy;
    sol.beta.assign(pair.dual.size(), 0);
    sol.beta[p] = 1;
  }

  Matrix<Rational> A(N, columns.size());
  std::vector<Rational> b(N);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t c = 0; c < columns.size(); ++c) A(k, c) = Rational(columns[c][k]);
    b[k] = Rational(rhs[k]);
  }

  std::vector<Integer> x;
  try {
    ExactSolution exact = exact_solve(A, b);
    sol.rank = exact.rank;
    for (std::size_t c = 0; c < exact.x.size(); ++c) {
      if (exact.x[c].get_den() != 1) {
        throw Error(ErrorKind::NonIntegerSolution, "unknown " + std::to_string(c) + " = " + exact.x[c].get_str());
      }
      x.push_back(exact.x[c].get_num());
    }
  } catch (const Error& e) {
    throw Error(e.kind(), e.message(), subsystem);
  }

  std::size_t c = 0;
  for (std::size_t i = r + 1; i < n_primal; ++i) sol.alpha[i] = x[c++];
  if (partner->index) {
    for (std::size_t j = first_beta; j < pair.dual.size(); ++j) sol.beta[j] = x[c++];
  }
  sol.equations = N;
  sol.unknowns = columns.size();
  return sol;
}

ClassPoly chern_mather(const StratifiedPair& pair, std::size_t r, const std::vector<Integer>& alpha) {
  ClassPoly out(pair.N);
  for (std::size_t j = r; j < pair.primal.size() && j < alpha.size(); ++j) out += pair.primal[j].csm * alpha[j];
  return out;
}

Integer eu_at_origin(const StratifiedPair& pair, std::size_t r, const std::vector<Integer>& alpha) {
  Integer sum = 0;
  for (std::size_t k = r; k < pair.primal.size() && k < alpha.size(); ++k) {
    sum += pair.primal[k].csm.eval(-1) * alpha[k];
  }
  return sum * parity_sign(static_cast<long>(pair.N) - 1);
}

EulerTable euler_table(const StratifiedPair& pair) {
  pair.validate();
  const StratifiedPair other = pair.swapped();
  other.validate();

  EulerTable table;
  for (std::size_t r = 0; r < pair.primal.size(); ++r) {
    SystemSolution s = solve_system(pair, r);
    table.primal.push_back(s.alpha);
    table.primal_origin.push_back(eu_at_origin(pair, r, s.alpha));
    table.primal_chern_mather.push_back(chern_mather(pair, r, s.alpha));
    table.primal_systems.push_back(std::move(s));
  }
  for (std::size_t j = 0; j < other.primal.size(); ++j) {
    SystemSolution s = solve_system(other, j);
    table.dual.push_back(s.alpha);
    table.dual_origin.push_back(eu_at_origin(other, j, s.alpha));
    table.dual_chern_mather.push_back(chern_mather(other, j, s.alpha));
    table.dual_systems.push_back(std::move(s));
  }

  // Each system also solves its partner's row; the two must agree.
  for (const SystemSolution& s : table.primal_systems) {
    if (!s.partner) continue;
    if (table.dual[*s.partner] != s.beta) {
      throw Error(ErrorKind::Internal, "dual row disagrees with the partner system",
                  label(pair.dual, *s.partner, "dual"));
    }
  }
  return table;
}

}  // namespace reflective
