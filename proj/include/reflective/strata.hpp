#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflective/classpoly.hpp"
#include "reflective/integer.hpp"

namespace reflective {

struct Stratum {
  std::string name;
  ClassPoly csm;
  long dim = 0;
};

/// Builds a stratum, deriving the dimension from the class when none is
/// given and rejecting an explicit dimension the class contradicts.
Stratum make_stratum(std::string name, ClassPoly csm, std::optional<long> dim = std::nullopt);

/// One entry of the primal/dual correspondence. A missing side means the
/// closure of the other side's stratum has an empty dual (it fills the
/// ambient projective space).
struct PairLink {
  std::optional<std::size_t> primal;
  std::optional<std::size_t> dual;
};

/// Where the dual variety of a stratum closure lives on the other side.
struct Partner {
  /// nullopt: the dual variety is empty.
  std::optional<std::size_t> index;
};

/// A stratified projective variety in P^{N-1} together with a stratification
/// of its dual, strata ordered from the open one to the deepest one.
struct StratifiedPair {
  std::size_t N = 0;
  std::vector<Stratum> primal;
  std::vector<Stratum> dual;
  std::vector<PairLink> pairing;

  /// Checks moduli, strictly decreasing dimensions, pairing sanity and the
  /// reflectivity chain. Throws InvalidInput.
  void validate() const;

  /// Stable re-sort of both sides by decreasing dimension with the pairing
  /// remapped, then validate().
  StratifiedPair normalized() const;

  std::optional<Partner> primal_partner(std::size_t r) const;
  std::optional<Partner> dual_partner(std::size_t j) const;

  /// Primal and dual exchanged, pairing inverted.
  StratifiedPair swapped() const;
};

/// Solution of the involution system attached to one primal stratum.
struct SystemSolution {
  std::size_t stratum = 0;
  std::optional<std::size_t> partner;
  /// alpha[i] = Eu_{closure of primal r}(primal i), zero for i < r.
  std::vector<Integer> alpha;
  /// beta[j] = Eu_{closure of dual p(r)}(dual j); empty when the dual is empty.
  std::vector<Integer> beta;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

/// Solves I_{N-1}((-1)^{d_X} sum_{i>=r} alpha_i csm(X_i)) =
/// (-1)^{d_Y} sum_{j>=p(r)} beta_j csm(Y_j) with alpha_r = beta_{p(r)} = 1 by
/// matching coefficients of H^0..H^{N-1}. A deepest stratum without a
/// partner is closed and smooth, so it yields alpha = (1) with no system.
SystemSolution solve_system(const StratifiedPair& pair, std::size_t r);

/// sum_{j>=r} alpha_j csm(X_j).
ClassPoly chern_mather(const StratifiedPair& pair, std::size_t r, const std::vector<Integer>& alpha);

/// Euler obstruction of the affine cone over the closure of primal stratum r
/// at its vertex: (-1)^{N-1} sum_{k>=r} alpha_k csm(X_k)(-1).
Integer eu_at_origin(const StratifiedPair& pair, std::size_t r, const std::vector<Integer>& alpha);

struct EulerTable {
  /// primal[r][j] = Eu_{closure of X_r}(X_j); zero below the diagonal.
  std::vector<std::vector<Integer>> primal;
  std::vector<std::vector<Integer>> dual;
  std::vector<Integer> primal_origin;
  std::vector<Integer> dual_origin;
  std::vector<ClassPoly> primal_chern_mather;
  std::vector<ClassPoly> dual_chern_mather;
  std::vector<SystemSolution> primal_systems;
  std::vector<SystemSolution> dual_systems;
};

/// Solves every system on both sides.
EulerTable euler_table(const StratifiedPair& pair);

}  // namespace reflective
