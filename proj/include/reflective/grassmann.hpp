#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reflective/errors.hpp"
#include "reflective/integer.hpp"
#include "reflective/intpoly.hpp"

namespace reflective {

/// Weakly decreasing list of positive parts; the empty partition is the
/// fundamental class.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless `parts` is weakly decreasing
  /// and nonnegative. Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  /// "2,1" or "2 1"; "" and "0" give the empty partition.
  static Partition parse(const std::string& text);
  /// (k) and (1^k).
  static Partition row(int k);
  static Partition column(int k);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool fits(int rows, int cols) const { return length() <= rows && (parts_.empty() || parts_[0] <= cols); }
  /// Complement inside a rows x cols box, read from the bottom-right corner.
  Partition complement(int rows, int cols) const;

  /// "sigma_2_1"; the empty partition renders as "1".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Chow ring of G(r, n), the Grassmannian of r-planes in an n-dimensional
/// space. Schubert classes are indexed by partitions in the r x (n-r) box.
/// The structure constants are tabulated on construction and never change.
class SchubertRing {
 public:
  struct Term {
    std::size_t index;
    long coeff;
  };

  static std::shared_ptr<const SchubertRing> make(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  int rows() const { return r_; }
  int cols() const { return n_ - r_; }
  int dimension() const { return r_ * (n_ - r_); }

  std::size_t size() const { return basis_.size(); }
  const Partition& basis(std::size_t i) const { return basis_[i]; }
  /// Throws InvalidInput if the partition does not fit the box.
  std::size_t index_of(const Partition& p) const;
  std::size_t point_index() const { return point_; }

  /// sigma_basis(i) * sigma_basis(j).
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }

  /// sigma_lambda * h_k via Pieri's rule, restricted to the box.
  std::vector<Partition> pieri(const Partition& lambda, int k) const;

 private:
  SchubertRing(int r, int n);
  std::vector<Term> compute_product(const Partition& a, const Partition& b) const;

  int r_;
  int n_;
  std::vector<Partition> basis_;
  std::map<Partition, std::size_t> index_;
  std::size_t point_ = 0;
  std::vector<std::vector<Term>> table_;
};

using RingPtr = std::shared_ptr<const SchubertRing>;

/// Element of the Chow ring of G(r, n) with coefficients in C, where C is
/// Integer or IntPoly (a formal variable riding along with the classes).
template <class C>
class ChowElement {
 public:
  explicit ChowElement(RingPtr ring) : ring_(std::move(ring)), coeffs_(ring_->size()) {}

  static ChowElement one(RingPtr ring) { return schubert(ring, Partition{}, C(1)); }
  /// sigma_lambda, or zero if lambda does not fit the box.
  static ChowElement schubert(RingPtr ring, const Partition& lambda, const C& c = C(1)) {
    ChowElement out(ring);
    if (lambda.fits(ring->rows(), ring->cols())) out.coeffs_[ring->index_of(lambda)] = c;
    return out;
  }

  const RingPtr& ring() const { return ring_; }
  const C& coeff(std::size_t i) const { return coeffs_[i]; }
  C coeff(const Partition& p) const {
    if (!p.fits(ring_->rows(), ring_->cols())) return C(0);
    return coeffs_[ring_->index_of(p)];
  }
  void set(std::size_t i, C c) { coeffs_[i] = std::move(c); }

  bool is_zero() const {
    for (const C& c : coeffs_) {
      if (!reflective::is_zero(c)) return false;
    }
    return true;
  }

  /// Graded piece of codimension k.
  ChowElement part(int k) const {
    ChowElement out(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (ring_->basis(i).size() == k) out.coeffs_[i] = coeffs_[i];
    }
    return out;
  }

  ChowElement& operator+=(const ChowElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  ChowElement& operator-=(const ChowElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  ChowElement& operator*=(const C& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(ChowElement a, const C& c) { return a *= c; }
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b) {
    a.check(b);
    ChowElement out(a.ring_);
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (reflective::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reflective::is_zero(b.coeffs_[j])) continue;
        const C ab = a.coeffs_[i] * b.coeffs_[j];
        for (const auto& t : a.ring_->product(i, j)) out.coeffs_[t.index] += ab * C(t.coeff);
      }
    }
    return out;
  }
  friend bool operator==(const ChowElement& a, const ChowElement& b) {
    return a.ring_->r() == b.ring_->r() && a.ring_->n() == b.ring_->n() && a.coeffs_ == b.coeffs_;
  }

  ChowElement pow(unsigned e) const {
    ChowElement result = one(ring_);
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
  }

  /// "sigma_2 + sigma_1_1", terms in decreasing partition order.
  std::string to_string() const;

 private:
  void check(const ChowElement& o) const {
    if (ring_->r() != o.ring_->r() || ring_->n() != o.ring_->n()) {
      throw invalid_input("Chow elements live on different Grassmannians");
    }
  }

  RingPtr ring_;
  std::vector<C> coeffs_;
};

template <>
std::string ChowElement<Integer>::to_string() const;
template <>
std::string ChowElement<IntPoly>::to_string() const;

using ChowInt = ChowElement<Integer>;
using ChowPoly = ChowElement<IntPoly>;

/// Integer element viewed with polynomial coefficients.
ChowPoly lift(const ChowInt& x);

ChowInt lr_multiply(const ChowInt& a, const ChowInt& b);
/// Coefficient of the point class.
template <class C>
C integrate(const ChowElement<C>& x) {
  return x.coeff(x.ring()->point_index());
}

/// Chern classes c_0..c_rank of a vector bundle on G(r, n).
struct BundleChern {
  long rank = 0;
  std::vector<ChowInt> classes;

  ChowInt total() const;
  const RingPtr& ring() const { return classes.front().ring(); }
};

BundleChern trivial_bundle(RingPtr ring, long rank);
/// Tautological subbundle S (rank r): c_k(S) = (-1)^k sigma_{1^k}.
BundleChern taut_sub(RingPtr ring);
/// Tautological quotient Q (rank n-r): c_k(Q) = sigma_k.
BundleChern taut_quot(RingPtr ring);
BundleChern chern_dual(const BundleChern& b);
BundleChern chern_sum(const BundleChern& a, const BundleChern& b);
/// m-fold direct sum; m = 0 gives the rank 0 bundle.
BundleChern chern_power(const BundleChern& b, long m);
/// Tensor product by the splitting principle: the total class
/// prod_{i,j} (1 + x_i + y_j) is rewritten in elementary symmetric functions
/// of the roots x (of a) and y (of b), which are then replaced by the Chern
/// classes of the factors.
BundleChern chern_tensor(const BundleChern& a, const BundleChern& b);

/// Universal expression of c(E (x) F) for rank a, b bundles, truncated at
/// total degree max_degree. Each term is coeff * prod_k e_k^{e_pows[k-1]}
/// prod_k f_k^{f_pows[k-1]}.
struct TensorTerm {
  std::vector<int> e_pows;
  std::vector<int> f_pows;
  Integer coeff;
};
std::vector<TensorTerm> tensor_chern_formula(int a, int b, int max_degree);

}  // namespace reflective
