#include "reflective/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace reflective {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw invalid_input("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw invalid_input("partition parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw invalid_input("malformed partition '" + text + "'");
    parts.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return Partition(std::move(parts));
}

Partition Partition::row(int k) { return k <= 0 ? Partition{} : Partition(std::vector<int>{k}); }

Partition Partition::column(int k) { return k <= 0 ? Partition{} : Partition(std::vector<int>(k, 1)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::complement(int rows, int cols) const {
  if (!fits(rows, cols)) throw invalid_input("partition " + to_string() + " does not fit the box");
  std::vector<int> out(rows);
  for (int i = 0; i < rows; ++i) out[i] = cols - (*this)[rows - 1 - i];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "1";
  std::string out = "sigma";
  for (int p : parts_) out += "_" + std::to_string(p);
  return out;
}

// ---------------------------------------------------------------------------
// SchubertRing

namespace {

void enumerate_box(int rows, int cols, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  const int cap = cur.empty() ? cols : cur.back();
  for (int v = 1; v <= cap; ++v) {
    cur.push_back(v);
    enumerate_box(rows, cols, cur, out);
    cur.pop_back();
  }
}

// Sign of the permutation given as an image vector.
int perm_sign(const std::vector<int>& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

SchubertRing::SchubertRing(int r, int n) : r_(r), n_(n) {
  std::vector<int> cur;
  enumerate_box(r, n - r, cur, basis_);
  std::sort(basis_.begin(), basis_.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  point_ = index_.at(Partition(std::vector<int>(r, n - r)));

  const std::size_t m = basis_.size();
  table_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      table_[i * m + j] = compute_product(basis_[i], basis_[j]);
      table_[j * m + i] = table_[i * m + j];
    }
  }
}

std::shared_ptr<const SchubertRing> SchubertRing::make(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw invalid_input("G(" + std::to_string(r) + "," + std::to_string(n) + ") needs 0 <= r <= n");
  }
  return std::shared_ptr<const SchubertRing>(new SchubertRing(r, n));
}

std::size_t SchubertRing::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw invalid_input("partition " + p.to_string() + " does not fit the " + std::to_string(rows()) + "x" +
                        std::to_string(cols()) + " box");
  }
  return it->second;
}

std::vector<Partition> SchubertRing::pieri(const Partition& lambda, int k) const {
  std::vector<Partition> out;
  if (k < 0) return out;
  // nu_i in [lambda_i, lambda_{i-1}] (nu_0 capped by the box width), sum k.
  const int rows = r_;
  std::vector<int> nu(rows);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) out.emplace_back(nu);
      return;
    }
    const int lo = lambda[i];
    const int hi = (i == 0) ? cols() : lambda[i - 1];
    for (int v = lo; v <= hi && v - lo <= left; ++v) {
      nu[i] = v;
      rec(i + 1, left - (v - lo));
    }
  };
  if (lambda.fits(rows, cols())) rec(0, k);
  return out;
}

std::vector<SchubertRing::Term> SchubertRing::compute_product(const Partition& a, const Partition& b) const {
  // sigma_a = det(h_{a_i - i + j}) (Jacobi-Trudi); each term is a chain of
  // Pieri operators applied to sigma_b.
  const int l = a.length();
  std::map<Partition, long> acc;
  std::vector<int> w(l);
  std::iota(w.begin(), w.end(), 0);
  do {
    std::map<Partition, long> cur{{b, 1}};
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      const int k = a[i] - i + w[i];
      if (k < 0) {
        dead = true;
        break;
      }
      std::map<Partition, long> next;
      for (const auto& [p, c] : cur) {
        for (const Partition& q : pieri(p, k)) next[q] += c;
      }
      cur = std::move(next);
      if (cur.empty()) dead = true;
    }
    if (dead) continue;
    const int s = perm_sign(w);
    for (const auto& [p, c] : cur) acc[p] += s * c;
  } while (std::next_permutation(w.begin(), w.end()));

  std::vector<Term> out;
  for (const auto& [p, c] : acc) {
    if (c != 0) out.push_back(Term{index_of(p), c});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  return out;
}

// ---------------------------------------------------------------------------
// ChowElement

namespace {

template <class C>
std::string render(const ChowElement<C>& x, const std::function<std::string(const C&)>& coeff_str) {
  const auto& ring = *x.ring();
  std::vector<std::size_t> order(ring.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ring.basis(a).size() != ring.basis(b).size()) return ring.basis(a).size() > ring.basis(b).size();
    return ring.basis(a) > ring.basis(b);
  });
  std::string out;
  for (std::size_t i : order) {
    const C& c = x.coeff(i);
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = coeff_str(c);
    if (cs != "1") out += cs + "*";
    out += ring.basis(i).to_string();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

template <>
std::string ChowElement<Integer>::to_string() const {
  return render<Integer>(*this, [](const Integer& c) { return c < 0 ? "(" + c.get_str() + ")" : c.get_str(); });
}

template <>
std::string ChowElement<IntPoly>::to_string() const {
  return render<IntPoly>(*this, [](const IntPoly& c) {
    const std::string s = c.to_string("d");
    return s == "1" ? s : "(" + s + ")";
  });
}

ChowPoly lift(const ChowInt& x) {
  ChowPoly out(x.ring());
  for (std::size_t i = 0; i < x.ring()->size(); ++i) out.set(i, IntPoly(x.coeff(i)));
  return out;
}

ChowInt lr_multiply(const ChowInt& a, const ChowInt& b) { return a * b; }

// ---------------------------------------------------------------------------
// Bundles

ChowInt BundleChern::total() const {
  ChowInt out(ring());
  for (const auto& c : classes) out += c;
  return out;
}

BundleChern trivial_bundle(RingPtr ring, long rank) {
  BundleChern b;
  b.rank = rank;
  b.classes.assign(static_cast<std::size_t>(rank) + 1, ChowInt(ring));
  b.classes[0] = ChowInt::one(ring);
  return b;
}

BundleChern taut_sub(RingPtr ring) {
  BundleChern b = trivial_bundle(ring, ring->r());
  for (int k = 1; k <= ring->r(); ++k) {
    b.classes[k] = ChowInt::schubert(ring, Partition::column(k), Integer(parity_sign(k)));
  }
  return b;
}

BundleChern taut_quot(RingPtr ring) {
  BundleChern b = trivial_bundle(ring, ring->n() - ring->r());
  for (int k = 1; k <= ring->n() - ring->r(); ++k) b.classes[k] = ChowInt::schubert(ring, Partition::row(k));
  return b;
}

BundleChern chern_dual(const BundleChern& b) {
  BundleChern out = b;
  for (std::size_t k = 1; k < out.classes.size(); k += 2) out.classes[k] *= Integer(-1);
  return out;
}

BundleChern chern_sum(const BundleChern& a, const BundleChern& b) {
  BundleChern out = trivial_bundle(a.ring(), a.rank + b.rank);
  out.classes[0] = ChowInt(a.ring());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    if (a.classes[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.classes.size(); ++j) {
      if (b.classes[j].is_zero()) continue;
      out.classes[i + j] += a.classes[i] * b.classes[j];
    }
  }
  return out;
}

BundleChern chern_power(const BundleChern& b, long m) {
  if (m < 0) throw invalid_input("chern_power needs m >= 0");
  BundleChern out = trivial_bundle(b.ring(), 0);
  for (long k = 0; k < m; ++k) out = chern_sum(out, b);
  return out;
}

namespace {

using Mono = std::vector<int>;
using MPoly = std::map<Mono, Integer>;

MPoly mpoly_mul(const MPoly& a, const MPoly& b, int max_degree) {
  MPoly out;
  for (const auto& [ma, ca] : a) {
    const int da = std::accumulate(ma.begin(), ma.end(), 0);
    for (const auto& [mb, cb] : b) {
      const int db = std::accumulate(mb.begin(), mb.end(), 0);
      if (da + db > max_degree) continue;
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

// e_k in the variables [offset, offset + count) of a vars-variable ring.
MPoly elementary(int k, int offset, int count, int vars) {
  MPoly out;
  std::vector<int> pick(count, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    Mono m(vars, 0);
    for (int i = 0; i < count; ++i) m[offset + i] = pick[i];
    out[m] = 1;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

std::vector<TensorTerm> tensor_chern_formula(int a, int b, int max_degree) {
  const int vars = a + b;
  std::vector<TensorTerm> terms;
  if (a == 0 || b == 0) {
    terms.push_back(TensorTerm{std::vector<int>(a, 0), std::vector<int>(b, 0), 1});
    return terms;
  }
  max_degree = std::min(max_degree, a * b);

  // prod_{i,j} (1 + x_i + y_j)
  MPoly poly{{Mono(vars, 0), 1}};
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      MPoly factor{{Mono(vars, 0), 1}};
      Mono xi(vars, 0);
      xi[i] = 1;
      Mono yj(vars, 0);
      yj[a + j] = 1;
      factor[xi] += 1;
      factor[yj] += 1;
      poly = mpoly_mul(poly, factor, max_degree);
    }
  }

  std::vector<MPoly> ex(a + 1);
  std::vector<MPoly> ey(b + 1);
  for (int k = 1; k <= a; ++k) ex[k] = elementary(k, 0, a, vars);
  for (int k = 1; k <= b; ++k) ey[k] = elementary(k, a, b, vars);

  // Peel off lex-leading monomials; for a polynomial symmetric in x and in y
  // separately the leading exponent is sorted within each block.
  while (!poly.empty()) {
    const auto lead = std::prev(poly.end());
    const Mono m = lead->first;
    const Integer c = lead->second;
    TensorTerm t{std::vector<int>(a, 0), std::vector<int>(b, 0), c};
    for (int k = 1; k <= a; ++k) t.e_pows[k - 1] = m[k - 1] - (k < a ? m[k] : 0);
    for (int k = 1; k <= b; ++k) t.f_pows[k - 1] = m[a + k - 1] - (k < b ? m[a + k] : 0);
    for (int v : t.e_pows) {
      if (v < 0) throw Error(ErrorKind::Internal, "tensor Chern reduction met a non-symmetric remainder");
    }
    for (int v : t.f_pows) {
      if (v < 0) throw Error(ErrorKind::Internal, "tensor Chern reduction met a non-symmetric remainder");
    }

    MPoly prod{{Mono(vars, 0), c}};
    for (int k = 1; k <= a; ++k) {
      for (int p = 0; p < t.e_pows[k - 1]; ++p) prod = mpoly_mul(prod, ex[k], max_degree);
    }
    for (int k = 1; k <= b; ++k) {
      for (int p = 0; p < t.f_pows[k - 1]; ++p) prod = mpoly_mul(prod, ey[k], max_degree);
    }
    for (const auto& [mono, coeff] : prod) {
      Integer& slot = poly[mono];
      slot -= coeff;
      if (is_zero(slot)) poly.erase(mono);
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

BundleChern chern_tensor(const BundleChern& a, const BundleChern& b) {
  const RingPtr& ring = a.ring();
  if (ring->r() != b.ring()->r() || ring->n() != b.ring()->n()) {
    throw invalid_input("bundles live on different Grassmannians");
  }
  const int ra = static_cast<int>(a.rank);
  const int rb = static_cast<int>(b.rank);
  const auto formula = tensor_chern_formula(ra, rb, ring->dimension());

  BundleChern out = trivial_bundle(ring, a.rank * b.rank);
  out.classes[0] = ChowInt(ring);
  for (const TensorTerm& t : formula) {
    ChowInt term = ChowInt::one(ring);
    int degree = 0;
    for (int k = 1; k <= ra; ++k) {
      for (int p = 0; p < t.e_pows[k - 1]; ++p) term = term * a.classes[k];
      degree += k * t.e_pows[k - 1];
    }
    for (int k = 1; k <= rb; ++k) {
      for (int p = 0; p < t.f_pows[k - 1]; ++p) term = term * b.classes[k];
      degree += k * t.f_pows[k - 1];
    }
    out.classes[degree] += term * t.coeff;
  }
  return out;
}

}  // namespace reflective
