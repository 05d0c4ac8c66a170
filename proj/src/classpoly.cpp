#include "reflective/classpoly.hpp"

#include <cctype>
#include <sstream>

#include "reflective/errors.hpp"

namespace reflective {

namespace {

void require_same_modulus(const ClassPoly& a, const ClassPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw invalid_input("modulus mismatch: H^" + std::to_string(a.modulus()) + " vs H^" +
                        std::to_string(b.modulus()));
  }
}

}  // namespace

ClassPoly::ClassPoly(std::size_t modulus) : coeffs_(modulus) {
  if (modulus == 0) throw invalid_input("class modulus must be positive");
}

ClassPoly::ClassPoly(std::vector<Integer> coeffs, std::size_t modulus) : coeffs_(std::move(coeffs)) {
  if (modulus == 0) throw invalid_input("class modulus must be positive");
  coeffs_.resize(modulus);
}

ClassPoly ClassPoly::from(std::initializer_list<long> coeffs, std::size_t modulus) {
  std::vector<Integer> c;
  for (long v : coeffs) c.emplace_back(v);
  return ClassPoly(std::move(c), modulus);
}

ClassPoly ClassPoly::monomial(std::size_t power, std::size_t modulus, const Integer& c) {
  ClassPoly out(modulus);
  if (power < modulus) out.coeffs_[power] = c;
  return out;
}

ClassPoly ClassPoly::truncate(const IntPoly& p, std::size_t modulus) {
  return ClassPoly(p.coeffs(), modulus);
}

bool ClassPoly::is_zero() const { return !codim().has_value(); }

std::optional<std::size_t> ClassPoly::codim() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!reflective::is_zero(coeffs_[k])) return k;
  }
  return std::nullopt;
}

long ClassPoly::dim() const {
  auto c = codim();
  if (!c) throw invalid_input("the zero class has no dimension");
  return ambient_dim() - static_cast<long>(*c);
}

long ClassPoly::poly_degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (!reflective::is_zero(coeffs_[k])) return static_cast<long>(k);
  }
  return -1;
}

Integer ClassPoly::degree() const {
  auto c = codim();
  return c ? coeffs_[*c] : Integer(0);
}

Integer ClassPoly::eval(const Integer& t) const { return to_intpoly().eval(t); }

IntPoly ClassPoly::to_intpoly() const { return IntPoly(coeffs_); }

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
  require_same_modulus(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
  require_same_modulus(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

ClassPoly& ClassPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
  require_same_modulus(a, b);
  const std::size_t n = a.modulus();
  ClassPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

std::string ClassPoly::to_string() const { return to_intpoly().to_string("H"); }

ClassPoly add(const ClassPoly& f, const ClassPoly& g) { return f + g; }
ClassPoly scale(const ClassPoly& f, const Integer& a) { return f * a; }
ClassPoly mul(const ClassPoly& f, const ClassPoly& g) { return f * g; }

ClassPoly involute(const ClassPoly& f, long d) {
  if (d < 0) throw invalid_input("involution degree must be nonnegative");
  if (f.modulus() < static_cast<std::size_t>(d) + 1) {
    throw invalid_input("involution I_" + std::to_string(d) + " needs modulus >= " + std::to_string(d + 1) +
                        ", got " + std::to_string(f.modulus()));
  }
  if (f.poly_degree() > d) {
    throw invalid_input("polynomial of degree " + std::to_string(f.poly_degree()) +
                        " is outside the domain of I_" + std::to_string(d));
  }
  const IntPoly p = f.to_intpoly();
  IntPoly out = p.compose_linear(-1, -1);
  out -= IntPoly::from({1, 1}).pow(d + 1) * p.eval(-1);
  out += IntPoly::monomial(static_cast<std::size_t>(d) + 1, p.eval(-1));
  return ClassPoly::truncate(out, f.modulus());
}

ClassPoly signed_class(const ClassPoly& f) { return signed_class(f, f.dim()); }

ClassPoly signed_class(const ClassPoly& f, long dim) { return f * Integer(parity_sign(dim)); }

ClassPoly chern_B(long n, std::size_t modulus) {
  if (n < 0) throw invalid_input("chern_B needs n >= 0");
  std::vector<Integer> c;
  for (long k = 0; k <= n; ++k) c.push_back(binomial(n + 1, k));
  return ClassPoly(std::move(c), modulus);
}

ClassPoly div_1p2H(const ClassPoly& f) {
  // g (1 + 2H) = f  =>  g_k = f_k - 2 g_{k-1}
  std::vector<Integer> g(f.modulus());
  for (std::size_t k = 0; k < f.modulus(); ++k) {
    g[k] = f[k];
    if (k > 0) g[k] -= 2 * g[k - 1];
  }
  return ClassPoly(std::move(g), f.modulus());
}

std::vector<Integer> parse_coeff_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string trimmed;
    for (char ch : item) {
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    }
    Integer value;
    if (trimmed.empty() || value.set_str(trimmed, 10) != 0) {
      throw invalid_input("malformed coefficient '" + item + "' in list '" + text + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw invalid_input("empty coefficient list");
  return out;
}

std::string join_coeffs(std::span<const Integer> coeffs, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) out += sep;
    out += coeffs[k].get_str();
  }
  return out;
}

}  // namespace reflective
