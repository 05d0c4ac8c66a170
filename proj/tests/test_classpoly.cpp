#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reflective/classpoly.hpp"
#include "reflective/errors.hpp"

using namespace reflective;

namespace {

ClassPoly cp(std::initializer_list<long> c, std::size_t N) { return ClassPoly::from(c, N); }

ClassPoly from_coeffs(const oracle::Coeffs& c, std::size_t N) { return ClassPoly(c, N); }

}  // namespace

TEST_CASE("ring arithmetic truncates at the modulus") {
  CHECK(cp({0, 1}, 3) + cp({0, 1}, 3) == cp({0, 2}, 3));
  CHECK(mul(cp({0, 0, 1}, 4), cp({0, 0, 1}, 4)).is_zero());
  CHECK(mul(cp({1, 1}, 3), cp({1, 1}, 3)) == cp({1, 2, 1}, 3));
  CHECK(scale(cp({1, -2}, 2), 3) == cp({3, -6}, 2));
  CHECK_THROWS_AS(add(cp({1}, 2), cp({1}, 3)), Error);
}

TEST_CASE("dimension, degree and Euler characteristic") {
  const ClassPoly q = cp({0, 2, 4, 4}, 4);
  CHECK(q.dim() == 2);
  CHECK(q.codim() == 1u);
  CHECK(q.degree() == 2);
  CHECK(q.euler_characteristic() == 4);
  CHECK_THROWS_AS(ClassPoly(4).dim(), Error);
}

TEST_CASE("evaluation") {
  CHECK(cp({0, 3, 9, 10, 6, 3}, 6).eval(-1) == -1);
  CHECK(cp({0, 0, 0, 4, 6, 3}, 6).eval(-1) == -1);
  CHECK(ClassPoly(5).eval(7) == 0);
}

TEST_CASE("involution examples") {
  CHECK(involute(cp({0, 1}, 2), 1) == cp({0, 1}, 2));
  CHECK(involute(cp({0, 1}, 3), 2) == cp({0, 2, 3}, 3));
  CHECK(involute(cp({0, 3, 9, 10, 6, 3}, 6), 5) == cp({0, 0, 0, 4, 6, 3}, 6));
  CHECK(involute(cp({0, 2, 4, 2}, 4), 3) == cp({0, 0, -2, -2}, 4));
}

TEST_CASE("involution preconditions") {
  CHECK_THROWS_AS(involute(cp({0, 0, 1}, 3), 1), Error);
  CHECK_THROWS_AS(involute(cp({0, 1}, 2), 3), Error);
}

TEST_CASE("involution agrees with the binomial-expansion oracle") {
  std::mt19937_64 rng(7);
  for (int d = 1; d <= 12; ++d) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = oracle::random_poly(rng, d, 50);
      const std::size_t N = static_cast<std::size_t>(d + 1);
      CHECK(involute(from_coeffs(f, N), d) == from_coeffs(oracle::involution(f, d), N));
    }
  }
}

TEST_CASE("involution is an involution and linear") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> scalar(-20, 20);
  for (int d = 1; d <= 12; ++d) {
    const std::size_t N = static_cast<std::size_t>(d + 1);
    for (int trial = 0; trial < 50; ++trial) {
      const ClassPoly f = from_coeffs(oracle::random_poly(rng, d, 50), N);
      const ClassPoly g = from_coeffs(oracle::random_poly(rng, d, 50), N);
      const Integer a = scalar(rng);
      const Integer b = scalar(rng);
      CHECK(involute(involute(f, d), d) == f);
      CHECK(involute(f * a + g * b, d) == involute(f, d) * a + involute(g, d) * b);
    }
  }
}

TEST_CASE("I_n(H B_n) = (-1)^{n+1} H B_n") {
  for (long n = 1; n <= 12; ++n) {
    const std::size_t N = static_cast<std::size_t>(n + 1);
    const ClassPoly hb = ClassPoly::monomial(1, N) * chern_B(n, N);
    CHECK(involute(hb, n) == hb * Integer(parity_sign(n + 1)));
  }
}

TEST_CASE("signed classes") {
  CHECK(signed_class(cp({0, 0, 0, 1}, 4)) == cp({0, 0, 0, 1}, 4));
  CHECK(signed_class(cp({0, 2, 4, 4}, 4)) == cp({0, 2, 4, 4}, 4));
  CHECK(signed_class(cp({1, 2}, 2)) == cp({-1, -2}, 2));
  CHECK(signed_class(cp({1, 2}, 2), 0) == cp({1, 2}, 2));
  CHECK_THROWS_AS(signed_class(ClassPoly(3)), Error);
}

TEST_CASE("B_n") {
  CHECK(chern_B(1, 2) == cp({1, 2}, 2));
  CHECK(chern_B(3, 4) == cp({1, 4, 6, 4}, 4));
  CHECK(chern_B(2, 6) == cp({1, 3, 3}, 6));
  for (long n = 0; n <= 10; ++n) {
    const ClassPoly b = chern_B(n, static_cast<std::size_t>(n + 3));
    CHECK(b.eval(0) == 1);
    CHECK(b[static_cast<std::size_t>(n)] == n + 1);
  }
}

TEST_CASE("division by 1 + 2H") {
  CHECK(div_1p2H(cp({0, 2, 8, 12}, 4)) == cp({0, 2, 4, 4}, 4));
  CHECK(div_1p2H(cp({1, 2}, 4)) == cp({1}, 4));
  CHECK(div_1p2H(ClassPoly::monomial(5, 6)) == ClassPoly::monomial(5, 6));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ClassPoly f = from_coeffs(oracle::random_poly(rng, 7, 1000), 8);
    CHECK(div_1p2H(mul(f, cp({1, 2}, 8))) == f);
  }
}

TEST_CASE("coefficient lists and rendering") {
  CHECK(parse_coeff_list("0, 3,9") == std::vector<Integer>{0, 3, 9});
  CHECK(parse_coeff_list("-123456789012345678901234567890")[0] == Integer("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_coeff_list("1,,2"), Error);
  CHECK_THROWS_AS(parse_coeff_list("1,x"), Error);
  CHECK_THROWS_AS(parse_coeff_list(""), Error);
  CHECK(cp({1, -2, 0, 3}, 4).to_string() == "1 - 2*H + 3*H^3");
  CHECK(ClassPoly(3).to_string() == "0");
}
