#include <random>

#include "doctest.h"
#include "qpark/poly.hpp"

using namespace qpark;

namespace {

LaurentPoly X(int doubled) { return LaurentPoly::x_power(doubled); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-6, 6);
  std::uniform_int_distribution<int> coeff(-9, 9);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(exp(rng), BigInt(coeff(rng)));
  return p;
}

}  // namespace

TEST_CASE("laurent add") {
  LaurentPoly x = LaurentPoly::x();
  CHECK((x + LaurentPoly(1) + LaurentPoly(-1)) == x);
  CHECK((LaurentPoly() + LaurentPoly()) == LaurentPoly());
  LaurentPoly xm1 = x - LaurentPoly(1);
  LaurentPoly two_xm1 = xm1 + xm1;
  CHECK(two_xm1 == x.scaled(2) - LaurentPoly(2));
}

TEST_CASE("laurent mul") {
  LaurentPoly x = LaurentPoly::x();
  LaurentPoly one = LaurentPoly::one();
  CHECK((x - one) * (x + one) == X(4) - one);
  CHECK(X(1) * X(1) == x);  // X^{1/2} * X^{1/2}
  LaurentPoly q2 = LaurentPoly::quantum_integer(2);
  LaurentPoly expect;  // 1 + 2X + X^2, expanded by hand
  expect.add_term(0, 1);
  expect.add_term(2, 2);
  expect.add_term(4, 1);
  CHECK(q2 * q2 == expect);
}

TEST_CASE("laurent exact division") {
  LaurentPoly x = LaurentPoly::x();
  LaurentPoly one = LaurentPoly::one();
  CHECK((X(4) - one).exact_div(x - one) == x + one);
  // [4]/[2] = (1+X+X^2+X^3)/(1+X) = 1+X^2
  CHECK(LaurentPoly::quantum_integer(4).exact_div(LaurentPoly::quantum_integer(2)) ==
        one + X(4));
  CHECK_THROWS_AS((X(4) + one).exact_div(x - one), Error);
  try {
    (X(4) + one).exact_div(x - one);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NonExactDivision);
  }
}

TEST_CASE("laurent eval") {
  CHECK(LaurentPoly::quantum_integer(3).eval(BigRat(1)) == 3);
  // X^{-1}(X-1) at X=2 -> 1/2
  LaurentPoly p = (LaurentPoly::x() - LaurentPoly(1)).shifted(-2);
  CHECK(p.eval(BigRat(2)) == BigRat(1, 2));
  CHECK(X(1).eval(BigRat(4)) == 2);
  CHECK_THROWS_AS(X(1).eval(BigRat(2)), Error);
  CHECK_THROWS_AS(X(-2).eval(BigRat(0)), Error);
}

TEST_CASE("quantum integers at negative arguments") {
  // [k]_X = (X^k - 1)/(X - 1) for every k
  LaurentPoly xm1 = LaurentPoly::x() - LaurentPoly(1);
  for (long k = -5; k <= 5; ++k) {
    CHECK(LaurentPoly::quantum_integer(k) * xm1 ==
          X(2 * static_cast<int>(k)) - LaurentPoly(1));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact div round trip") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng);
    LaurentPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937_64 rng(999);
  std::uniform_int_distribution<int> pick(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    BigRat t(pick(rng) * pick(rng), pick(rng));
    t = t * t;  // admissible for half exponents
    CHECK((a * b).eval(t) == a.eval(t) * b.eval(t));
    CHECK((a + b).eval(t) == a.eval(t) + b.eval(t));
  }
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly a = random_poly(rng);
    CHECK(LaurentPoly::from_json(a.json()) == a);
  }
}

TEST_CASE("bivar basics") {
  BivarPoly a = BivarPoly::monomial(1, 1, 0) - BivarPoly::monomial(1, -1, 0);
  BivarPoly prod = a * a;
  CHECK(prod.a_coefficient(2) == LaurentPoly(1));
  CHECK(prod.a_coefficient(0) == LaurentPoly(-2));
  CHECK(prod.a_coefficient(-2) == LaurentPoly(1));
  CHECK(prod.a_support() == std::vector<int>{-2, 0, 2});
}
