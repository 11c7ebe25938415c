#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpark/error.hpp"

namespace qpark {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Sparse Laurent polynomial in X with integer coefficients.
///
/// Exponents are stored doubled so that half-integer powers of X stay
/// integral: the key `2k` represents X^k and `2k+1` represents X^{k+1/2}.
/// The zero coefficient is never stored, so equality of term maps is
/// equality of values.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant);
  explicit LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

  // Monomial c * X^{d/2}.
  static LaurentPoly monomial(BigInt coeff, int doubled_exp);
  static LaurentPoly x_power(int doubled_exp) { return monomial(1, doubled_exp); }
  static LaurentPoly x() { return x_power(2); }
  static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

  // Quantum integer [k]_X = (X^k - 1)/(X - 1), extended to k < 0 by the same
  // rational expression: [-k]_X = -X^{-k} [k]_X.
  static LaurentPoly quantum_integer(long k);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when every exponent is an even doubled exponent (integer powers).
  bool has_integer_exponents_only() const;

  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int doubled_exp) const;
  int min_doubled_exp() const;  // requires nonzero
  int max_doubled_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly scaled(const BigInt& c) const;
  // Multiplication by X^{d/2}.
  LaurentPoly shifted(int doubled_exp) const;
  LaurentPoly pow(unsigned k) const;

  // Exact division: returns c with (*this) == c * b, over the integers.
  // Throws NonExactDivision when no such Laurent polynomial exists.
  LaurentPoly exact_div(const LaurentPoly& b) const;
  bool divides(const LaurentPoly& a) const;  // *this | a

  // Exact evaluation at X = t.  For half-integer exponents t must be the
  // square of a rational; for negative exponents t must be nonzero.
  BigRat eval(const BigRat& t) const;
  BigInt value_at_one() const;

  void add_term(int doubled_exp, const BigInt& c);

  std::string str() const;      // human-readable, exponents printed as k or k/2
  std::string json() const;     // [[doubled_exp, "coeff"], ...] sorted
  static LaurentPoly from_json(const std::string& s);

 private:
  std::map<int, BigInt> terms_;
};

/// Polynomial in a^{±1} and X^{±1/2}: key is (a exponent, doubled X exponent).
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(BigInt constant);

  static BivarPoly monomial(BigInt coeff, int a_exp, int doubled_x_exp);
  static BivarPoly from_laurent(const LaurentPoly& p, int a_exp = 0);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

  BivarPoly operator-() const;
  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly& operator+=(const BivarPoly& o);
  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

  // Coefficient of a^k as a Laurent polynomial in X.
  LaurentPoly a_coefficient(int a_exp) const;
  std::vector<int> a_support() const;

  void add_term(int a_exp, int doubled_x_exp, const BigInt& c);

  std::string str() const;
  std::string json() const;

 private:
  std::map<std::pair<int, int>, BigInt> terms_;
};

// gcd helpers shared by the symmetric-function layer.
BigInt big_gcd(BigInt a, BigInt b);

// Pretty-print a rational without trailing "/1".
std::string rat_str(const BigRat& r);

}  // namespace qpark
