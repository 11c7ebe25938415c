#include "qpark/poly.hpp"

#include <sstream>

#include "json.hpp"

namespace qpark {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int doubled_exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[doubled_exp] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::quantum_integer(long k) {
  LaurentPoly p;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) p.terms_[2 * static_cast<int>(i)] = 1;
  } else {
    // [k]_X = (X^k - 1)/(X - 1) = -X^k [−k]_X for k < 0.
    for (long i = 0; i < -k; ++i) p.terms_[2 * static_cast<int>(k + i)] = -1;
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::has_integer_exponents_only() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

BigInt LaurentPoly::coeff(int doubled_exp) const {
  auto it = terms_.find(doubled_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_doubled_exp() const {
  require(!terms_.empty(), Errc::DomainError, "min exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_doubled_exp() const {
  require(!terms_.empty(), Errc::DomainError, "max exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int doubled_exp, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(doubled_exp);
  if (it == terms_.end()) {
    terms_.emplace(doubled_exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int doubled_exp) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + doubled_exp] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = one();
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
  require(!b.is_zero(), Errc::DomainError, "division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  // If a = c*b then ord(c) = ord(a) - ord(b), deg(c) = deg(a) - deg(b);
  // long division from the top stays within this window or fails.
  const int lo = min_doubled_exp() - b.min_doubled_exp();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int bdeg = b.max_doubled_exp();
  const BigInt& blead = b.terms().rbegin()->second;
  while (!rem.is_zero()) {
    const int e = rem.max_doubled_exp() - bdeg;
    if (e < lo) fail(Errc::NonExactDivision, "non-exact polynomial division");
    const BigInt& rlead = rem.terms().rbegin()->second;
    if (rlead % blead != 0) fail(Errc::NonExactDivision, "non-exact polynomial division");
    BigInt q = rlead / blead;
    quot.add_term(e, q);
    for (const auto& [be, bc] : b.terms()) rem.add_term(be + e, -q * bc);
  }
  return quot;
}

bool LaurentPoly::divides(const LaurentPoly& a) const {
  try {
    (void)a.exact_div(*this);
    return true;
  } catch (const Error& err) {
    if (err.code == Errc::NonExactDivision) return false;
    throw;
  }
}

BigRat LaurentPoly::eval(const BigRat& t) const {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  require(t != 0 || (terms_.empty() || min_doubled_exp() >= 0), Errc::DomainError,
          "evaluation at 0 with negative exponents");
  BigRat sqrt_t = 0;
  bool have_sqrt = false;
  BigRat total = 0;
  for (const auto& [e, c] : terms_) {
    BigRat val;
    if (e % 2 == 0) {
      val = (e >= 0) ? BigRat(boost::multiprecision::pow(numerator(t), e / 2),
                              boost::multiprecision::pow(denominator(t), e / 2))
                     : BigRat(boost::multiprecision::pow(denominator(t), -e / 2),
                              boost::multiprecision::pow(numerator(t), -e / 2));
    } else {
      if (!have_sqrt) {
        require(t >= 0, Errc::DomainError, "square root of a negative value");
        BigInt n = numerator(t), d = denominator(t);
        BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
        require(rn * rn == n && rd * rd == d, Errc::DomainError,
                "half-integer exponent at a non-square rational");
        sqrt_t = BigRat(rn, rd);
        have_sqrt = true;
        require(sqrt_t != 0 || e >= 0, Errc::DomainError, "evaluation at 0");
      }
      int k = (e >= 0) ? e : -e;
      BigRat p = 1;
      BigRat base = (e >= 0) ? sqrt_t : BigRat(1) / sqrt_t;
      for (int i = 0; i < k; ++i) p *= base;
      val = p;
    }
    total += BigRat(c) * val;
  }
  return total;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print from highest exponent down.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "X";
    if (e != 2) {
      if (e % 2 == 0)
        os << "^" << e / 2;
      else
        os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

std::string LaurentPoly::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({e, c.str()});
  return arr.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& s) {
  nlohmann::json arr = nlohmann::json::parse(s);
  LaurentPoly p;
  for (const auto& item : arr) {
    p.add_term(item.at(0).get<int>(), BigInt(item.at(1).get<std::string>()));
  }
  return p;
}

BivarPoly::BivarPoly(BigInt constant) {
  if (constant != 0) terms_[{0, 0}] = std::move(constant);
}

BivarPoly BivarPoly::monomial(BigInt coeff, int a_exp, int doubled_x_exp) {
  BivarPoly p;
  if (coeff != 0) p.terms_[{a_exp, doubled_x_exp}] = std::move(coeff);
  return p;
}

BivarPoly BivarPoly::from_laurent(const LaurentPoly& p, int a_exp) {
  BivarPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_[{a_exp, e}] = c;
  return r;
}

void BivarPoly::add_term(int a_exp, int doubled_x_exp, const BigInt& c) {
  if (c == 0) return;
  auto key = std::make_pair(a_exp, doubled_x_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  r += o;
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  BivarPoly r = *this;
  r += -o;
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

LaurentPoly BivarPoly::a_coefficient(int a_exp) const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_)
    if (k.first == a_exp) p.add_term(k.second, c);
  return p;
}

std::vector<int> BivarPoly::a_support() const {
  std::vector<int> out;
  for (const auto& [k, c] : terms_)
    if (out.empty() || out.back() != k.first) out.push_back(k.first);
  return out;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (a != 1 || (k.first == 0 && k.second == 0)) {
      os << a;
      printed = true;
    }
    if (k.first != 0) {
      if (printed) os << "*";
      os << "a";
      if (k.first != 1) os << "^" << k.first;
      printed = true;
    }
    if (k.second != 0) {
      if (printed) os << "*";
      os << "X";
      if (k.second != 2) {
        if (k.second % 2 == 0)
          os << "^" << k.second / 2;
        else
          os << "^(" << k.second << "/2)";
      }
    }
  }
  return os.str();
}

std::string BivarPoly::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    arr.push_back({{k.first, k.second}, c.str()});
  return arr.dump();
}

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string rat_str(const BigRat& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace qpark
