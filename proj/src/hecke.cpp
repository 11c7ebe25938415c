#include "qpark/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qpark {

HeckeElement HeckeElement::basis(const CoxeterSystem* sys, const CoxeterElement& w,
                                 LaurentPoly coeff) {
  HeckeElement h(sys);
  if (!coeff.is_zero()) h.terms_.emplace(w, std::move(coeff));
  return h;
}

HeckeElement HeckeElement::unit(const CoxeterSystem* sys) { return basis(sys, sys->identity()); }

HeckeElement HeckeElement::t_word(const CoxeterSystem* sys, const std::vector<int>& word) {
  HeckeElement h = unit(sys);
  for (int s : word) h = h.mul_gen_right(s);
  return h;
}

HeckeElement HeckeElement::gen_inverse(const CoxeterSystem* sys, int s) {
  HeckeElement h(sys);
  h.add(sys->generator(s), LaurentPoly::x_power(-2));
  LaurentPoly c = LaurentPoly::x_power(-2) - LaurentPoly::one();
  h.add(sys->identity(), c);
  return h;
}

LaurentPoly HeckeElement::coeff(const CoxeterElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const CoxeterElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  require(sys_ == o.sys_, Errc::SystemMismatch, "Hecke elements of different systems");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  require(sys_ == o.sys_, Errc::SystemMismatch, "Hecke elements of different systems");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement r(sys_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

HeckeElement HeckeElement::mul_gen_right(int s) const {
  HeckeElement r(sys_);
  const LaurentPoly x = LaurentPoly::x();
  const LaurentPoly xm1 = x - LaurentPoly::one();
  for (const auto& [w, c] : terms_) {
    if (!w.right_descent(s)) {
      r.add(w.mul_gen_right(s), c);
    } else {
      r.add(w.mul_gen_right(s), c * x);
      r.add(w, c * xm1);
    }
  }
  return r;
}

HeckeElement HeckeElement::mul_gen_left(int s) const {
  HeckeElement r(sys_);
  const LaurentPoly x = LaurentPoly::x();
  const LaurentPoly xm1 = x - LaurentPoly::one();
  for (const auto& [w, c] : terms_) {
    if (!w.left_descent(s)) {
      r.add(w.mul_gen_left(s), c);
    } else {
      r.add(w.mul_gen_left(s), c * x);
      r.add(w, c * xm1);
    }
  }
  return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  require(sys_ == o.sys_, Errc::SystemMismatch, "Hecke elements of different systems");
  HeckeElement total(sys_);
  for (const auto& [u, c] : terms_) {
    // T_u * o, letter by letter from the right end of a reduced word of u.
    HeckeElement acc = o;
    std::vector<int> word = u.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc.mul_gen_left(*it);
    for (const auto& [w, k] : acc.terms_) total.add(w, c * k);
  }
  return total;
}

LaurentPoly HeckeElement::tau() const {
  if (!sys_) return LaurentPoly();
  return coeff(sys_->identity());
}

bool HeckeElement::is_central() const {
  for (int s = 1; s <= sys_->rank(); ++s)
    if (mul_gen_right(s) != mul_gen_left(s)) return false;
  return true;
}

bool HeckeElement::commutes_with_gens(const std::set<int>& J) const {
  for (int s : J)
    if (mul_gen_right(s) != mul_gen_left(s)) return false;
  return true;
}

bool HeckeElement::supported_on(const std::set<int>& J) const {
  for (const auto& [w, c] : terms_)
    for (int s : w.reduced_word())
      if (!J.count(s)) return false;
  return true;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*T[";
    auto word = w.reduced_word();
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) os << " ";
      os << word[i];
    }
    os << "]";
  }
  return os.str();
}

std::string HeckeElement::json() const {
  std::vector<std::pair<std::vector<int>, const LaurentPoly*>> items;
  for (const auto& [w, c] : terms_) items.push_back({w.reduced_word(), &c});
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [word, c] : items)
    arr.push_back({word, nlohmann::json::parse(c->json())});
  return arr.dump();
}

LaurentPoly tau_product(const HeckeElement& a, const HeckeElement& b) {
  require(&a.system() == &b.system(), Errc::SystemMismatch, "different systems");
  LaurentPoly total;
  for (const auto& [u, c] : a.terms()) {
    auto it = b.terms().find(u.inverse());
    if (it == b.terms().end()) continue;
    total += (c * it->second).shifted(2 * u.length());
  }
  return total;
}

HeckeElement relative_norm(const CoxeterSystem* sys, const std::set<int>& J,
                           const HeckeElement& alpha) {
  require(alpha.supported_on(J), Errc::NotCentral, "norm input not supported on W_J");
  require(alpha.commutes_with_gens(J), Errc::NotCentral, "norm input not central in H_{W_J}");
  HeckeElement total(sys);
  for (const auto& v : sys->coset_reps(J, -1)) {
    HeckeElement term = HeckeElement::basis(sys, v.inverse()) * alpha *
                        HeckeElement::basis(sys, v);
    term = term.scaled(LaurentPoly::x_power(-2 * v.length()));
    total = total + term;
  }
  return total;
}

HeckeElement sigma_elt(const CoxeterSystem* sys, const std::set<int>& J, int sign) {
  HeckeElement total(sys);
  for (const auto& v : sys->coset_reps(J, sign)) {
    HeckeElement term = HeckeElement::basis(sys, v.inverse()) * HeckeElement::basis(sys, v);
    term = term.scaled(LaurentPoly::x_power(-2 * v.length()));
    total = total + term;
  }
  return total;
}

HeckeElement zeta_elt(const CoxeterSystem* sys, const std::set<int>& I, int sign) {
  HeckeElement total(sys);
  for (const auto& v : sys->elements()) {
    const std::set<int> set = (sign < 0) ? v.ascents() : v.descents();
    if (set != I) continue;
    HeckeElement term = HeckeElement::basis(sys, v.inverse()) * HeckeElement::basis(sys, v);
    term = term.scaled(LaurentPoly::x_power(-2 * v.length()));
    total = total + term;
  }
  return total;
}

LaurentPoly tau_central(const HeckeElement& zeta, const HeckeElement& beta) {
  require(zeta.is_central(), Errc::NotCentral, "tau[zeta] requires a central element");
  return tau_product(beta, zeta);
}

HeckeElement jm_element(const CoxeterSystem* sys, int k) {
  require(sys->family() == Family::A, Errc::WrongFamily, "JM elements live in type A");
  require(k >= 1 && k <= sys->rank(), Errc::InvalidInput, "JM index out of range");
  std::vector<int> down, up;
  for (int i = k; i >= 1; --i) down.push_back(i);
  for (int i = 1; i <= k; ++i) up.push_back(i);
  HeckeElement h = HeckeElement::t_word(sys, down) * HeckeElement::t_word(sys, up);
  return h.scaled(LaurentPoly::x_power(-2 * k));
}

HeckeElement esym_jm(const CoxeterSystem* sys, int k) {
  require(sys->family() == Family::A, Errc::WrongFamily, "JM elements live in type A");
  const int n1 = sys->rank();  // n - 1
  require(k >= 0 && k <= n1, Errc::InvalidInput, "degree out of range");
  // coeffs[j] tracks the y^j coefficient of prod_i (1 + y JM_i).
  std::vector<HeckeElement> coeffs(k + 1, HeckeElement(sys));
  coeffs[0] = HeckeElement::unit(sys);
  for (int i = 1; i <= n1; ++i) {
    HeckeElement jm = jm_element(sys, i);
    for (int j = std::min(k, i); j >= 1; --j) coeffs[j] = coeffs[j] + coeffs[j - 1] * jm;
  }
  return coeffs[k];
}

HeckeElement full_twist(const CoxeterSystem* sys) {
  HeckeElement t = HeckeElement::basis(sys, sys->longest_element());
  return (t * t).scaled(LaurentPoly::x_power(-2 * sys->longest_element().length()));
}

LaurentPoly z_poly() {
  LaurentPoly z;
  z.add_term(1, BigInt(1));
  z.add_term(-1, BigInt(-1));
  return z;
}

void MarkovValue::normalize() {
  const LaurentPoly z = z_poly();
  while (z_pow > 0 && !num.is_zero()) {
    BivarPoly reduced;
    bool ok = true;
    for (int a : num.a_support()) {
      LaurentPoly slice = num.a_coefficient(a);
      if (!z.divides(slice)) {
        ok = false;
        break;
      }
      reduced += BivarPoly::from_laurent(slice.exact_div(z), a);
    }
    if (!ok) break;
    num = reduced;
    --z_pow;
  }
  if (num.is_zero()) z_pow = 0;
}

MarkovValue MarkovValue::operator+(const MarkovValue& o) const {
  const LaurentPoly z = z_poly();
  MarkovValue r;
  r.z_pow = std::max(z_pow, o.z_pow);
  BivarPoly zb = BivarPoly::from_laurent(z);
  BivarPoly lhs = num, rhs = o.num;
  for (int i = z_pow; i < r.z_pow; ++i) lhs = lhs * zb;
  for (int i = o.z_pow; i < r.z_pow; ++i) rhs = rhs * zb;
  r.num = lhs + rhs;
  r.normalize();
  return r;
}

MarkovValue MarkovValue::operator*(const BivarPoly& m) const {
  MarkovValue r{num * m, z_pow};
  r.normalize();
  return r;
}

bool MarkovValue::operator==(const MarkovValue& o) const {
  MarkovValue a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.z_pow == b.z_pow && a.num == b.num;
}

std::string MarkovValue::str() const {
  std::string s = "(" + num.str() + ")";
  if (z_pow > 0) s += " / z^" + std::to_string(z_pow);
  return s;
}

void ZSlice::normalize() {
  const LaurentPoly z = z_poly();
  while (z_pow > 0 && !num.is_zero() && z.divides(num)) {
    num = num.exact_div(z);
    --z_pow;
  }
  if (num.is_zero()) z_pow = 0;
}

bool ZSlice::operator==(const ZSlice& o) const {
  ZSlice a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.z_pow == b.z_pow && a.num == b.num;
}

std::string ZSlice::str() const {
  std::string s = "(" + num.str() + ")";
  if (z_pow > 0) s += " / z^" + std::to_string(z_pow);
  return s;
}

MarkovTower::MarkovTower(int strands) : n_(strands) {
  require(strands >= 1, Errc::InvalidInput, "need at least one strand");
  levels_.resize(strands + 1);
  for (int k = 2; k <= strands; ++k) levels_[k] = CoxeterSystem::build(Family::A, k - 1);
}

const CoxeterSystem* MarkovTower::level(int k) const {
  require(k >= 2 && k <= n_, Errc::InvalidInput, "tower level out of range");
  return levels_[k].get();
}

MarkovValue MarkovTower::mu(const HeckeElement& h) const {
  require(n_ == 1 || &h.system() == levels_[n_].get(), Errc::SystemMismatch,
          "element does not live on the top tower level");
  MarkovValue total;
  for (const auto& [w, c] : h.terms()) {
    MarkovValue v = mu_basis(n_, w);
    total = total + v * BivarPoly::from_laurent(c);
  }
  return total;
}

ZSlice MarkovTower::a_slice(const MarkovValue& v, int a_exp) const {
  ZSlice s{v.num.a_coefficient(a_exp), v.z_pow};
  s.normalize();
  return s;
}

MarkovValue MarkovTower::mu_basis(int k, const CoxeterElement& w) const {
  if (k == 1) return MarkovValue{BivarPoly(BigInt(1)), 0};
  auto key = std::make_pair(k, w.data());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const CoxeterSystem* sys = levels_[k].get();
  MarkovValue result;
  if (w.data()[k - 1] == k) {
    // w lies in S_{k-1}: multiply by the Markov value of the free strand.
    MarkovValue sub;
    if (k == 2) {
      sub = MarkovValue{BivarPoly(BigInt(1)), 0};
    } else {
      std::vector<int> restricted(w.data().begin(), w.data().end() - 1);
      sub = mu_basis(k - 1, CoxeterElement(levels_[k - 1].get(), restricted));
    }
    BivarPoly a_minus_ainv = BivarPoly::monomial(1, 1, 0) - BivarPoly::monomial(1, -1, 0);
    result = MarkovValue{sub.num * a_minus_ainv, sub.z_pow + 1};
    result.normalize();
  } else {
    // w = u . s_{k-1} . (s_{k-2} ... s_j) with u, suffix in S_{k-1}; by the
    // trace property and the Markov condition,
    // mu_k(T_w) = (-a^{-1} X^{1/2}) mu_{k-1}(T_suffix T_u).
    const int j = w.inverse().data()[k - 1];
    std::vector<int> vword;
    for (int i = k - 1; i >= j; --i) vword.push_back(i);
    CoxeterElement v = sys->from_word(vword);
    CoxeterElement u = w * v.inverse();
    std::vector<int> suffix(vword.begin() + 1, vword.end());

    if (k == 2) {
      // only the identity remains
      MarkovValue sub{BivarPoly(BigInt(1)), 0};
      result = sub * (-BivarPoly::monomial(1, -1, 1));
    } else {
      const CoxeterSystem* down = levels_[k - 1].get();
      auto restrict = [&](const CoxeterElement& e) {
        std::vector<int> d(e.data().begin(), e.data().end() - 1);
        return CoxeterElement(down, d);
      };
      HeckeElement left = HeckeElement::t_word(down, suffix);
      HeckeElement right = HeckeElement::basis(down, restrict(u));
      HeckeElement c = left * right;
      MarkovValue sub;
      for (const auto& [x, cx] : c.terms()) {
        MarkovValue m = mu_basis(k - 1, x);
        sub = sub + m * BivarPoly::from_laurent(cx);
      }
      result = sub * (-BivarPoly::monomial(1, -1, 1));
    }
  }
  memo_.emplace(key, result);
  return result;
}

}  // namespace qpark
