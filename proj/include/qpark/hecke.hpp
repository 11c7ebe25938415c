#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpark/coxeter.hpp"
#include "qpark/poly.hpp"

namespace qpark {

/// Element of the Hecke algebra H_W over Z[X^{±1/2}] in the T_w basis.
///
/// Multiplication is driven by the quadratic relation
/// T_s T_w = T_{sw} when l(sw) > l(w), and X T_{sw} + (X-1) T_w otherwise.
class HeckeElement {
 public:
  HeckeElement() : sys_(nullptr) {}
  explicit HeckeElement(const CoxeterSystem* sys) : sys_(sys) {}

  static HeckeElement basis(const CoxeterSystem* sys, const CoxeterElement& w,
                            LaurentPoly coeff = LaurentPoly::one());
  static HeckeElement unit(const CoxeterSystem* sys);
  // T_{s_1}...T_{s_k} for a word in S; a single T_w when the word is reduced.
  static HeckeElement t_word(const CoxeterSystem* sys, const std::vector<int>& word);
  // T_s^{-1} = X^{-1} T_s + (X^{-1} - 1).
  static HeckeElement gen_inverse(const CoxeterSystem* sys, int s);

  const CoxeterSystem& system() const { return *sys_; }
  const std::map<CoxeterElement, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const CoxeterElement& w) const;
  void add(const CoxeterElement& w, const LaurentPoly& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const HeckeElement& o) const;
  bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

  HeckeElement scaled(const LaurentPoly& c) const;
  HeckeElement mul_gen_right(int s) const;  // (*this) * T_s
  HeckeElement mul_gen_left(int s) const;   // T_s * (*this)

  // Coefficient of T_e.
  LaurentPoly tau() const;
  bool is_central() const;
  bool commutes_with_gens(const std::set<int>& J) const;
  bool supported_on(const std::set<int>& J) const;

  std::string str() const;
  std::string json() const;

 private:
  const CoxeterSystem* sys_;
  std::map<CoxeterElement, LaurentPoly> terms_;
};

// tau(a*b) computed through the bilinear pairing tau(T_u T_v) =
// X^{l(u)} [v = u^{-1}]; agrees with (a*b).tau() and avoids the product.
LaurentPoly tau_product(const HeckeElement& a, const HeckeElement& b);

// Relative norm N_J^S(alpha) = sum over minimal coset representatives v of
// X^{-l(v)} T_{v^{-1}} alpha T_v.  alpha must be supported on W_J and central
// in H_{W_J}; the result is central in H_W.
HeckeElement relative_norm(const CoxeterSystem* sys, const std::set<int>& J,
                           const HeckeElement& alpha);

// Sigma_{J,±} = sum over W^{J,±} of X^{-l(v)} T_{v^{-1}} T_v.
HeckeElement sigma_elt(const CoxeterSystem* sys, const std::set<int>& J, int sign);

// zeta_I^- / zeta_I^+: the same sums restricted to exact ascent (-) or
// descent (+) set I.
HeckeElement zeta_elt(const CoxeterSystem* sys, const std::set<int>& I, int sign);

// tau[zeta](beta) = tau(beta * zeta); zeta is checked for centrality.
LaurentPoly tau_central(const HeckeElement& zeta, const HeckeElement& beta);

// Multiplicative Jucys-Murphy element JM_k = X^{-k} T_{s_k...s_1} T_{s_1...s_k}
// (type A only).
HeckeElement jm_element(const CoxeterSystem* sys, int k);

// Elementary symmetric polynomial e_k(JM_1, ..., JM_{n-1}) computed by
// expanding the product of binomials (1 + y JM_i); type A only.
HeckeElement esym_jm(const CoxeterSystem* sys, int k);

// Full twist X^{-l_S} T_{w_o}^2.
HeckeElement full_twist(const CoxeterSystem* sys);

/// Value of the Ocneanu tower trace: a polynomial in a^{±1}, X^{±1/2} with a
/// tracked power of z = X^{1/2} - X^{-1/2} as denominator.
struct MarkovValue {
  BivarPoly num;
  int z_pow = 0;

  void normalize();  // strip z factors from num
  MarkovValue operator+(const MarkovValue& o) const;
  MarkovValue operator*(const BivarPoly& m) const;
  bool operator==(const MarkovValue& o) const;
  std::string str() const;
};

/// One z-fraction slice: num / z^{z_pow} with num a Laurent polynomial.
struct ZSlice {
  LaurentPoly num;
  int z_pow = 0;

  void normalize();
  bool operator==(const ZSlice& o) const;
  std::string str() const;
};

LaurentPoly z_poly();  // X^{1/2} - X^{-1/2}

/// Markov trace tower for H_{S_1} ⊆ H_{S_2} ⊆ ... ⊆ H_{S_n}, normalized by
/// mu_1(1) = 1 and mu_{n+1}(beta T_{s_n}^{±1}) = (-a^{-1} X^{1/2})^{±1} mu_n(beta).
class MarkovTower {
 public:
  explicit MarkovTower(int strands);

  int strands() const { return n_; }
  const CoxeterSystem* level(int k) const;  // system A_{k-1} for S_k, k >= 2

  MarkovValue mu(const HeckeElement& h) const;  // h over level(n)
  ZSlice a_slice(const MarkovValue& v, int a_exp) const;

 private:
  MarkovValue mu_basis(int k, const CoxeterElement& w) const;

  int n_;
  std::vector<SystemPtr> levels_;  // levels_[k] = system for S_{k+1}
  mutable std::map<std::pair<int, std::vector<int>>, MarkovValue> memo_;
};

}  // namespace qpark
