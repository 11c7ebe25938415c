#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpark/coxeter.hpp"
#include "qpark/hecke.hpp"
#include "qpark/poly.hpp"

namespace qpark {

using Partition = std::vector<int>;  // weakly decreasing positive parts

std::vector<Partition> partitions_of(int n);
BigInt z_factor(const Partition& mu);  // z_mu = prod i^{m_i} m_i!
Partition cycle_type(const CoxeterElement& w);  // type A elements

/// Rational function in X, reduced num/den with den a primitive polynomial,
/// nonzero constant term, positive leading coefficient.  Integer exponents
/// only.
class RatFunc {
 public:
  RatFunc() : num_(), den_(LaurentPoly::one()) {}
  RatFunc(long v) : num_(LaurentPoly(v)), den_(LaurentPoly::one()) {}
  explicit RatFunc(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
  RatFunc(LaurentPoly num, LaurentPoly den);
  explicit RatFunc(const BigRat& q);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  // Throws NonExactDivision when the reduced denominator is not 1.
  LaurentPoly as_poly() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;

 private:
  void reduce();
  LaurentPoly num_, den_;
};

// Primitive gcd of two integer Laurent polynomials (unit-normalized).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Classical irreducible character of S_n at cycle type mu, by the
/// Murnaghan-Nakayama border-strip recursion.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// chi_X^lambda(T_{w_mu}) for the minimal-length representative of cycle
/// type mu, computed in Hoefsmit's seminormal representation; a Laurent
/// polynomial in X (integrality is asserted).  At X = 1 it specializes to
/// mn_character.
LaurentPoly qmn_character(const Partition& lambda, const Partition& mu);

// Minimal-length word for the cycle type mu (blocks of ascending generators).
std::vector<int> min_class_word(const Partition& mu);

enum class Basis { Schur, Elementary, Homogeneous, PowerSum, Monomial };

/// Homogeneous symmetric function of fixed weight with RatFunc coefficients.
class SymFunc {
 public:
  SymFunc(int weight, Basis basis) : weight_(weight), basis_(basis) {}
  static SymFunc generator(Basis basis, const Partition& mu);  // e_mu, h_mu, ...

  int weight() const { return weight_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, RatFunc>& terms() const { return terms_; }
  void add(const Partition& p, const RatFunc& c);
  RatFunc coeff(const Partition& p) const;

  SymFunc operator+(const SymFunc& o) const;
  SymFunc scaled(const RatFunc& c) const;
  bool operator==(const SymFunc& o) const;

  std::string json() const;

 private:
  int weight_;
  Basis basis_;
  std::map<Partition, RatFunc> terms_;
};

SymFunc sf_convert(const SymFunc& f, Basis target);  // weight <= 8
RatFunc hall_pair(const SymFunc& f, const SymFunc& g);
// Ring map p_k -> p_k/(X^k - 1); realizes g -> g[X/(X-1)] on Lambda_n.
// Output in the power-sum basis.
SymFunc plethysm_xq(const SymFunc& f);

struct LascouxReport {
  bool all_equal = true;
  // per-partition: (schur coefficient from tau[Sigma], from the plethysm side, equal)
  std::vector<std::tuple<Partition, RatFunc, RatFunc, bool>> coords;
};

/// Expands tau[Sigma_{J,±}] in the chi_X basis and compares the Frobenius
/// image with (X-1)^n e_nu[X/(X-1)] (sign -) or h_nu[X/(X-1)] (sign +),
/// where J corresponds to the composition nu.
LascouxReport verify_lascoux(int n, const std::vector<int>& nu, int sign);

std::set<int> composition_to_subset(int n, const std::vector<int>& nu);
std::vector<std::vector<int>> compositions_of(int n);

/// chi^lambda(e_{J,±}) / det(X - e_{J,±} | V_G) == <s_lambda, e/h_nu[X/(X-1)]>
/// for the n-dim permutation module V_G.
bool verify_tau_to_eh(int n, const std::vector<int>& nu, int sign, const Partition& lambda);

}  // namespace qpark
