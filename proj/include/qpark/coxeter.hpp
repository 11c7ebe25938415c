#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qpark/poly.hpp"

namespace qpark {

enum class Family : uint8_t { A, B, D, I2 };

class CoxeterSystem;

/// Element of a finite Coxeter group in the per-family exact model.
///
/// Type A_r:   permutation of {1..r+1}, stored as 1-based images.
/// Type B_r:   signed permutation, images in {±1..±r}.
/// Type D_r:   signed permutation with an even number of sign changes.
/// Type I2(m): pair (rotation index mod m, flip bit).
class CoxeterElement {
 public:
  CoxeterElement() : sys_(nullptr), len_(0) {}
  CoxeterElement(const CoxeterSystem* sys, std::vector<int> data);

  const CoxeterSystem& system() const { return *sys_; }
  const std::vector<int>& data() const { return data_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  CoxeterElement operator*(const CoxeterElement& o) const;
  CoxeterElement inverse() const;
  bool operator==(const CoxeterElement& o) const { return data_ == o.data_; }
  bool operator!=(const CoxeterElement& o) const { return !(*this == o); }
  // Order: by length, then lexicographically on the model data.
  bool operator<(const CoxeterElement& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return data_ < o.data_;
  }

  // s is a 1-based generator index.
  bool right_descent(int s) const;  // true iff l(w s) < l(w)
  bool left_descent(int s) const;   // true iff l(s w) < l(w)
  CoxeterElement mul_gen_right(int s) const;
  CoxeterElement mul_gen_left(int s) const;

  std::set<int> ascents() const;   // left ascent set
  std::set<int> descents() const;  // left descent set
  std::vector<int> reduced_word() const;

 private:
  friend class CoxeterSystem;
  const CoxeterSystem* sys_;
  std::vector<int> data_;
  int len_;
};

/// Sparse rational linear combination of group elements.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;

  const std::map<CoxeterElement, BigRat>& terms() const { return terms_; }
  void add(const CoxeterElement& w, const BigRat& c);
  BigRat coeff(const CoxeterElement& w) const;
  bool operator==(const GroupAlgebraElement& o) const { return terms_ == o.terms_; }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const BigRat& c) const;

 private:
  std::map<CoxeterElement, BigRat> terms_;
};

class CoxeterSystem {
 public:
  // family/rank support: A_n n<=7, B_n n<=5, D_4, I2(m) m<=12.  "rank_or_m"
  // is m for I2 and the rank otherwise.  G2 should be built as I2(6).
  static std::shared_ptr<const CoxeterSystem> build(Family family, int rank_or_m);
  static std::shared_ptr<const CoxeterSystem> build(const std::string& name);  // "A3", "B2", "I2:7", "G2"

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dihedral_m() const { return m_; }
  std::string name() const;

  const std::vector<std::vector<int>>& coxeter_matrix() const { return cox_mat_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int coxeter_number() const { return h_; }
  long group_order() const { return order_; }

  CoxeterElement identity() const;
  CoxeterElement generator(int s) const;  // 1-based
  CoxeterElement from_word(const std::vector<int>& word) const;
  CoxeterElement longest_element() const { return longest(all_indices()); }

  // Full element list, enumerated once (|W| <= 1e6 enforced at build).
  const std::vector<CoxeterElement>& elements() const { return elements_; }
  std::vector<CoxeterElement> subgroup_elements(const std::set<int>& J) const;

  // Right-coset representatives of W_J: minimal (sign -) have Asc(v) ⊇ J,
  // maximal (sign +) have Des(v) ⊇ J.
  std::vector<CoxeterElement> coset_reps(const std::set<int>& J, int sign) const;
  CoxeterElement longest(const std::set<int>& J) const;

  // Degrees of W_J padded with 1s to rank entries, and exponents of the
  // W_J-action on V_p^* padded with 0s.  For the crystallographic families
  // the exponents are the ordinary exponents of W_J; for I2(m) they follow
  // the Galois-twist table.  Requires gcd(p, h) = 1.
  std::pair<std::vector<int>, std::vector<int>> degrees_exponents(const std::set<int>& J,
                                                                  long p) const;

  GroupAlgebraElement symmetrizer(const std::set<int>& J, int sign) const;
  // Coefficient of (-t)^k in (1/|W|) Σ_w det(1 - t w | V) w.
  GroupAlgebraElement ext_symmetrizer(int k) const;

  // det(1 - t w | V) over the reflection representation, as a polynomial in
  // t (doubled exponents, integer coefficients).  Rational for A/B/D and for
  // I2(m) with m in {2,3,4,6}; throws Unsupported otherwise.
  LaurentPoly reflection_char_poly(const CoxeterElement& w) const;

  LaurentPoly poincare_poly() const;
  std::set<int> all_indices() const;

  bool same_as(const CoxeterSystem& o) const { return this == &o; }

 private:
  CoxeterSystem() = default;
  void enumerate();

  Family family_;
  int rank_ = 0;
  int m_ = 0;  // I2 only
  std::vector<std::vector<int>> cox_mat_;
  std::vector<int> degrees_;
  int h_ = 0;
  long order_ = 0;
  std::vector<CoxeterElement> elements_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// J-subsets are passed around as sets of 1-based generator indices.
std::string subset_str(const std::set<int>& J);

}  // namespace qpark
