#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qpark/coxeter.hpp"
#include "qpark/hecke.hpp"
#include "qpark/poly.hpp"

namespace qpark {

/// Square matrix over F_q, n <= 4, q prime (2 or 3).
struct FqMat {
  int n = 0, q = 2;
  std::array<uint8_t, 16> a{};  // row-major

  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r * n + c)]; }
  void set(int r, int c, uint8_t v) { a[static_cast<size_t>(r * n + c)] = v; }
  static FqMat identity(int n, int q);
  FqMat operator*(const FqMat& o) const;
  bool operator==(const FqMat& o) const { return a == o.a && n == o.n; }
  uint32_t key() const;  // base-q packing
};

/// Full flag: steps 1..n-1 as canonical RREF row bases (step n is implicit).
struct FqFlag {
  std::vector<std::vector<std::vector<uint8_t>>> steps;
  std::vector<uint8_t> key() const;
};

/// Fully enumerated GL_n(F_q) with flags, Borel, parabolic coset spaces, and
/// unipotent elements, for brute-force verification of the point-counting
/// identities.
class FqGroup {
 public:
  static std::shared_ptr<const FqGroup> build(int n, int q);

  int n() const { return n_; }
  int q() const { return q_; }
  long order() const { return static_cast<long>(elements_.size()); }
  long borel_order() const { return borel_order_; }
  const CoxeterSystem* weyl() const { return weyl_.get(); }

  const std::vector<FqMat>& elements() const { return elements_; }
  const std::vector<int>& unipotents() const { return unipotents_; }

  int flag_count() const { return static_cast<int>(flags_.size()); }
  int standard_flag() const { return std_flag_; }
  int act_on_flag(const FqMat& g, int flag) const;
  int act_on_flag(int g_index, int flag) const { return act_flag_[g_index][flag]; }
  int flag_of_permutation(const CoxeterElement& w) const;  // the flag w.E

  // Bruhat position of an ordered pair of full flags.
  CoxeterElement position(int f1, int f2) const;

  // Partial flag variety G/P_J: retained dims are those i with s_i not in J.
  struct Parabolic {
    std::set<int> J;
    std::vector<int> dims;                 // retained dimensions
    std::vector<int> from_full;            // full flag index -> partial index
    std::vector<int> representative_full;  // one full flag refining each partial
    int count() const { return static_cast<int>(representative_full.size()); }
  };
  const Parabolic& parabolic(const std::set<int>& J) const;

  // u in y V_J y^{-1} (sign +) or y U_J y^{-1} (sign -), for a unipotent u
  // and a partial flag y.
  bool springer_member(const FqMat& u, const Parabolic& para, int partial_flag,
                       int sign) const;
  long springer_fiber_count(const std::set<int>& J, int sign, const FqMat& u) const;

  // relative position of (partial flag, full flag) as a minimal coset
  // representative of W_J \ W
  CoxeterElement relative_position(const Parabolic& para, int partial_flag,
                                   int full_flag) const;

  // mult_! 1_{E_J^±} as a function of w (value on O(w)); computed from the
  // set definition with hB the standard flag.
  std::map<std::vector<int>, BigInt> mult_pushforward(const std::set<int>& J, int sign) const;
  // the stratified version, restricted to pairs of relative position W_J v
  std::map<std::vector<int>, BigInt> mult_pushforward_stratum(const std::set<int>& J, int sign,
                                                              const CoxeterElement& v) const;

  // |Z_J^±(word)| by chain enumeration over prescribed Bruhat steps.
  BigInt steinberg_count(const std::set<int>& J, int sign,
                         const std::vector<int>& word) const;

  // (1/|G|) sum over unipotent u of |O(w)_u| chi_u(e_{J,±}), with
  // chi_u(e_{J,-}) = q^{l_J} |Spr^-| and chi_u(e_{J,+}) = |Spr^+|.
  BigRat tau_g(const std::set<int>& J, int sign, const CoxeterElement& w) const;

  // Harish-Chandra transform of a class function given by values on all of G;
  // returns per-w values and checks constancy on every O(w).
  std::map<std::vector<int>, BigRat> hc_transform(const std::vector<BigRat>& f) const;
  bool hc_output_is_central(const std::vector<BigRat>& f) const;

  bool is_unipotent(const FqMat& m) const;

 private:
  FqGroup() = default;

  int n_, q_;
  long borel_order_ = 0;
  SystemPtr weyl_;
  std::vector<FqMat> elements_;
  std::map<uint32_t, int> elem_index_;
  std::vector<int> unipotents_;
  std::vector<FqFlag> flags_;
  std::map<std::vector<uint8_t>, int> flag_index_;
  int std_flag_ = 0;
  std::vector<std::vector<int>> act_flag_;       // [element][flag]
  std::vector<std::vector<uint8_t>> positions_;  // [f1][f2] -> element list idx of W
  std::vector<CoxeterElement> weyl_elements_;
  mutable std::map<std::set<int>, Parabolic> parabolics_;
};

struct OracleReport {
  bool pass = true;
  std::vector<std::string> lines;
  void check(bool ok, const std::string& what);
};

/// Pushforward identity: the counted mult fibers against the Hecke-side
/// central elements at X -> q, in aggregate and per coset stratum.
OracleReport verify_main(const FqGroup& G, const std::set<int>& J);

/// Steinberg counts against the Deodhar cell sums, both signs.
OracleReport verify_cell(const FqGroup& G, const std::set<int>& J,
                         const std::vector<int>& word);

/// Bitrace identities: scaled norm traces and Steinberg-count traces.
OracleReport verify_trace(const FqGroup& G, const std::set<int>& J, int max_word_len);

}  // namespace qpark
