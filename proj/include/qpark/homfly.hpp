#pragma once

#include <string>
#include <vector>

#include "qpark/hecke.hpp"

namespace qpark {

/// Braid word on n strands; positive letters are simple twists, negative
/// letters their inverses.  The writhe is the signed length.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // |letter| in 1..strands-1

  int writhe() const;
  void validate() const;
  static BraidWord parse(int strands, const std::string& text);
  std::string str() const;
};

/// Image of the braid in H_{S_n}: sigma_i -> X^{-1/2} T_{s_i},
/// sigma_i^{-1} -> X^{1/2} T_{s_i}^{-1}, prefactors absorbed into the
/// coefficients.
HeckeElement braid_to_hecke(const CoxeterSystem* sys, const BraidWord& b);

enum class MuRoute { Zeta, Jm, Tower };

/// mu_n^{(k)} by the tau routes: (X-1)^{-(n-1)} tau(beta * zeta_{I_k}^+)
/// (route Zeta) or the same with e_{n-1-k}(JM_1..JM_{n-1}) built from
/// honest Jucys-Murphy products (route Jm).  The two agree identically.
/// The division is carried exactly as a z-fraction: (X-1)^{n-1} =
/// X^{(n-1)/2} z^{n-1}.
ZSlice mu_slice_tau(const HeckeElement& beta, int k, MuRoute route);

/// a^{-n+1+2k} coefficient of the Ocneanu tower trace.
ZSlice mu_slice_tower(const MarkovTower& tower, const HeckeElement& beta, int k);

ZSlice mu_slice(const MarkovTower& tower, const BraidWord& b, int k, MuRoute route);

/// Monomial factor ±X^{m/2} z^{-j} relating tower-route slices to jm-route
/// slices; braid-independent for each (n, k).
struct CalibrationFactor {
  bool defined = false;  // false when every probe slice vanished
  int sign = +1;
  int x_doubled = 0;  // exponent of X^{1/2}
  int z_pow = 0;      // net power of z in the denominator

  std::string str() const;
};

std::vector<CalibrationFactor> calibrate(int n);

/// Reduced HOMFLYPT of the braid closure: (-a)^{e(beta)} mu_n(beta).
MarkovValue homfly(const BraidWord& b);

/// Kalman's identity mu^{(0)}(beta) = mu^{(n-1)}(beta * full twist).
bool kalman_check(const BraidWord& b);

// Braid rewriting helpers for the invariance suite.
BraidWord conjugate_braid(const BraidWord& b, int letter);
BraidWord stabilize_braid(const BraidWord& b, bool positive);
// Applies a random sequence of braid relations / free insertions; the result
// represents the same element of the braid group.
BraidWord rewrite_braid(const BraidWord& b, unsigned seed, int steps = 12);

}  // namespace qpark
