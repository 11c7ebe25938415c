#pragma once

#include <set>
#include <vector>

#include "qpark/coxeter.hpp"
#include "qpark/poly.hpp"

namespace qpark {

/// Parameters of a rational parabolic parking computation.
struct ParkingSpec {
  SystemPtr system;
  long p = 0;         // coprime to the Coxeter number
  std::set<int> J;
  int sign = +1;

  void validate() const;
};

/// Park_{W,p}^{J,±}(X) = prod_i [p ± e_i]_X / [d_i]_X over the padded
/// degree/exponent lists; exact division, nonnegative integer coefficients.
LaurentPoly park_poly(const ParkingSpec& spec);

/// Graded trace of a group-algebra element z on the rational parking space:
/// sum_w coeff_z(w) det(1 - X^p w | V_p^*) / det(1 - X w | V^*), expanded as
/// a truncated series and certified polynomial.
LaurentPoly graded_character(const CoxeterSystem* sys, long p, const GroupAlgebraElement& z);

/// Rational Kirkman polynomial of (S_n, p): the t^k-coefficient of the
/// w-averaged generating series det(1+tw|V^*) det(1-X^p w|V_p^*)/det(1-X w|V^*).
LaurentPoly kirk_poly(int n, long p, int k);

// The full t-generating list (index k = 0..n-1), computed in one sweep; used
// to cross-check kirk_poly against graded_character(e_{wedge k}).
std::vector<LaurentPoly> kirk_poly_sweep(int n, long p);

}  // namespace qpark
