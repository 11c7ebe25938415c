#pragma once

#include <set>
#include <string>
#include <vector>

#include "qpark/coxeter.hpp"

namespace qpark {

/// Noncrossing partition in type A: an element below the chosen Coxeter
/// element in absolute order, with its block structure.
struct NCPartition {
  CoxeterElement element;
  std::vector<std::vector<int>> blocks;  // partition of {1..n}, blocks sorted
  int absolute_length = 0;               // n - #cycles
};

int absolute_length(const CoxeterElement& w);

/// v is the minimal-length representative of v W_pi iff its one-line values
/// increase along every block of pi.
bool is_minimal_block_rep(const CoxeterElement& v,
                          const std::vector<std::vector<int>>& blocks);

/// NC(S_n, c) for the Coxeter element of the word c; counts Catalan(n).
std::vector<NCPartition> nc_enumerate(int n, const std::vector<int>& cword);

/// Noncrossing parking functions: minimal left coset representatives of the
/// block subgroups W_pi, for all pi in NC; total count (n+1)^{n-1}.
struct ParkingFunction {
  int nc_index;             // which pi
  CoxeterElement rep;       // minimal-length coset representative
};
std::vector<ParkingFunction> nc_parking_functions(int n, const std::vector<int>& cword);

/// c-sorting word of the longest element: greedy first subword of c^infinity
/// that is reduced for w_o.
std::vector<int> nc_sorting_word(const CoxeterSystem* sys, const std::vector<int>& cword);

/// Faces of the associahedron of polytope dimension k: subsets of positions
/// of the word c·w_o(c) of size (n-1-k) whose complement contains a reduced
/// word for w_o.  k = 0 gives the vertices, in bijection with NC(S_n, c).
std::vector<std::vector<int>> nc_asso_faces(int n, const std::vector<int>& cword, int k);

/// A_k = { w : Asc(w) = I_k }, realized as the products w_{j_1}...w_{j_k}
/// with w_j = s_{n-1}...s_j over k-subsets, and cross-checked against the
/// ascent-set definition.
std::vector<CoxeterElement> nc_ak_set(const CoxeterSystem* sys, int k);

struct NCReport {
  bool pass = true;
  std::vector<std::string> lines;
};

/// |W^pi ∩ A_k| = binom(n-1-l_T(pi), k) for every pi and k; arbitrary c is
/// reduced to the standard Coxeter word by conjugation.
NCReport nc_verify_prop(int n, const std::vector<int>& cword);

}  // namespace qpark
