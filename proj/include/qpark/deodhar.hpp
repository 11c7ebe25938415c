#pragma once

#include <set>
#include <string>
#include <vector>

#include "qpark/coxeter.hpp"
#include "qpark/poly.hpp"

namespace qpark {

/// A v-distinguished subword of a word in S, with its Deodhar cell data:
/// e = skip positions, d = positions where the v-shifted prefix drops.
struct Subword {
  std::vector<int> word;       // base word, 1-based generator indices
  std::vector<char> choices;   // 0 = skip, 1 = take
  std::vector<int> d;          // 1-based positions
  std::vector<int> e;

  std::string json() const;
};

/// All v-distinguished subwords with full product e, in lexicographic order
/// of choice vectors (skip < take).  A skip at position i is legal iff
/// l(v w s) > l(v w) for the current prefix w; takes are always legal.
std::vector<Subword> distinguished_subwords(const CoxeterElement& v,
                                            const std::vector<int>& word);

/// Sum of X^{|d|} (X-1)^{|e|} over the distinguished subwords, computed by a
/// counting DFS that never materializes the subwords.
LaurentPoly cell_poly(const CoxeterElement& v, const std::vector<int>& word);

/// Subwords with |e| = rank(W), the minimum for words c^p with gcd(p,h) = 1.
std::vector<Subword> minimal_subwords(const CoxeterElement& v, const std::vector<int>& word);

long minimal_subword_count(const CoxeterElement& v, const std::vector<int>& word);

/// (X-1)^{-r} sum over v in W^{J,∓} of cell_poly(v, word) — note the sign
/// flip.  Throws NonExactDivision if the sum is not divisible.
LaurentPoly park_sum(const CoxeterSystem* sys, const std::set<int>& J, int sign,
                     const std::vector<int>& word);

/// Counting table (|d|, |e|) -> number of subwords; shared backend.
std::map<std::pair<int, int>, long> cell_stats(const CoxeterElement& v,
                                               const std::vector<int>& word);

std::vector<int> repeat_word(const std::vector<int>& word, int times);

}  // namespace qpark
