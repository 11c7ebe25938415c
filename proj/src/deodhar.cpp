#include "qpark/deodhar.hpp"

#include <sstream>

#include "json.hpp"

namespace qpark {

namespace {

// DFS over choice vectors.  Carries the prefix product w = omega_(i) and the
// shifted prefix vw; prunes branches where l(w) exceeds the remaining letters
// (omega_(l) = e is then unreachable, since a letter moves length by one).
struct Walker {
  const std::vector<int>& word;
  CoxeterElement w, vw;
  // emit(d_count, e_count, choices) at full depth with w = e
  virtual void emit() = 0;
  std::vector<char> choices;
  std::vector<int> d, e;

  explicit Walker(const CoxeterElement& v, const std::vector<int>& word_)
      : word(word_), w(v.system().identity()), vw(v) {}
  virtual ~Walker() = default;

  void run() { step(0); }

  void step(size_t i) {
    if (i == word.size()) {
      if (w.is_identity()) emit();
      return;
    }
    const int s = word[i];
    const int after = static_cast<int>(word.size() - i) - 1;
    // skip: legal iff the shifted prefix rises
    if (!vw.right_descent(s) && w.length() <= after) {
      choices.push_back(0);
      e.push_back(static_cast<int>(i) + 1);
      step(i + 1);
      e.pop_back();
      choices.pop_back();
    }
    // take
    CoxeterElement w2 = w.mul_gen_right(s);
    if (w2.length() <= after) {
      CoxeterElement vw2 = vw.mul_gen_right(s);
      const bool drop = vw2.length() < vw.length();
      std::swap(w, w2);
      std::swap(vw, vw2);
      choices.push_back(1);
      if (drop) d.push_back(static_cast<int>(i) + 1);
      step(i + 1);
      if (drop) d.pop_back();
      choices.pop_back();
      std::swap(w, w2);
      std::swap(vw, vw2);
    }
  }
};

struct Collector : Walker {
  std::vector<Subword>* out;
  Collector(const CoxeterElement& v, const std::vector<int>& word_, std::vector<Subword>* o)
      : Walker(v, word_), out(o) {}
  void emit() override { out->push_back(Subword{word, choices, d, e}); }
};

struct Counter : Walker {
  std::map<std::pair<int, int>, long> stats;
  using Walker::Walker;
  void emit() override {
    ++stats[{static_cast<int>(d.size()), static_cast<int>(e.size())}];
  }
};

}  // namespace

std::string Subword::json() const {
  std::string bits;
  for (char c : choices) bits += (c ? '1' : '0');
  nlohmann::json j;
  j["choices"] = bits;
  j["d"] = d;
  j["e"] = e;
  return j.dump();
}

std::vector<Subword> distinguished_subwords(const CoxeterElement& v,
                                            const std::vector<int>& word) {
  std::vector<Subword> out;
  Collector c(v, word, &out);
  c.run();
  return out;
}

std::map<std::pair<int, int>, long> cell_stats(const CoxeterElement& v,
                                               const std::vector<int>& word) {
  Counter c(v, word);
  c.run();
  return c.stats;
}

LaurentPoly cell_poly(const CoxeterElement& v, const std::vector<int>& word) {
  LaurentPoly total;
  const LaurentPoly xm1 = LaurentPoly::x() - LaurentPoly::one();
  std::map<int, LaurentPoly> xm1_pow;
  for (const auto& [de, count] : cell_stats(v, word)) {
    auto it = xm1_pow.find(de.second);
    if (it == xm1_pow.end()) it = xm1_pow.emplace(de.second, xm1.pow(de.second)).first;
    total += it->second.scaled(count).shifted(2 * de.first);
  }
  return total;
}

std::vector<Subword> minimal_subwords(const CoxeterElement& v, const std::vector<int>& word) {
  const int r = v.system().rank();
  std::vector<Subword> out;
  for (auto& sw : distinguished_subwords(v, word))
    if (static_cast<int>(sw.e.size()) == r) out.push_back(std::move(sw));
  return out;
}

long minimal_subword_count(const CoxeterElement& v, const std::vector<int>& word) {
  const int r = v.system().rank();
  long total = 0;
  for (const auto& [de, count] : cell_stats(v, word))
    if (de.second == r) total += count;
  return total;
}

LaurentPoly park_sum(const CoxeterSystem* sys, const std::set<int>& J, int sign,
                     const std::vector<int>& word) {
  LaurentPoly total;
  for (const auto& v : sys->coset_reps(J, -sign)) total += cell_poly(v, word);
  const LaurentPoly xm1 = LaurentPoly::x() - LaurentPoly::one();
  return total.exact_div(xm1.pow(sys->rank()));
}

std::vector<int> repeat_word(const std::vector<int>& word, int times) {
  std::vector<int> out;
  out.reserve(word.size() * times);
  for (int i = 0; i < times; ++i) out.insert(out.end(), word.begin(), word.end());
  return out;
}

}  // namespace qpark
