#include <numeric>

#include "doctest.h"
#include "qpark/deodhar.hpp"
#include "qpark/hecke.hpp"

using namespace qpark;

namespace {

const LaurentPoly kOne = LaurentPoly::one();
const LaurentPoly kX = LaurentPoly::x();

std::vector<std::vector<int>> words_up_to(int rank, int maxlen) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<std::vector<int>> layer = {{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int s = 1; s <= rank; ++s) {
        auto w2 = w;
        w2.push_back(s);
        next.push_back(w2);
        out.push_back(std::move(w2));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("distinguished subwords in A_1") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  std::vector<int> sss = {1, 1, 1};

  // v = e: exhaustive check over the 8 choice vectors leaves 3 subwords
  auto dse = distinguished_subwords(a1->identity(), sss);
  REQUIRE(dse.size() == 3);
  // lexicographic with skip < take: (000), (011), (110)
  CHECK(dse[0].choices == std::vector<char>{0, 0, 0});
  CHECK(dse[0].e == std::vector<int>{1, 2, 3});
  CHECK(dse[0].d.empty());
  CHECK(dse[1].choices == std::vector<char>{0, 1, 1});
  CHECK(dse[1].e == std::vector<int>{1});
  CHECK(dse[1].d == std::vector<int>{3});
  CHECK(dse[2].choices == std::vector<char>{1, 1, 0});
  CHECK(dse[2].e == std::vector<int>{3});
  CHECK(dse[2].d == std::vector<int>{2});

  // v = s: only take,skip,take
  auto dss = distinguished_subwords(a1->generator(1), sss);
  REQUIRE(dss.size() == 1);
  CHECK(dss[0].choices == std::vector<char>{1, 0, 1});
  CHECK(dss[0].e == std::vector<int>{2});
  CHECK(dss[0].d == std::vector<int>{1});

  // empty word
  auto de = distinguished_subwords(a1->generator(1), {});
  REQUIRE(de.size() == 1);
  CHECK(de[0].choices.empty());
}

TEST_CASE("cell polynomials in A_1") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  std::vector<int> sss = {1, 1, 1};
  LaurentPoly xm1 = kX - kOne;
  CHECK(cell_poly(a1->identity(), sss) == xm1.pow(3) + (kX * xm1).scaled(2));
  CHECK(cell_poly(a1->generator(1), sss) == kX * xm1);
  CHECK(cell_poly(a1->identity(), {}) == kOne);
}

TEST_CASE("minimal subwords in A_1") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  std::vector<int> sss = {1, 1, 1};
  CHECK(minimal_subwords(a1->identity(), sss).size() == 2);  // Cat_{S_2,3} = 2
  CHECK(minimal_subwords(a1->generator(1), sss).size() == 1);
  CHECK(minimal_subword_count(a1->identity(), sss) == 2);
}

TEST_CASE("parking table data: S_4, c = (1,2,3), p = 3") {
  auto a3 = CoxeterSystem::build(Family::A, 3);
  std::vector<int> word = repeat_word({1, 2, 3}, 3);
  // per-v minimal counts grouped by Asc(v)
  std::map<std::set<int>, long> by_asc;
  for (const auto& v : a3->elements()) by_asc[v.ascents()] += minimal_subword_count(v, word);
  CHECK(by_asc[{}] == 0);
  CHECK(by_asc[{3}] == 1);
  CHECK(by_asc[{2}] == 3);
  CHECK(by_asc[{1}] == 1);
  CHECK(by_asc[{2, 3}] == 5);
  CHECK(by_asc[{1, 3}] == 7);
  CHECK(by_asc[{1, 2}] == 5);
  CHECK(by_asc[{1, 2, 3}] == 5);
}

TEST_CASE("park sums in A_1") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  std::vector<int> sss = {1, 1, 1};
  // ((X-1)^3 + 2X(X-1))/(X-1) = (X-1)^2 + 2X = 1 + X^2 = [4]/[2]
  CHECK(park_sum(a1.get(), {1}, +1, sss) == kOne + LaurentPoly::x_power(4));
  CHECK(park_sum(a1.get(), {}, +1, sss) == LaurentPoly::quantum_integer(3));
  CHECK(park_sum(a1.get(), {}, -1, sss) == LaurentPoly::quantum_integer(3));
}

TEST_CASE("parking table park column at X = 1") {
  auto a3 = CoxeterSystem::build(Family::A, 3);
  std::vector<int> word = repeat_word({1, 2, 3}, 3);
  std::vector<std::pair<std::set<int>, long>> expect = {
      {{}, 27},     {{3}, 18},    {{2}, 18},    {{1}, 18},
      {{2, 3}, 10}, {{1, 3}, 12}, {{1, 2}, 10}, {{1, 2, 3}, 5}};
  for (const auto& [J, val] : expect)
    CHECK(park_sum(a3.get(), J, +1, word).value_at_one() == BigInt(val));
}

TEST_CASE("hecke trace equals deodhar cell sum") {
  // X^{-l(v)} tau(T_word T_{v^{-1}} T_v) = cell sum over D^{(w0 v)}(word).
  // The w0-shift lands on the left in our composition order.
  for (auto sys : {CoxeterSystem::build(Family::A, 2), CoxeterSystem::build(Family::B, 2),
                   CoxeterSystem::build(Family::I2, 5)}) {
    const auto w0 = sys->longest_element();
    std::vector<HeckeElement> pair_elts;
    for (const auto& v : sys->elements()) {
      HeckeElement t = HeckeElement::basis(sys.get(), v.inverse()) *
                       HeckeElement::basis(sys.get(), v);
      pair_elts.push_back(t);
    }
    for (const auto& word : words_up_to(sys->rank(), 4)) {
      HeckeElement tw = HeckeElement::t_word(sys.get(), word);
      size_t idx = 0;
      for (const auto& v : sys->elements()) {
        LaurentPoly lhs =
            tau_product(tw, pair_elts[idx++]).shifted(-2 * v.length());
        CHECK(lhs == cell_poly(w0 * v, word));
      }
    }
  }
}

TEST_CASE("minimality bound |e| >= r for coxeter power words") {
  for (auto sys : {CoxeterSystem::build(Family::A, 2), CoxeterSystem::build(Family::A, 3),
                   CoxeterSystem::build(Family::B, 2), CoxeterSystem::build(Family::I2, 5)}) {
    const int r = sys->rank();
    std::vector<int> cword;
    for (int s = 1; s <= r; ++s) cword.push_back(s);
    for (int p : {2, 3, 5}) {
      if (std::gcd(p, sys->coxeter_number()) != 1) continue;
      auto word = repeat_word(cword, p);
      for (const auto& v : sys->elements())
        for (const auto& [de, count] : cell_stats(v, word)) CHECK(de.second >= r);
    }
  }
}

TEST_CASE("park sum at X = 1 counts minimal subwords") {
  auto b2 = CoxeterSystem::build(Family::B, 2);
  std::vector<int> word = repeat_word({1, 2}, 3);
  for (int sign : {-1, +1}) {
    for (const auto& J : std::vector<std::set<int>>{{}, {1}, {2}, {1, 2}}) {
      long direct = 0;
      for (const auto& v : b2->coset_reps(J, -sign)) direct += minimal_subword_count(v, word);
      CHECK(park_sum(b2.get(), J, sign, word).value_at_one() == BigInt(direct));
    }
  }
}

TEST_CASE("subword json") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  auto ds = distinguished_subwords(a1->generator(1), {1, 1, 1});
  CHECK(ds[0].json() == "{\"choices\":\"101\",\"d\":[1],\"e\":[2]}");
}
