#include <numeric>

#include "doctest.h"
#include "qpark/catalan.hpp"
#include "qpark/deodhar.hpp"
#include "qpark/hecke.hpp"

using namespace qpark;

namespace {

std::vector<std::set<int>> all_subsets(const CoxeterSystem& sys) {
  std::vector<int> gens;
  for (int i = 1; i <= sys.rank(); ++i) gens.push_back(i);
  std::vector<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    std::set<int> J;
    for (size_t i = 0; i < gens.size(); ++i)
      if (mask & (1u << i)) J.insert(gens[i]);
    out.push_back(J);
  }
  return out;
}

std::vector<std::vector<int>> coxeter_words(int rank) {
  std::vector<int> word;
  for (int i = 1; i <= rank; ++i) word.push_back(i);
  std::vector<std::vector<int>> out;
  std::sort(word.begin(), word.end());
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace

TEST_CASE("park polynomial closed forms") {
  auto a3 = CoxeterSystem::build(Family::A, 3);
  // A_3, p=3, J={1,3}, sign + at X=1 -> 12 (table value)
  ParkingSpec spec{a3, 3, {1, 3}, +1};
  CHECK(park_poly(spec).value_at_one() == 12);
  // J = empty: [p]^r
  ParkingSpec spec0{a3, 3, {}, +1};
  CHECK(park_poly(spec0) == LaurentPoly::quantum_integer(3).pow(3));
  ParkingSpec spec0m{a3, 3, {}, -1};
  CHECK(park_poly(spec0m).value_at_one() == 27);
  // A_1, p=3, J=S, +: [4]/[2] = 1 + X^2
  auto a1 = CoxeterSystem::build(Family::A, 1);
  ParkingSpec spec1{a1, 3, {1}, +1};
  CHECK(park_poly(spec1) == LaurentPoly::one() + LaurentPoly::x_power(4));
  // park column of the A_3, p=3 table at X=1
  std::vector<std::pair<std::set<int>, long>> expect = {
      {{}, 27},     {{3}, 18},    {{2}, 18},    {{1}, 18},
      {{2, 3}, 10}, {{1, 3}, 12}, {{1, 2}, 10}, {{1, 2, 3}, 5}};
  for (const auto& [J, val] : expect) {
    ParkingSpec s{a3, 3, J, +1};
    CHECK(park_poly(s).value_at_one() == BigInt(val));
  }
  // invalid p
  ParkingSpec bad{a3, 2, {}, +1};
  CHECK_THROWS_AS(park_poly(bad), Error);
}

TEST_CASE("graded character basics") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  GroupAlgebraElement id;
  id.add(a1->identity(), 1);
  CHECK(graded_character(a1.get(), 3, id) == LaurentPoly::quantum_integer(3));
  // graded dimension [p]^r in A_2
  auto a2 = CoxeterSystem::build(Family::A, 2);
  GroupAlgebraElement id2;
  id2.add(a2->identity(), 1);
  CHECK(graded_character(a2.get(), 5, id2) == LaurentPoly::quantum_integer(5).pow(2));
  // z = e_{S,+}, A_3, p=3 at X=1 -> Cat = 5
  auto a3 = CoxeterSystem::build(Family::A, 3);
  CHECK(graded_character(a3.get(), 3, a3->symmetrizer({1, 2, 3}, +1)).value_at_one() == 5);
}

TEST_CASE("graded character matches park polynomials") {
  // Park_{W,p}^{J,±}(X) = graded trace of e_{J,±} (graded trace route)
  for (auto sys : {CoxeterSystem::build(Family::A, 2), CoxeterSystem::build(Family::A, 3),
                   CoxeterSystem::build(Family::B, 2)}) {
    for (long p : {2, 3, 5}) {
      if (std::gcd(p, static_cast<long>(sys->coxeter_number())) != 1) continue;
      for (const auto& J : all_subsets(*sys))
        for (int sign : {-1, +1}) {
          ParkingSpec spec{sys, p, J, sign};
          CHECK(park_poly(spec) == graded_character(sys.get(), p, sys->symmetrizer(J, sign)));
        }
    }
  }
}

TEST_CASE("dihedral graded character") {
  for (int m : {5, 7}) {
    auto sys = CoxeterSystem::build(Family::I2, m);
    for (long p : {2, 3}) {
      if (std::gcd(p, static_cast<long>(m)) != 1) continue;
      GroupAlgebraElement id;
      id.add(sys->identity(), 1);
      CHECK(graded_character(sys.get(), p, id) ==
            LaurentPoly::quantum_integer(p).pow(2));
      for (const auto& J : all_subsets(*sys))
        for (int sign : {-1, +1}) {
          ParkingSpec spec{sys, p, J, sign};
          CHECK(park_poly(spec) == graded_character(sys.get(), p, sys->symmetrizer(J, sign)));
        }
    }
  }
}

TEST_CASE("parking product formula equals deodhar sums") {
  struct Row {
    SystemPtr sys;
    std::vector<long> ps;
  };
  std::vector<Row> rows = {
      {CoxeterSystem::build(Family::A, 1), {3, 5}},
      {CoxeterSystem::build(Family::A, 2), {2, 4, 5}},
      {CoxeterSystem::build(Family::B, 2), {3, 5}},
  };
  for (const auto& row : rows) {
    for (long p : row.ps)
      for (const auto& cword : coxeter_words(row.sys->rank())) {
        auto word = repeat_word(cword, static_cast<int>(p));
        for (const auto& J : all_subsets(*row.sys))
          for (int sign : {-1, +1}) {
            ParkingSpec spec{row.sys, p, J, sign};
            CHECK(park_poly(spec) == park_sum(row.sys.get(), J, sign, word));
          }
      }
  }
}

TEST_CASE("kirkman polynomials") {
  // n=4, p=3 at X=1: 5, 5, 1, 0
  std::vector<long> expect3 = {5, 5, 1, 0};
  for (int k = 0; k <= 3; ++k)
    CHECK(kirk_poly(4, 3, k).value_at_one() == BigInt(expect3[k]));
  // n=4, p=5 at X=1: 14, 21, 9, 1 (f-vector of the 3-dim associahedron)
  std::vector<long> expect5 = {14, 21, 9, 1};
  for (int k = 0; k <= 3; ++k)
    CHECK(kirk_poly(4, 5, k).value_at_one() == BigInt(expect5[k]));
  // k=0 is the Catalan polynomial Park^{S,+}
  auto a3 = CoxeterSystem::build(Family::A, 3);
  ParkingSpec cat{a3, 5, {1, 2, 3}, +1};
  CHECK(kirk_poly(4, 5, 0) == park_poly(cat));
  // generating sweep agrees coefficientwise
  for (int n : {3, 4})
    for (long p : {2, 3, 5}) {
      if (std::gcd(p, static_cast<long>(n)) != 1) continue;
      auto sweep = kirk_poly_sweep(n, p);
      for (int k = 0; k <= n - 1; ++k) CHECK(sweep[k] == kirk_poly(n, p, k));
    }
}

TEST_CASE("kirkman matches markov trace route") {
  // Kirk^{(k)}(X) = (X-1)^{-(n-1)} tau[zeta_{I_k}^+](T_c^p) for n <= 4
  for (int n : {2, 3, 4}) {
    auto sys = CoxeterSystem::build(Family::A, n - 1);
    for (long p : {3, 5}) {
      if (std::gcd(p, static_cast<long>(n)) != 1) continue;
      std::vector<int> cword;
      for (int i = 1; i <= n - 1; ++i) cword.push_back(i);
      auto word = repeat_word(cword, static_cast<int>(p));
      HeckeElement tw = HeckeElement::t_word(sys.get(), word);
      LaurentPoly xm1 = (LaurentPoly::x() - LaurentPoly::one()).pow(n - 1);
      for (int k = 0; k <= n - 1; ++k) {
        std::set<int> I;
        for (int s = 1; s <= n - 1 - k; ++s) I.insert(s);
        LaurentPoly lhs = tau_product(tw, zeta_elt(sys.get(), I, +1)).exact_div(xm1);
        CHECK(lhs == kirk_poly(n, p, k));
      }
    }
  }
}

TEST_CASE("conjecture probe in I2") {
  // reported equality of the product formula and the deodhar sums
  for (int m : {5}) {
    auto sys = CoxeterSystem::build(Family::I2, m);
    for (long p : {2, 3}) {
      auto word = repeat_word({1, 2}, static_cast<int>(p));
      for (const auto& J : all_subsets(*sys))
        for (int sign : {-1, +1}) {
          ParkingSpec spec{sys, p, J, sign};
          CHECK(park_poly(spec) == park_sum(sys.get(), J, sign, word));
        }
    }
  }
}
