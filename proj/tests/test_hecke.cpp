#include <algorithm>
#include <random>

#include "doctest.h"
#include "qpark/hecke.hpp"

using namespace qpark;

namespace {

const LaurentPoly kOne = LaurentPoly::one();
const LaurentPoly kX = LaurentPoly::x();

HeckeElement random_hecke(const CoxeterSystem* sys, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<size_t> pick(0, sys->elements().size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(-2, 2);
  HeckeElement h(sys);
  for (int i = 0; i < terms; ++i) {
    LaurentPoly c = LaurentPoly::monomial(coeff(rng), 2 * exp(rng));
    h.add(sys->elements()[pick(rng)], c);
  }
  return h;
}

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

}  // namespace

TEST_CASE("quadratic relation and braid relations") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  HeckeElement ts = HeckeElement::basis(a1.get(), a1->generator(1));
  HeckeElement sq = ts * ts;
  CHECK(sq.coeff(a1->generator(1)) == kX - kOne);
  CHECK(sq.coeff(a1->identity()) == kX);

  auto a2 = CoxeterSystem::build(Family::A, 2);
  HeckeElement t1 = HeckeElement::basis(a2.get(), a2->generator(1));
  HeckeElement t2 = HeckeElement::basis(a2.get(), a2->generator(2));
  CHECK(t1 * t2 * t1 == t2 * t1 * t2);

  for (auto sys : {CoxeterSystem::build(Family::B, 2), CoxeterSystem::build(Family::B, 3),
                   CoxeterSystem::build(Family::D, 4), CoxeterSystem::build(Family::I2, 5),
                   CoxeterSystem::build(Family::I2, 7)}) {
    for (int i = 1; i <= sys->rank(); ++i) {
      HeckeElement ti = HeckeElement::basis(sys.get(), sys->generator(i));
      HeckeElement sq2 = ti * ti;
      CHECK(sq2.coeff(sys->generator(i)) == kX - kOne);
      CHECK(sq2.coeff(sys->identity()) == kX);
      for (int j = i + 1; j <= sys->rank(); ++j) {
        HeckeElement tj = HeckeElement::basis(sys.get(), sys->generator(j));
        const int m = sys->coxeter_matrix()[i - 1][j - 1];
        HeckeElement lhs = HeckeElement::unit(sys.get());
        HeckeElement rhs = HeckeElement::unit(sys.get());
        for (int k = 0; k < m; ++k) {
          lhs = lhs * (k % 2 == 0 ? ti : tj);
          rhs = rhs * (k % 2 == 0 ? tj : ti);
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("t_word") {
  auto a2 = CoxeterSystem::build(Family::A, 2);
  auto w0 = a2->longest_element();
  CHECK(HeckeElement::t_word(a2.get(), w0.reduced_word()) ==
        HeckeElement::basis(a2.get(), w0));
  CHECK(HeckeElement::t_word(a2.get(), {}) == HeckeElement::unit(a2.get()));
  auto a1 = CoxeterSystem::build(Family::A, 1);
  HeckeElement ss = HeckeElement::t_word(a1.get(), {1, 1});
  CHECK(ss.coeff(a1->generator(1)) == kX - kOne);
  CHECK(ss.coeff(a1->identity()) == kX);
}

TEST_CASE("unit multiplication and tau") {
  auto a2 = CoxeterSystem::build(Family::A, 2);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    HeckeElement h = random_hecke(a2.get(), rng);
    CHECK(HeckeElement::unit(a2.get()) * h == h);
    CHECK(h * HeckeElement::unit(a2.get()) == h);
  }
  CHECK(HeckeElement::unit(a2.get()).tau() == kOne);
  CHECK(HeckeElement::basis(a2.get(), a2->generator(1)).tau() == LaurentPoly());
  // tau(T_s^3) = X(X-1) by iterating the quadratic relation
  auto a1 = CoxeterSystem::build(Family::A, 1);
  HeckeElement t = HeckeElement::basis(a1.get(), a1->generator(1));
  CHECK((t * t * t).tau() == kX * (kX - kOne));
}

TEST_CASE("tau bilinear pairing agrees with full products") {
  std::mt19937_64 rng(4242);
  for (auto sys : {CoxeterSystem::build(Family::A, 2), CoxeterSystem::build(Family::A, 3),
                   CoxeterSystem::build(Family::B, 2), CoxeterSystem::build(Family::I2, 5)}) {
    // tau(T_u T_v) = X^{l(u)} [v == u^{-1}]
    for (const auto& u : sys->elements())
      for (const auto& v : sys->elements()) {
        LaurentPoly expect;
        if (v == u.inverse()) expect = LaurentPoly::x_power(2 * u.length());
        HeckeElement tu = HeckeElement::basis(sys.get(), u);
        HeckeElement tv = HeckeElement::basis(sys.get(), v);
        CHECK((tu * tv).tau() == expect);
      }
    for (int i = 0; i < 10; ++i) {
      HeckeElement a = random_hecke(sys.get(), rng);
      HeckeElement b = random_hecke(sys.get(), rng);
      CHECK(tau_product(a, b) == (a * b).tau());
    }
  }
}

TEST_CASE("relative norm") {
  auto a1 = CoxeterSystem::build(Family::A, 1);
  // N_∅^S(1) in A_1: 1 + X^{-1} T_s^2 = 2 T_e + (1 - X^{-1}) T_s
  HeckeElement n = relative_norm(a1.get(), {}, HeckeElement::unit(a1.get()));
  CHECK(n.coeff(a1->identity()) == LaurentPoly(2));
  CHECK(n.coeff(a1->generator(1)) == kOne - LaurentPoly::x_power(-2));

  auto a2 = CoxeterSystem::build(Family::A, 2);
  CHECK(relative_norm(a2.get(), a2->all_indices(), HeckeElement::unit(a2.get())) ==
        HeckeElement::unit(a2.get()));
  CHECK(relative_norm(a2.get(), {1}, HeckeElement::unit(a2.get())) ==
        sigma_elt(a2.get(), {1}, -1));

  // non-central input is rejected
  HeckeElement bad = HeckeElement::basis(a2.get(), a2->generator(1));
  CHECK_THROWS_AS(relative_norm(a2.get(), {1, 2}, bad), Error);
}

TEST_CASE("norm output is central") {
  for (auto sys : {CoxeterSystem::build(Family::A, 1), CoxeterSystem::build(Family::A, 2),
                   CoxeterSystem::build(Family::A, 3), CoxeterSystem::build(Family::A, 4),
                   CoxeterSystem::build(Family::B, 2), CoxeterSystem::build(Family::B, 3),
                   CoxeterSystem::build(Family::I2, 5), CoxeterSystem::build(Family::I2, 7)}) {
    for (const auto& J : all_subsets(*sys)) {
      CHECK(relative_norm(sys.get(), J, HeckeElement::unit(sys.get())).is_central());
      auto wj = sys->longest(J);
      HeckeElement tw = HeckeElement::basis(sys.get(), wj);
      CHECK(relative_norm(sys.get(), J, tw * tw).is_central());
    }
  }
}

TEST_CASE("sigma elements") {
  for (auto sys : {CoxeterSystem::build(Family::A, 2), CoxeterSystem::build(Family::B, 2)}) {
    CHECK(sigma_elt(sys.get(), sys->all_indices(), -1) == HeckeElement::unit(sys.get()));
    CHECK(sigma_elt(sys.get(), {}, -1) == sigma_elt(sys.get(), {}, +1));
    for (const auto& J : all_subsets(*sys)) {
      // Σ_{J,-} = N_J^S(1), Σ_{J,+} = X^{-l_J} N_J^S(T_{wJ}^2)
      CHECK(sigma_elt(sys.get(), J, -1) ==
            relative_norm(sys.get(), J, HeckeElement::unit(sys.get())));
      auto wj = sys->longest(J);
      HeckeElement tw = HeckeElement::basis(sys.get(), wj);
      CHECK(sigma_elt(sys.get(), J, +1) ==
            relative_norm(sys.get(), J, tw * tw)
                .scaled(LaurentPoly::x_power(-2 * wj.length())));
    }
  }
}

TEST_CASE("zeta elements and superset decompositions") {
  for (auto sys : {CoxeterSystem::build(Family::A, 2), CoxeterSystem::build(Family::A, 3),
                   CoxeterSystem::build(Family::B, 2)}) {
    CHECK(zeta_elt(sys.get(), {}, +1) == HeckeElement::unit(sys.get()));
    CHECK(zeta_elt(sys.get(), sys->all_indices(), -1) == HeckeElement::unit(sys.get()));
    CHECK(zeta_elt(sys.get(), sys->all_indices(), +1) == full_twist(sys.get()));
    CHECK(zeta_elt(sys.get(), {}, -1) == full_twist(sys.get()));
    for (const auto& J : all_subsets(*sys)) {
      HeckeElement sum_minus(sys.get()), sum_plus(sys.get());
      for (const auto& I : all_subsets(*sys)) {
        if (!std::includes(I.begin(), I.end(), J.begin(), J.end())) continue;
        sum_minus = sum_minus + zeta_elt(sys.get(), I, -1);
        sum_plus = sum_plus + zeta_elt(sys.get(), I, +1);
      }
      CHECK(sigma_elt(sys.get(), J, -1) == sum_minus);
      CHECK(sigma_elt(sys.get(), J, +1) == sum_plus);
      CHECK(zeta_elt(sys.get(), J, -1).is_central());
      CHECK(zeta_elt(sys.get(), J, +1).is_central());
    }
  }
}

TEST_CASE("jucys-murphy elements") {
  auto a2 = CoxeterSystem::build(Family::A, 2);
  HeckeElement jm1 = jm_element(a2.get(), 1);
  HeckeElement t1 = HeckeElement::basis(a2.get(), a2->generator(1));
  CHECK(jm1 == (t1 * t1).scaled(LaurentPoly::x_power(-2)));
  HeckeElement jm2 = jm_element(a2.get(), 2);
  CHECK(jm1 * jm2 == jm2 * jm1);
  CHECK(jm1 * jm2 == full_twist(a2.get()));

  auto b2 = CoxeterSystem::build(Family::B, 2);
  CHECK_THROWS_AS(jm_element(b2.get(), 1), Error);

  // pairwise commuting in A_3
  auto a3 = CoxeterSystem::build(Family::A, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      CHECK(jm_element(a3.get(), i) * jm_element(a3.get(), j) ==
            jm_element(a3.get(), j) * jm_element(a3.get(), i));
}

TEST_CASE("elementary symmetric JM products match zeta") {
  // n = 2..5, all k: e_{n-1-k}(JM) = zeta_{I_k}^+
  for (int n = 2; n <= 5; ++n) {
    auto sys = CoxeterSystem::build(Family::A, n - 1);
    CHECK(esym_jm(sys.get(), 0) == HeckeElement::unit(sys.get()));
    for (int k = 0; k <= n - 1; ++k) {
      std::set<int> I;
      for (int s = 1; s <= n - 1 - k; ++s) I.insert(s);
      CHECK(esym_jm(sys.get(), n - 1 - k) == zeta_elt(sys.get(), I, +1));
    }
    // full product is the full twist
    CHECK(esym_jm(sys.get(), n - 1) == full_twist(sys.get()));
  }
}

TEST_CASE("tau_central trace property") {
  std::mt19937_64 rng(2024);
  auto a2 = CoxeterSystem::build(Family::A, 2);
  HeckeElement zeta = sigma_elt(a2.get(), {1}, -1);
  for (int i = 0; i < 20; ++i) {
    HeckeElement a = random_hecke(a2.get(), rng);
    HeckeElement b = random_hecke(a2.get(), rng);
    CHECK(tau_central(zeta, a * b) == tau_central(zeta, b * a));
  }
  CHECK(tau_central(HeckeElement::unit(a2.get()),
                    HeckeElement::basis(a2.get(), a2->generator(1))) == LaurentPoly());
  CHECK_THROWS_AS(tau_central(HeckeElement::basis(a2.get(), a2->generator(1)),
                              HeckeElement::unit(a2.get())),
                  Error);
  // tau[Σ_{∅,-}](T_e) = Σ_v X^{-l(v)} tau(T_{v^{-1}} T_v) = |W|
  CHECK(tau_central(sigma_elt(a2.get(), {}, -1), HeckeElement::unit(a2.get())) ==
        LaurentPoly(6));
}

TEST_CASE("markov tower") {
  MarkovTower tower(2);
  const CoxeterSystem* a1 = tower.level(2);
  // mu_2(T_e) = (a - a^{-1})/z via the tower rule from mu_1(1) = 1
  MarkovValue mu_e = tower.mu(HeckeElement::unit(a1));
  CHECK(mu_e.z_pow == 1);
  CHECK(mu_e.num == BivarPoly::monomial(1, 1, 0) - BivarPoly::monomial(1, -1, 0));
  // mu_2(T_s) = -a^{-1} X^{1/2}
  MarkovValue mu_s = tower.mu(HeckeElement::basis(a1, a1->generator(1)));
  CHECK(mu_s.z_pow == 0);
  CHECK(mu_s.num == -BivarPoly::monomial(1, -1, 1));

  // Markov condition (2): mu_{n+1}(iota(beta) T_{s_n}) = (-a^{-1}X^{1/2}) mu_n(beta)
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n) {
    MarkovTower below(n), above(n + 1);
    const CoxeterSystem* sys_n = below.level(n);
    const CoxeterSystem* sys_n1 = above.level(n + 1);
    for (int trial = 0; trial < 8; ++trial) {
      HeckeElement beta = random_hecke(sys_n, rng);
      HeckeElement lifted(sys_n1);
      for (const auto& [w, c] : beta.terms())
        lifted.add(sys_n1->from_word(w.reduced_word()), c);
      HeckeElement rhs = lifted * HeckeElement::basis(sys_n1, sys_n1->generator(n));
      MarkovValue expect = below.mu(beta) * (-BivarPoly::monomial(1, -1, 1));
      CHECK(above.mu(rhs) == expect);
    }
  }

  // linearity in the trace argument
  MarkovTower t3(3);
  const CoxeterSystem* a2 = t3.level(3);
  std::mt19937_64 rng2(99);
  HeckeElement a = random_hecke(a2, rng2), b = random_hecke(a2, rng2);
  CHECK(t3.mu(a * b) == t3.mu(b * a));
}
