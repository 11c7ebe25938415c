#include "qpark/catalan.hpp"

#include <numeric>

namespace qpark {

void ParkingSpec::validate() const {
  require(system != nullptr, Errc::InvalidInput, "missing Coxeter system");
  require(p >= 1, Errc::InvalidInput, "p must be positive");
  require(std::gcd(p, static_cast<long>(system->coxeter_number())) == 1, Errc::DomainError,
          "p must be coprime to the Coxeter number");
  require(sign == 1 || sign == -1, Errc::InvalidInput, "sign must be ±1");
  for (int s : J)
    require(s >= 1 && s <= system->rank(), Errc::InvalidInput, "J index out of range");
}

LaurentPoly park_poly(const ParkingSpec& spec) {
  spec.validate();
  auto [degs, exps] = spec.system->degrees_exponents(spec.J, spec.p);
  // factors [p + e_i] / [d_i] for the + sign and ([p] - [e_i]) / [d_i] =
  // X^{e_i} [p - e_i] / [d_i] for the - sign; the X^{e_i} carries the grading
  // of the antisymmetrizer isotypic component, and both signs collapse to
  // (p ± e_i)/d_i at X = 1.
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (size_t i = 0; i < degs.size(); ++i) {
    if (spec.sign > 0) {
      num *= LaurentPoly::quantum_integer(spec.p + exps[i]);
    } else {
      num *= LaurentPoly::quantum_integer(spec.p) -
             LaurentPoly::quantum_integer(exps[i]);
    }
    den *= LaurentPoly::quantum_integer(degs[i]);
  }
  LaurentPoly out = num.exact_div(den);
  for (const auto& [e, c] : out.terms())
    require(c > 0 && e >= 0, Errc::NonPolynomialResult,
            "parking polynomial has a negative term: " + out.str());
  return out;
}

namespace {

// --- dense truncated series helpers over an arbitrary coefficient ring ----

template <class R>
std::vector<R> series_inverse(const std::vector<R>& d, size_t bound, const R& one) {
  // d[0] must be 1
  std::vector<R> inv(bound + 1, R{});
  inv[0] = one;
  for (size_t k = 1; k <= bound; ++k) {
    R acc{};
    for (size_t j = 1; j <= std::min(k, d.size() - 1); ++j)
      acc = acc + d[j] * inv[k - j];
    inv[k] = R{} - acc;
  }
  return inv;
}

template <class R>
std::vector<R> series_mul(const std::vector<R>& a, const std::vector<R>& b, size_t bound) {
  std::vector<R> out(bound + 1, R{});
  for (size_t i = 0; i < a.size() && i <= bound; ++i)
    for (size_t j = 0; j < b.size() && i + j <= bound; ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

template <class R>
std::vector<R> substitute_power(const std::vector<R>& a, long p) {
  std::vector<R> out(static_cast<size_t>((a.size() - 1) * p) + 1, R{});
  for (size_t i = 0; i < a.size(); ++i) out[i * static_cast<size_t>(p)] = a[i];
  return out;
}

// rational coefficient wrapper with a usable default (zero)
struct Q {
  BigRat v;
  Q() : v(0) {}
  Q(BigRat x) : v(std::move(x)) {}
  Q operator+(const Q& o) const { return Q(v + o.v); }
  Q operator-(const Q& o) const { return Q(v - o.v); }
  Q operator*(const Q& o) const { return Q(v * o.v); }
};

std::vector<Q> dense_from_poly(const LaurentPoly& p) {
  std::vector<Q> out(static_cast<size_t>(p.is_zero() ? 0 : p.max_doubled_exp() / 2) + 1);
  for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e / 2)] = Q(BigRat(c));
  return out;
}

// --- cyclotomic layer for the dihedral Galois twists ----------------------

// coefficients of the cyclotomic polynomial Phi_m, computed by dividing
// x^m - 1 by the Phi_d for proper divisors d
std::vector<BigRat> cyclotomic(int m) {
  static std::map<int, std::vector<BigRat>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<BigRat> num(m + 1, BigRat(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto phi_d = cyclotomic(d);
    // exact dense division num /= phi_d
    std::vector<BigRat> quot(num.size() - phi_d.size() + 1, BigRat(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      BigRat c = num[k + phi_d.size() - 1] / phi_d.back();
      quot[k] = c;
      for (size_t j = 0; j < phi_d.size(); ++j) num[k + j] -= c * phi_d[j];
    }
    num = quot;
  }
  return cache.emplace(m, std::move(num)).first->second;
}

struct CycloCtx {
  int m;
  std::vector<BigRat> phi;
};

// element of Q[x]/Phi_m
struct C {
  const CycloCtx* ctx = nullptr;
  std::vector<BigRat> c;

  C() = default;
  explicit C(const CycloCtx* cx) : ctx(cx) {}
  static C scalar(const CycloCtx* cx, BigRat v) {
    C r(cx);
    if (v != 0) r.c = {std::move(v)};
    return r;
  }
  static C zeta_power(const CycloCtx* cx, long k) {
    k = ((k % cx->m) + cx->m) % cx->m;
    C r(cx);
    r.c.assign(static_cast<size_t>(k) + 1, BigRat(0));
    r.c.back() = 1;
    r.reduce();
    return r;
  }
  void reduce() {
    const size_t deg = ctx->phi.size() - 1;
    while (c.size() > deg) {
      BigRat top = c.back();
      size_t shift = c.size() - ctx->phi.size();
      for (size_t j = 0; j < ctx->phi.size(); ++j) c[shift + j] -= top * ctx->phi[j];
      while (!c.empty() && c.back() == 0) c.pop_back();
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  const CycloCtx* common(const C& o) const { return ctx ? ctx : o.ctx; }
  C operator+(const C& o) const {
    C r(common(o));
    r.c.assign(std::max(c.size(), o.c.size()), BigRat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
  }
  C operator-(const C& o) const {
    C r(common(o));
    r.c.assign(std::max(c.size(), o.c.size()), BigRat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
  }
  C operator*(const C& o) const {
    C r(common(o));
    if (c.empty() || o.c.empty()) return r;
    r.c.assign(c.size() + o.c.size() - 1, BigRat(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.reduce();
    return r;
  }
  bool is_rational() const { return c.size() <= 1; }
  BigRat rational() const { return c.empty() ? BigRat(0) : c[0]; }
};

LaurentPoly finalize(const std::vector<BigRat>& total, int top_degree) {
  LaurentPoly out;
  for (size_t k = 0; k < total.size(); ++k) {
    if (total[k] == 0) continue;
    require(static_cast<int>(k) <= top_degree, Errc::NonPolynomialResult,
            "graded character series does not truncate at the degree bound");
    require(boost::multiprecision::denominator(total[k]) == 1, Errc::NonPolynomialResult,
            "graded character has a non-integer coefficient");
    out.add_term(2 * static_cast<int>(k), boost::multiprecision::numerator(total[k]));
  }
  return out;
}

LaurentPoly graded_character_dihedral(const CoxeterSystem* sys, long p,
                                      const GroupAlgebraElement& z) {
  const int m = sys->dihedral_m();
  CycloCtx ctx{m, cyclotomic(m)};
  const int r = 2;
  const size_t bound = static_cast<size_t>(p) * r;
  const long j0 = ((p % m) + m) % m;  // V_p = V_{j0}
  const C one = C::scalar(&ctx, 1);
  std::vector<C> total(bound + 1, C(&ctx));

  for (const auto& [w, coeff] : z.terms()) {
    require(&w.system() == sys, Errc::SystemMismatch, "element of a different system");
    std::vector<C> den, num;
    if (w.data()[1] == 1) {
      // reflection: eigenvalues {1, -1} on V and on every Galois twist V_p
      den = {one, C(&ctx), C::scalar(&ctx, -1)};             // 1 - X^2
      num.assign(2 * static_cast<size_t>(p) + 1, C(&ctx));   // 1 - X^{2p}
      num[0] = one;
      num[2 * p] = C::scalar(&ctx, -1);
    } else {
      const long j = w.data()[0];
      // det(1 - Xw | V) = (1 - z^j X)(1 - z^{-j} X)
      C tr = C::zeta_power(&ctx, j) + C::zeta_power(&ctx, -j);
      den = {one, C(&ctx) - tr, one};
      std::vector<C> n(2 * p + 1, C(&ctx));
      C trp = C::zeta_power(&ctx, j * j0) + C::zeta_power(&ctx, -j * j0);
      n[0] = one;
      n[p] = C(&ctx) - trp;
      n[2 * p] = one;
      num = n;
    }
    auto inv = series_inverse(den, bound, one);
    auto term = series_mul(num, inv, bound);
    const C c = C::scalar(&ctx, coeff);
    for (size_t k = 0; k <= bound; ++k) total[k] = total[k] + c * term[k];
  }
  std::vector<BigRat> rational(bound + 1);
  for (size_t k = 0; k <= bound; ++k) {
    require(total[k].is_rational(), Errc::NonPolynomialResult,
            "dihedral graded character has an irrational coefficient");
    rational[k] = total[k].rational();
  }
  return finalize(rational, r * static_cast<int>(p - 1));
}

}  // namespace

LaurentPoly graded_character(const CoxeterSystem* sys, long p, const GroupAlgebraElement& z) {
  require(std::gcd(p, static_cast<long>(sys->coxeter_number())) == 1, Errc::DomainError,
          "p must be coprime to the Coxeter number");
  if (sys->family() == Family::I2) return graded_character_dihedral(sys, p, z);

  const int r = sys->rank();
  const size_t bound = static_cast<size_t>(p) * r;
  std::vector<BigRat> total(bound + 1, BigRat(0));
  for (const auto& [w, coeff] : z.terms()) {
    require(&w.system() == sys, Errc::SystemMismatch, "element of a different system");
    // V_p ≅ V for the crystallographic families, so the numerator is the
    // denominator at X -> X^p.
    auto den = dense_from_poly(sys->reflection_char_poly(w));
    auto num = substitute_power(den, p);
    auto inv = series_inverse(den, bound, Q(BigRat(1)));
    auto term = series_mul(num, inv, bound);
    for (size_t k = 0; k <= bound; ++k) total[k] += coeff * term[k].v;
  }
  return finalize(total, r * static_cast<int>(p - 1));
}

LaurentPoly kirk_poly(int n, long p, int k) {
  require(n >= 2, Errc::InvalidInput, "need n >= 2");
  require(std::gcd(p, static_cast<long>(n)) == 1, Errc::DomainError,
          "p must be coprime to n");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  require(k >= 0 && k <= n - 1, Errc::InvalidInput, "k out of range");
  LaurentPoly out = graded_character(sys.get(), p, sys->ext_symmetrizer(k));
  for (const auto& [e, c] : out.terms())
    require(c > 0 && e >= 0, Errc::NonPolynomialResult,
            "kirkman polynomial has a negative term: " + out.str());
  return out;
}

std::vector<LaurentPoly> kirk_poly_sweep(int n, long p) {
  require(n >= 2, Errc::InvalidInput, "need n >= 2");
  require(std::gcd(p, static_cast<long>(n)) == 1, Errc::DomainError,
          "p must be coprime to n");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  const int r = n - 1;
  const size_t bound = static_cast<size_t>(p) * r;
  std::vector<std::vector<BigRat>> totals(r + 1, std::vector<BigRat>(bound + 1, BigRat(0)));
  const BigRat inv_order(1, sys->group_order());
  for (const auto& w : sys->elements()) {
    auto den = dense_from_poly(sys->reflection_char_poly(w));
    auto num = substitute_power(den, p);
    auto inv = series_inverse(den, bound, Q(BigRat(1)));
    auto term = series_mul(num, inv, bound);
    // det(1 + t w | V) = sum_k tr(w | Λ^k V) t^k; the char poly stores
    // det(1 - t w | V) = sum_k (-1)^k tr(w | Λ^k V) t^k.
    LaurentPoly charpoly = sys->reflection_char_poly(w);
    for (int k = 0; k <= r; ++k) {
      BigInt trk = charpoly.coeff(2 * k) * ((k % 2 == 0) ? 1 : -1);
      if (trk == 0) continue;
      const BigRat c = inv_order * BigRat(trk);
      for (size_t i = 0; i <= bound; ++i) totals[k][i] += c * term[i].v;
    }
  }
  std::vector<LaurentPoly> out;
  for (int k = 0; k <= r; ++k) out.push_back(finalize(totals[k], r * static_cast<int>(p - 1)));
  return out;
}

}  // namespace qpark
