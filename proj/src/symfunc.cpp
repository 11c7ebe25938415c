#include "qpark/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace qpark {

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // lexicographically decreasing enumeration
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt z_factor(const Partition& mu) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : mu) ++mult[p];
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

Partition cycle_type(const CoxeterElement& w) {
  require(w.system().family() == Family::A, Errc::WrongFamily, "cycle type needs type A");
  const auto& d = w.data();
  std::vector<bool> seen(d.size(), false);
  Partition mu;
  for (size_t i = 0; i < d.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    do {
      seen[j] = true;
      j = static_cast<size_t>(d[j] - 1);
      ++len;
    } while (j != i);
    mu.push_back(len);
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

// ---------------------------------------------------------------------------
// rational functions

namespace {

// dense coefficients over exponent/2, starting at min exponent 0
std::vector<BigInt> to_dense(const LaurentPoly& p) {
  std::vector<BigInt> v(static_cast<size_t>(p.max_doubled_exp() / 2) + 1);
  for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e / 2)] = c;
  return v;
}

LaurentPoly from_dense(const std::vector<BigInt>& v) {
  LaurentPoly p;
  for (size_t i = 0; i < v.size(); ++i) p.add_term(2 * static_cast<int>(i), v[i]);
  return p;
}

BigInt int_content(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& c : v) g = big_gcd(g, c);
  return g;
}

void make_primitive(std::vector<BigInt>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  BigInt g = int_content(v);
  if (g > 1)
    for (auto& c : v) c /= g;
}

// pseudo-remainder based primitive Euclid
std::vector<BigInt> dense_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const BigInt lc = b.back();
    while (a.size() >= b.size()) {
      const BigInt top = a.back();
      const size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lc;
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= top * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    make_primitive(a);
    std::swap(a, b);
  }
  make_primitive(a);
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return b.shifted(-b.min_doubled_exp());
  if (b.is_zero()) return a.shifted(-a.min_doubled_exp());
  require(a.has_integer_exponents_only() && b.has_integer_exponents_only(), Errc::DomainError,
          "poly_gcd needs integer exponents");
  auto g = dense_gcd(to_dense(a.shifted(-a.min_doubled_exp())),
                     to_dense(b.shifted(-b.min_doubled_exp())));
  return from_dense(g);
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), Errc::DomainError, "zero denominator");
  reduce();
}

RatFunc::RatFunc(const BigRat& q)
    : num_(LaurentPoly(boost::multiprecision::numerator(q))),
      den_(LaurentPoly(boost::multiprecision::denominator(q))) {
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  require(num_.has_integer_exponents_only() && den_.has_integer_exponents_only(),
          Errc::DomainError, "RatFunc needs integer exponents");
  const int nshift = num_.min_doubled_exp();
  const int dshift = den_.min_doubled_exp();
  LaurentPoly n = num_.shifted(-nshift);
  LaurentPoly d = den_.shifted(-dshift);
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = n.exact_div(g);
    d = d.exact_div(g);
  }
  BigInt cn = 0, cd = 0;
  for (const auto& [e, c] : n.terms()) cn = big_gcd(cn, c);
  for (const auto& [e, c] : d.terms()) cd = big_gcd(cd, c);
  BigInt ci = big_gcd(cn, cd);
  if (ci > 1) {
    LaurentPoly n2, d2;
    for (const auto& [e, c] : n.terms()) n2.add_term(e, c / ci);
    for (const auto& [e, c] : d.terms()) d2.add_term(e, c / ci);
    n = n2;
    d = d2;
  }
  if (d.terms().rbegin()->second < 0) {
    n = -n;
    d = -d;
  }
  num_ = n.shifted(nshift - dshift);
  den_ = d;
}

LaurentPoly RatFunc::as_poly() const {
  require(den_.is_one(), Errc::NonExactDivision, "rational function is not a polynomial");
  return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  require(!o.is_zero(), Errc::DomainError, "division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

// beta numbers lambda_i + (rows - i)
std::vector<int> beta_set(const Partition& lambda) {
  const int rows = static_cast<int>(lambda.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int rows = static_cast<int>(beta.size());
  Partition out;
  for (int i = 0; i < rows; ++i) {
    int part = beta[i] - (rows - 1 - i);
    if (part > 0) out.push_back(part);
  }
  return out;
}

BigInt mn_rec(const Partition& lambda, const std::vector<int>& mu, size_t idx) {
  if (idx == mu.size()) return 1;
  const int k = mu[idx];
  auto beta = beta_set(lambda);
  BigInt total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossings = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossings;
    auto beta2 = beta;
    beta2[i] = target;
    BigInt sub = mn_rec(from_beta(beta2), mu, idx + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  int wl = std::accumulate(lambda.begin(), lambda.end(), 0);
  int wm = std::accumulate(mu.begin(), mu.end(), 0);
  require(wl == wm, Errc::WeightMismatch, "character weight mismatch");
  return mn_rec(lambda, mu, 0);
}

// ---------------------------------------------------------------------------
// seminormal representation

namespace {

struct Tableau {
  std::vector<int> row, col;  // 0-based, indexed by letter-1
};

void enumerate_syt(const Partition& shape, std::vector<Tableau>& out) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> fill(shape.size(), 0);
  Tableau t;
  t.row.resize(n);
  t.col.resize(n);
  std::function<void(int)> rec = [&](int letter) {
    if (letter == n) {
      out.push_back(t);
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      if (fill[r] >= shape[r]) continue;
      if (r > 0 && fill[r] >= fill[r - 1]) continue;
      t.row[letter] = static_cast<int>(r);
      t.col[letter] = fill[r];
      ++fill[r];
      rec(letter + 1);
      --fill[r];
    }
  };
  rec(0);
}

struct SeminormalRep {
  std::vector<Tableau> tabs;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;

  int find(const Tableau& t) const { return index.at({t.row, t.col}); }

  // apply T_i (1-based generator) to a coefficient vector; the block on a
  // pair (t, t') with contents ca > cb is
  //   T v_t  = alpha v_t + v_{t'}
  //   T v_t' = (X - alpha^2 X^{ca-cb}) v_t + alpha' v_{t'}
  // with alpha = (X-1)/(1 - X^{ca-cb}), alpha' = (X-1)/(1 - X^{cb-ca}),
  // pinned by (T-X)(T+1) = 0 and the JM eigenvalue exchange.
  std::vector<RatFunc> apply(int i, const std::vector<RatFunc>& vec) const {
    const RatFunc X{LaurentPoly::x()};
    const RatFunc one{LaurentPoly::one()};
    const RatFunc xm1{LaurentPoly::x() - LaurentPoly::one()};
    std::vector<RatFunc> out(vec.size());
    for (size_t t = 0; t < vec.size(); ++t) {
      if (vec[t].is_zero()) continue;
      const Tableau& tab = tabs[t];
      const int a = i - 1, b = i;  // letters i, i+1 (0-based)
      if (tab.row[a] == tab.row[b]) {
        out[t] = out[t] + X * vec[t];
        continue;
      }
      if (tab.col[a] == tab.col[b]) {
        out[t] = out[t] - vec[t];
        continue;
      }
      const int ca = tab.col[a] - tab.row[a];
      const int cb = tab.col[b] - tab.row[b];
      Tableau swapped = tab;
      std::swap(swapped.row[a], swapped.row[b]);
      std::swap(swapped.col[a], swapped.col[b]);
      const int tp = find(swapped);
      RatFunc xab{LaurentPoly::x_power(2 * (ca - cb))};
      RatFunc alpha = xm1 / (one - xab);
      out[t] = out[t] + alpha * vec[t];
      if (ca > cb) {
        out[tp] = out[tp] + vec[t];
      } else {
        RatFunc xba{LaurentPoly::x_power(2 * (cb - ca))};
        RatFunc alpha_p = xm1 / (one - xba);
        RatFunc beta = X - alpha_p * alpha_p * xba;
        out[tp] = out[tp] + beta * vec[t];
      }
    }
    return out;
  }
};

const SeminormalRep& seminormal(const Partition& lambda) {
  static std::map<Partition, SeminormalRep> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  SeminormalRep rep;
  enumerate_syt(lambda, rep.tabs);
  for (size_t i = 0; i < rep.tabs.size(); ++i)
    rep.index[{rep.tabs[i].row, rep.tabs[i].col}] = static_cast<int>(i);
  return cache.emplace(lambda, std::move(rep)).first->second;
}

}  // namespace

std::vector<int> min_class_word(const Partition& mu) {
  std::vector<int> word;
  int offset = 0;
  for (int part : mu) {
    for (int i = 1; i < part; ++i) word.push_back(offset + i);
    offset += part;
  }
  return word;
}

LaurentPoly qmn_character(const Partition& lambda, const Partition& mu) {
  int wl = std::accumulate(lambda.begin(), lambda.end(), 0);
  int wm = std::accumulate(mu.begin(), mu.end(), 0);
  require(wl == wm, Errc::WeightMismatch, "character weight mismatch");
  require(wl <= 7, Errc::Unsupported, "q-characters supported up to weight 7");
  static std::map<std::pair<Partition, Partition>, LaurentPoly> cache;
  auto key = std::make_pair(lambda, mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const SeminormalRep& rep = seminormal(lambda);
  const auto word = min_class_word(mu);
  RatFunc trace;
  for (size_t t = 0; t < rep.tabs.size(); ++t) {
    std::vector<RatFunc> vec(rep.tabs.size());
    vec[t] = RatFunc(LaurentPoly::one());
    for (auto w = word.rbegin(); w != word.rend(); ++w) vec = rep.apply(*w, vec);
    trace = trace + vec[t];
  }
  LaurentPoly result = trace.as_poly();  // integrality check
  cache.emplace(key, result);
  return result;
}

// ---------------------------------------------------------------------------
// symmetric functions

void SymFunc::add(const Partition& p, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc SymFunc::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RatFunc() : it->second;
}

SymFunc SymFunc::generator(Basis basis, const Partition& mu) {
  int w = std::accumulate(mu.begin(), mu.end(), 0);
  SymFunc f(w, basis);
  Partition sorted = mu;
  std::sort(sorted.rbegin(), sorted.rend());
  f.add(sorted, RatFunc(LaurentPoly::one()));
  return f;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  require(weight_ == o.weight_ && basis_ == o.basis_, Errc::WeightMismatch,
          "incompatible symmetric functions");
  SymFunc r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
  SymFunc r(weight_, basis_);
  for (const auto& [p, k] : terms_) r.add(p, k * c);
  return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
  return weight_ == o.weight_ && basis_ == o.basis_ && terms_ == o.terms_;
}

std::string SymFunc::json() const {
  const char* names[] = {"schur", "elementary", "homogeneous", "powersum", "monomial"};
  nlohmann::json j;
  j["basis"] = names[static_cast<int>(basis_)];
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [p, c] : terms_)
    arr.push_back({p, nlohmann::json::parse(c.num().json()),
                   nlohmann::json::parse(c.den().json())});
  j["terms"] = arr;
  return j.dump();
}

namespace {

// one-part e_k and h_k in the power-sum basis, by Newton's identities
const std::map<Partition, BigRat>& one_part_in_p(int k, bool elementary) {
  static std::map<std::pair<int, bool>, std::map<Partition, BigRat>> cache;
  auto key = std::make_pair(k, elementary);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<Partition, BigRat> result;
  if (k == 0) {
    result[{}] = 1;
  } else {
    // k f_k = sum_{i=1}^{k} (±1)^{i-1} f_{k-i} p_i
    for (int i = 1; i <= k; ++i) {
      const auto& prev = one_part_in_p(k - i, elementary);
      BigRat sign = (!elementary || i % 2 == 1) ? BigRat(1) : BigRat(-1);
      for (const auto& [mu, c] : prev) {
        Partition nu = mu;
        nu.push_back(i);
        std::sort(nu.rbegin(), nu.rend());
        result[nu] += sign * c / k;
      }
    }
    for (auto it2 = result.begin(); it2 != result.end();) {
      if (it2->second == 0)
        it2 = result.erase(it2);
      else
        ++it2;
    }
  }
  return cache.emplace(key, std::move(result)).first->second;
}

SymFunc product_in_p(int weight, const Partition& mu, bool elementary) {
  SymFunc f(weight, Basis::PowerSum);
  std::map<Partition, BigRat> acc;
  acc[{}] = 1;
  for (int part : mu) {
    std::map<Partition, BigRat> next;
    const auto& table = one_part_in_p(part, elementary);
    for (const auto& [p1, c1] : acc)
      for (const auto& [p2, c2] : table) {
        Partition merged = p1;
        merged.insert(merged.end(), p2.begin(), p2.end());
        std::sort(merged.rbegin(), merged.rend());
        next[merged] += c1 * c2;
      }
    acc = std::move(next);
  }
  for (const auto& [p, c] : acc)
    if (c != 0) f.add(p, RatFunc(c));
  return f;
}

SymFunc to_powersum(const SymFunc& f) {
  const int w = f.weight();
  SymFunc out(w, Basis::PowerSum);
  switch (f.basis()) {
    case Basis::PowerSum:
      return f;
    case Basis::Elementary:
    case Basis::Homogeneous: {
      const bool elem = f.basis() == Basis::Elementary;
      for (const auto& [mu, c] : f.terms()) {
        SymFunc g = product_in_p(w, mu, elem);
        for (const auto& [p, k] : g.terms()) out.add(p, k * c);
      }
      return out;
    }
    case Basis::Schur: {
      for (const auto& [lam, c] : f.terms())
        for (const auto& mu : partitions_of(w)) {
          BigInt chi = mn_character(lam, mu);
          if (chi == 0) continue;
          out.add(mu, c * RatFunc(BigRat(chi, z_factor(mu))));
        }
      return out;
    }
    case Basis::Monomial: {
      // invert the p -> m change of basis; cache the inverse per weight
      auto parts = partitions_of(w);
      const size_t n = parts.size();
      static std::map<int, std::vector<std::vector<BigRat>>> inv_cache;
      auto itc = inv_cache.find(w);
      if (itc == inv_cache.end()) {
        std::vector<std::vector<BigRat>> P(n, std::vector<BigRat>(n, 0));
        for (size_t j = 0; j < n; ++j) {
          // coefficient of m_{parts[j]} in p_{parts[i]} equals <p_i, h_j>
          SymFunc hj = product_in_p(w, parts[j], false);
          for (size_t i = 0; i < n; ++i) {
            RatFunc c = hj.coeff(parts[i]);
            if (c.is_zero()) continue;
            BigRat val(c.num().coeff(0));
            val /= BigRat(c.den().coeff(0));
            P[i][j] = val * BigRat(z_factor(parts[i]));
          }
        }
        std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, 0));
        for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
        for (size_t col = 0; col < n; ++col) {
          size_t piv = col;
          while (piv < n && P[piv][col] == 0) ++piv;
          require(piv < n, Errc::DomainError, "singular basis-change matrix");
          std::swap(P[piv], P[col]);
          std::swap(inv[piv], inv[col]);
          BigRat d = P[col][col];
          for (size_t j = 0; j < n; ++j) {
            P[col][j] /= d;
            inv[col][j] /= d;
          }
          for (size_t row = 0; row < n; ++row) {
            if (row == col || P[row][col] == 0) continue;
            BigRat factor = P[row][col];
            for (size_t j = 0; j < n; ++j) {
              P[row][j] -= factor * P[col][j];
              inv[row][j] -= factor * inv[col][j];
            }
          }
        }
        itc = inv_cache.emplace(w, std::move(inv)).first;
      }
      const auto& inv = itc->second;
      for (const auto& [lam, c] : f.terms()) {
        // m_j = sum_i (P^{-1})[j][i] p_i
        size_t j = static_cast<size_t>(
            std::find(parts.begin(), parts.end(), lam) - parts.begin());
        for (size_t i = 0; i < n; ++i)
          if (inv[j][i] != 0) out.add(parts[i], c * RatFunc(inv[j][i]));
      }
      return out;
    }
  }
  return out;
}

}  // namespace

SymFunc sf_convert(const SymFunc& f, Basis target) {
  require(f.weight() <= 8, Errc::Unsupported, "basis conversion supported up to weight 8");
  if (f.basis() == target) return f;
  SymFunc p = to_powersum(f);
  if (target == Basis::PowerSum) return p;
  const int w = f.weight();
  SymFunc out(w, target);
  auto parts = partitions_of(w);
  switch (target) {
    case Basis::Schur: {
      for (const auto& lam : parts) {
        RatFunc c;
        for (const auto& [mu, k] : p.terms())
          c = c + k * RatFunc(BigRat(mn_character(lam, mu)));
        out.add(lam, c);
      }
      return out;
    }
    case Basis::Monomial: {
      for (const auto& lam : parts) {
        SymFunc h = product_in_p(w, lam, false);
        RatFunc c;
        for (const auto& [mu, k] : p.terms()) {
          RatFunc hk = h.coeff(mu);
          if (hk.is_zero()) continue;
          c = c + k * hk * RatFunc(BigRat(z_factor(mu)));
        }
        out.add(lam, c);
      }
      return out;
    }
    case Basis::Elementary:
    case Basis::Homogeneous: {
      const bool elem = target == Basis::Elementary;
      const size_t n = parts.size();
      std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n));
      for (size_t j = 0; j < n; ++j) {
        SymFunc gj = product_in_p(w, parts[j], elem);
        for (size_t i = 0; i < n; ++i) M[i][j] = gj.coeff(parts[i]);
      }
      std::vector<RatFunc> rhs(n);
      for (size_t i = 0; i < n; ++i) rhs[i] = p.coeff(parts[i]);
      for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        require(piv < n, Errc::DomainError, "singular basis-change matrix");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        RatFunc d = M[col][col];
        for (size_t j = col; j < n; ++j) M[col][j] = M[col][j] / d;
        rhs[col] = rhs[col] / d;
        for (size_t row = 0; row < n; ++row) {
          if (row == col || M[row][col].is_zero()) continue;
          RatFunc factor = M[row][col];
          for (size_t j = col; j < n; ++j) M[row][j] = M[row][j] - factor * M[col][j];
          rhs[row] = rhs[row] - factor * rhs[col];
        }
      }
      for (size_t i = 0; i < n; ++i) out.add(parts[i], rhs[i]);
      return out;
    }
    case Basis::PowerSum:
      break;
  }
  return out;
}

RatFunc hall_pair(const SymFunc& f, const SymFunc& g) {
  require(f.weight() == g.weight(), Errc::WeightMismatch, "Hall pairing weight mismatch");
  SymFunc fp = to_powersum(f), gp = to_powersum(g);
  RatFunc total;
  for (const auto& [mu, a] : fp.terms()) {
    RatFunc b = gp.coeff(mu);
    if (b.is_zero()) continue;
    total = total + a * b * RatFunc(BigRat(z_factor(mu)));
  }
  return total;
}

SymFunc plethysm_xq(const SymFunc& f) {
  SymFunc p = to_powersum(f);
  SymFunc out(f.weight(), Basis::PowerSum);
  for (const auto& [mu, c] : p.terms()) {
    RatFunc factor(LaurentPoly::one());
    for (int part : mu) {
      LaurentPoly xk = LaurentPoly::x_power(2 * part) - LaurentPoly::one();
      factor = factor / RatFunc(xk);
    }
    out.add(mu, c * factor);
  }
  return out;
}

std::set<int> composition_to_subset(int n, const std::vector<int>& nu) {
  int sum = std::accumulate(nu.begin(), nu.end(), 0);
  require(sum == n, Errc::WeightMismatch, "composition does not sum to n");
  std::set<int> cuts;
  int acc = 0;
  for (int part : nu) {
    require(part >= 1, Errc::InvalidInput, "composition parts must be positive");
    acc += part;
    if (acc < n) cuts.insert(acc);
  }
  std::set<int> J;
  for (int s = 1; s <= n - 1; ++s)
    if (!cuts.count(s)) J.insert(s);
  return J;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

LascouxReport verify_lascoux(int n, const std::vector<int>& nu, int sign) {
  require(n >= 2 && n <= 6, Errc::Unsupported, "lascoux verification supported for n = 2..6");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  const std::set<int> J = composition_to_subset(n, nu);
  HeckeElement sigma = sigma_elt(sys.get(), J, sign);

  auto parts = partitions_of(n);
  const size_t m = parts.size();
  std::vector<LaurentPoly> values;
  for (const auto& mu : parts) {
    HeckeElement tw = HeckeElement::t_word(sys.get(), min_class_word(mu));
    values.push_back(tau_product(tw, sigma));
  }
  // solve: sum_lam c_lam chi_X^lam(T_{w_mu}) = tau[Sigma](T_{w_mu})
  std::vector<std::vector<RatFunc>> M(m, std::vector<RatFunc>(m));
  std::vector<RatFunc> rhs(m);
  for (size_t i = 0; i < m; ++i) {
    rhs[i] = RatFunc(values[i]);
    for (size_t j = 0; j < m; ++j) M[i][j] = RatFunc(qmn_character(parts[j], parts[i]));
  }
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && M[piv][col].is_zero()) ++piv;
    require(piv < m, Errc::DomainError, "singular character matrix");
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    RatFunc d = M[col][col];
    for (size_t j = col; j < m; ++j) M[col][j] = M[col][j] / d;
    rhs[col] = rhs[col] / d;
    for (size_t row = 0; row < m; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      RatFunc factor = M[row][col];
      for (size_t j = col; j < m; ++j) M[row][j] = M[row][j] - factor * M[col][j];
      rhs[row] = rhs[row] - factor * rhs[col];
    }
  }

  Partition sorted_nu = nu;
  std::sort(sorted_nu.rbegin(), sorted_nu.rend());
  SymFunc gen =
      SymFunc::generator(sign < 0 ? Basis::Elementary : Basis::Homogeneous, sorted_nu);
  SymFunc pleth = plethysm_xq(gen);
  LaurentPoly xm1n = (LaurentPoly::x() - LaurentPoly::one()).pow(static_cast<unsigned>(n));
  pleth = pleth.scaled(RatFunc(xm1n));
  SymFunc schur = sf_convert(pleth, Basis::Schur);

  LascouxReport report;
  for (size_t j = 0; j < m; ++j) {
    RatFunc lhs = rhs[j];
    RatFunc expect = schur.coeff(parts[j]);
    bool eq = lhs == expect;
    report.all_equal = report.all_equal && eq;
    report.coords.push_back({parts[j], lhs, expect, eq});
  }
  return report;
}

bool verify_tau_to_eh(int n, const std::vector<int>& nu, int sign, const Partition& lambda) {
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  const std::set<int> J = composition_to_subset(n, nu);
  auto wj_elts = sys->subgroup_elements(J);

  // chi^lambda(e_{J,±}) / det(X - e_{J,±} | V_G) by linear extension of the
  // class function w -> chi^lambda(w) / det(X - w | V_G) over the terms of
  // the symmetrizer; V_G is the n-dim permutation module, so
  // det(X - w | V_G) = prod over cycles (X^c - 1).
  RatFunc lhs;
  for (const auto& w : wj_elts) {
    BigRat s(1, static_cast<long>(wj_elts.size()));
    if (sign < 0 && w.length() % 2 == 1) s = -s;
    Partition ct = cycle_type(w);
    LaurentPoly det = LaurentPoly::one();
    for (int c : ct) det *= LaurentPoly::x_power(2 * c) - LaurentPoly::one();
    RatFunc term = RatFunc(s * BigRat(mn_character(lambda, ct))) / RatFunc(det);
    lhs = lhs + term;
  }

  Partition sorted_nu = nu;
  std::sort(sorted_nu.rbegin(), sorted_nu.rend());
  SymFunc gen =
      SymFunc::generator(sign < 0 ? Basis::Elementary : Basis::Homogeneous, sorted_nu);
  SymFunc pleth = plethysm_xq(gen);
  SymFunc slam = SymFunc::generator(Basis::Schur, lambda);
  RatFunc rhs = hall_pair(slam, pleth);
  return lhs == rhs;
}

}  // namespace qpark
