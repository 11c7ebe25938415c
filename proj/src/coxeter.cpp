#include "qpark/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qpark {

namespace {

int i2_length(int m, int j, int f) {
  if (f == 0) return 2 * std::min(j, m - j);
  return std::min(2 * j + 1, 2 * (m - 1 - j) + 1);
}

// Length by counting positive roots sent negative.
int model_length(Family fam, int m, const std::vector<int>& d) {
  switch (fam) {
    case Family::A: {
      int inv = 0;
      for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
          if (d[i] > d[j]) ++inv;
      return inv;
    }
    case Family::B:
    case Family::D: {
      int count = 0;
      const int r = static_cast<int>(d.size());
      if (fam == Family::B)
        for (int i = 0; i < r; ++i)
          if (d[i] < 0) ++count;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          const int a = d[i], b = d[j];
          const int pa = std::abs(a), pb = std::abs(b);
          // e_j - e_i
          if (pb > pa ? b < 0 : a > 0) ++count;
          // e_j + e_i
          if (pb > pa ? b < 0 : a < 0) ++count;
        }
      return count;
    }
    case Family::I2:
      return i2_length(m, d[0], d[1]);
  }
  return 0;
}

}  // namespace

CoxeterElement::CoxeterElement(const CoxeterSystem* sys, std::vector<int> data)
    : sys_(sys), data_(std::move(data)) {
  len_ = model_length(sys_->family(), sys_->dihedral_m(), data_);
}

CoxeterElement CoxeterElement::operator*(const CoxeterElement& o) const {
  require(sys_ == o.sys_, Errc::SystemMismatch, "elements of different Coxeter systems");
  if (sys_->family() == Family::I2) {
    const int m = sys_->dihedral_m();
    int j1 = data_[0], f1 = data_[1], j2 = o.data_[0], f2 = o.data_[1];
    int j = (f1 == 0) ? (j1 + j2) % m : ((j1 - j2) % m + m) % m;
    return CoxeterElement(sys_, {j, f1 ^ f2});
  }
  std::vector<int> r(data_.size());
  for (size_t i = 0; i < data_.size(); ++i) {
    int v = o.data_[i];
    r[i] = (v > 0) ? data_[v - 1] : -data_[-v - 1];
  }
  return CoxeterElement(sys_, std::move(r));
}

CoxeterElement CoxeterElement::inverse() const {
  if (sys_->family() == Family::I2) {
    const int m = sys_->dihedral_m();
    if (data_[1] == 1) return *this;
    return CoxeterElement(sys_, {(m - data_[0]) % m, 0});
  }
  std::vector<int> r(data_.size());
  for (size_t i = 0; i < data_.size(); ++i) {
    int v = data_[i];
    if (v > 0)
      r[v - 1] = static_cast<int>(i) + 1;
    else
      r[-v - 1] = -(static_cast<int>(i) + 1);
  }
  return CoxeterElement(sys_, std::move(r));
}

bool CoxeterElement::right_descent(int s) const {
  switch (sys_->family()) {
    case Family::A:
      return data_[s - 1] > data_[s];
    case Family::B: {
      if (s == 1) return data_[0] < 0;
      const int a = data_[s - 2], b = data_[s - 1];
      return std::abs(b) > std::abs(a) ? b < 0 : a > 0;
    }
    case Family::D: {
      if (s == 1) {
        const int a = data_[0], b = data_[1];
        return std::abs(a) > std::abs(b) ? a < 0 : b < 0;
      }
      const int a = data_[s - 2], b = data_[s - 1];
      return std::abs(b) > std::abs(a) ? b < 0 : a > 0;
    }
    case Family::I2:
      return mul_gen_right(s).length() < len_;
  }
  return false;
}

bool CoxeterElement::left_descent(int s) const { return inverse().right_descent(s); }

CoxeterElement CoxeterElement::mul_gen_right(int s) const {
  if (sys_->family() == Family::I2) return *this * sys_->generator(s);
  std::vector<int> r = data_;
  switch (sys_->family()) {
    case Family::A:
      std::swap(r[s - 1], r[s]);
      break;
    case Family::B:
      if (s == 1)
        r[0] = -r[0];
      else
        std::swap(r[s - 2], r[s - 1]);
      break;
    case Family::D:
      if (s == 1) {
        int a = r[0], b = r[1];
        r[0] = -b;
        r[1] = -a;
      } else {
        std::swap(r[s - 2], r[s - 1]);
      }
      break;
    default:
      break;
  }
  return CoxeterElement(sys_, std::move(r));
}

CoxeterElement CoxeterElement::mul_gen_left(int s) const { return sys_->generator(s) * *this; }

std::set<int> CoxeterElement::ascents() const {
  std::set<int> out;
  const CoxeterElement inv = inverse();
  for (int s = 1; s <= sys_->rank(); ++s)
    if (!inv.right_descent(s)) out.insert(s);
  return out;
}

std::set<int> CoxeterElement::descents() const {
  std::set<int> out;
  const CoxeterElement inv = inverse();
  for (int s = 1; s <= sys_->rank(); ++s)
    if (inv.right_descent(s)) out.insert(s);
  return out;
}

std::vector<int> CoxeterElement::reduced_word() const {
  std::vector<int> word;
  CoxeterElement w = *this;
  while (!w.is_identity()) {
    CoxeterElement inv = w.inverse();
    int pick = 0;
    for (int s = 1; s <= sys_->rank(); ++s)
      if (inv.right_descent(s)) {
        pick = s;
        break;
      }
    word.push_back(pick);
    w = w.mul_gen_left(pick);
  }
  return word;
}

void GroupAlgebraElement::add(const CoxeterElement& w, const BigRat& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRat GroupAlgebraElement::coeff(const CoxeterElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigRat(0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add(w1 * w2, c1 * c2);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const BigRat& c) const {
  GroupAlgebraElement r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.add(w, k * c);
  return r;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(Family family, int rank_or_m) {
  // one shared instance per type, so elements of equal systems interoperate
  static std::map<std::pair<Family, int>, std::shared_ptr<const CoxeterSystem>> cache;
  auto key = std::make_pair(family, rank_or_m);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->family_ = family;
  switch (family) {
    case Family::A:
      require(rank_or_m >= 1 && rank_or_m <= 7, Errc::Unsupported, "type A supports rank 1..7");
      sys->rank_ = rank_or_m;
      for (int i = 2; i <= rank_or_m + 1; ++i) sys->degrees_.push_back(i);
      break;
    case Family::B:
      require(rank_or_m >= 2 && rank_or_m <= 5, Errc::Unsupported, "type B supports rank 2..5");
      sys->rank_ = rank_or_m;
      for (int i = 1; i <= rank_or_m; ++i) sys->degrees_.push_back(2 * i);
      break;
    case Family::D:
      require(rank_or_m == 4, Errc::Unsupported, "type D supports rank 4");
      sys->rank_ = rank_or_m;
      for (int i = 1; i < rank_or_m; ++i) sys->degrees_.push_back(2 * i);
      sys->degrees_.push_back(rank_or_m);
      break;
    case Family::I2:
      require(rank_or_m >= 2 && rank_or_m <= 12, Errc::Unsupported, "I2(m) supports m = 2..12");
      sys->rank_ = 2;
      sys->m_ = rank_or_m;
      sys->degrees_ = {2, rank_or_m};
      break;
  }
  std::sort(sys->degrees_.begin(), sys->degrees_.end());
  sys->h_ = sys->degrees_.back();
  long order = 1;
  for (int d : sys->degrees_) order *= d;
  require(order <= 1000000, Errc::TooLarge, "group order exceeds the enumeration cap");
  sys->order_ = order;

  const int r = sys->rank_;
  sys->cox_mat_.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) sys->cox_mat_[i][i] = 1;
  auto link = [&](int a, int b, int m) {
    sys->cox_mat_[a - 1][b - 1] = m;
    sys->cox_mat_[b - 1][a - 1] = m;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < r; ++i) link(i, i + 1, 3);
      break;
    case Family::B:
      link(1, 2, 4);
      for (int i = 2; i < r; ++i) link(i, i + 1, 3);
      break;
    case Family::D:
      link(1, 3, 3);
      link(2, 3, 3);
      for (int i = 3; i < r; ++i) link(i, i + 1, 3);
      break;
    case Family::I2:
      link(1, 2, sys->m_);
      break;
  }

  sys->enumerate();
  require(static_cast<long>(sys->elements_.size()) == order, Errc::Unsupported,
          "enumeration does not match the degree product");
  cache.emplace(key, sys);
  return sys;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const std::string& name) {
  if (name == "G2" || name == "g2") return build(Family::I2, 6);
  require(!name.empty(), Errc::InvalidInput, "empty system name");
  if (name.rfind("I2", 0) == 0 || name.rfind("i2", 0) == 0) {
    size_t pos = name.find_first_of(":(");
    require(pos != std::string::npos, Errc::InvalidInput, "expected I2:m");
    int m = std::stoi(name.substr(pos + 1));
    return build(Family::I2, m);
  }
  char fam = name[0];
  int rank = std::stoi(name.substr(1));
  switch (fam) {
    case 'A': case 'a': return build(Family::A, rank);
    case 'B': case 'b': case 'C': case 'c': return build(Family::B, rank);
    case 'D': case 'd': return build(Family::D, rank);
    default: fail(Errc::InvalidInput, "unknown system name: " + name);
  }
}

std::string CoxeterSystem::name() const {
  std::ostringstream os;
  switch (family_) {
    case Family::A: os << "A" << rank_; break;
    case Family::B: os << "B" << rank_; break;
    case Family::D: os << "D" << rank_; break;
    case Family::I2: os << "I2:" << m_; break;
  }
  return os.str();
}

CoxeterElement CoxeterSystem::identity() const {
  std::vector<int> d;
  switch (family_) {
    case Family::A:
      d.resize(rank_ + 1);
      std::iota(d.begin(), d.end(), 1);
      break;
    case Family::B:
    case Family::D:
      d.resize(rank_);
      std::iota(d.begin(), d.end(), 1);
      break;
    case Family::I2:
      d = {0, 0};
      break;
  }
  return CoxeterElement(this, std::move(d));
}

CoxeterElement CoxeterSystem::generator(int s) const {
  require(s >= 1 && s <= rank_, Errc::InvalidInput, "generator index out of range");
  if (family_ == Family::I2) {
    if (s == 1) return CoxeterElement(this, {0, 1});
    return CoxeterElement(this, {m_ - 1, 1});
  }
  return identity().mul_gen_right(s);
}

CoxeterElement CoxeterSystem::from_word(const std::vector<int>& word) const {
  CoxeterElement w = identity();
  for (int s : word) w = w.mul_gen_right(s);
  return w;
}

void CoxeterSystem::enumerate() {
  std::set<std::vector<int>> seen;
  std::vector<CoxeterElement> frontier = {identity()};
  seen.insert(frontier[0].data());
  elements_.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<CoxeterElement> next;
    for (const auto& w : frontier)
      for (int s = 1; s <= rank_; ++s) {
        CoxeterElement ws = w.mul_gen_right(s);
        if (seen.insert(ws.data()).second) {
          elements_.push_back(ws);
          next.push_back(ws);
        }
      }
    frontier = std::move(next);
  }
  std::sort(elements_.begin(), elements_.end());
}

std::vector<CoxeterElement> CoxeterSystem::subgroup_elements(const std::set<int>& J) const {
  std::set<std::vector<int>> seen;
  std::vector<CoxeterElement> out = {identity()};
  seen.insert(out[0].data());
  std::vector<CoxeterElement> frontier = out;
  while (!frontier.empty()) {
    std::vector<CoxeterElement> next;
    for (const auto& w : frontier)
      for (int s : J) {
        CoxeterElement ws = w.mul_gen_right(s);
        if (seen.insert(ws.data()).second) {
          out.push_back(ws);
          next.push_back(ws);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoxeterElement> CoxeterSystem::coset_reps(const std::set<int>& J, int sign) const {
  std::vector<CoxeterElement> out;
  for (const auto& w : elements_) {
    const CoxeterElement inv = w.inverse();
    bool ok = true;
    for (int s : J) {
      const bool des = inv.right_descent(s);  // s in Des(w)
      if ((sign < 0 && des) || (sign > 0 && !des)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

CoxeterElement CoxeterSystem::longest(const std::set<int>& J) const {
  auto sub = subgroup_elements(J);
  return sub.back();  // sorted by length
}

namespace {

// Connected components of J in the Coxeter graph, each sorted.
std::vector<std::vector<int>> components(const std::set<int>& J,
                                         const std::vector<std::vector<int>>& mat) {
  std::vector<std::vector<int>> comps;
  std::set<int> left = J;
  while (!left.empty()) {
    std::vector<int> comp = {*left.begin()};
    left.erase(left.begin());
    for (size_t i = 0; i < comp.size(); ++i) {
      for (auto it = left.begin(); it != left.end();) {
        if (mat[comp[i] - 1][*it - 1] >= 3) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> CoxeterSystem::degrees_exponents(
    const std::set<int>& J, long p) const {
  require(std::gcd(p, static_cast<long>(h_)) == 1, Errc::DomainError, "p must be coprime to h");
  std::vector<int> degs, exps;
  for (const auto& comp : components(J, cox_mat_)) {
    const int k = static_cast<int>(comp.size());
    std::vector<int> cd;
    if (family_ == Family::I2 && k == 2) {
      // Full dihedral group: exponents of V_p come from the Galois twist
      // V_p ≅ V_j with j ≡ ±p (mod m).
      int j = static_cast<int>(((p % m_) + m_) % m_);
      j = std::min(j, m_ - j);
      degs.push_back(2);
      degs.push_back(m_);
      exps.push_back(j);
      exps.push_back(m_ - j);
      continue;
    }
    if (family_ == Family::I2 && k == 1) {
      // Rank-1 parabolic of I2(m): the Galois twist fixes the rational
      // restriction triv ⊕ sign, so the exponents stay {1, 0} for every p.
      degs.push_back(2);
      exps.push_back(1);
      continue;
    }
    switch (family_) {
      case Family::A:
        for (int i = 2; i <= k + 1; ++i) cd.push_back(i);
        break;
      case Family::B:
        if (comp[0] == 1)
          for (int i = 1; i <= k; ++i) cd.push_back(2 * i);
        else
          for (int i = 2; i <= k + 1; ++i) cd.push_back(i);
        break;
      case Family::D:
        if (k >= 2 && comp[0] == 1 && comp[1] == 2) {
          for (int i = 1; i < k; ++i) cd.push_back(2 * i);
          cd.push_back(k);
        } else {
          for (int i = 2; i <= k + 1; ++i) cd.push_back(i);
        }
        break;
      case Family::I2:
        break;  // handled above
    }
    for (int d : cd) {
      degs.push_back(d);
      exps.push_back(d - 1);
    }
  }
  while (static_cast<int>(degs.size()) < rank_) degs.push_back(1);
  while (static_cast<int>(exps.size()) < rank_) exps.push_back(0);
  std::sort(degs.begin(), degs.end());
  std::sort(exps.begin(), exps.end());
  return {degs, exps};
}

GroupAlgebraElement CoxeterSystem::symmetrizer(const std::set<int>& J, int sign) const {
  GroupAlgebraElement z;
  auto sub = subgroup_elements(J);
  const BigRat inv(1, static_cast<long>(sub.size()));
  for (const auto& w : sub) {
    BigRat c = inv;
    if (sign < 0 && w.length() % 2 == 1) c = -c;
    z.add(w, c);
  }
  return z;
}

LaurentPoly CoxeterSystem::reflection_char_poly(const CoxeterElement& w) const {
  const LaurentPoly one = LaurentPoly::one();
  switch (family_) {
    case Family::A: {
      // det over the permutation module, divided by the trivial summand.
      LaurentPoly det = one;
      std::vector<bool> seen(rank_ + 1, false);
      for (int i = 1; i <= rank_ + 1; ++i) {
        if (seen[i - 1]) continue;
        int c = 0, j = i;
        do {
          seen[j - 1] = true;
          j = w.data()[j - 1];
          ++c;
        } while (j != i);
        det *= one - LaurentPoly::x_power(2 * c);
      }
      return det.exact_div(one - LaurentPoly::x());
    }
    case Family::B:
    case Family::D: {
      LaurentPoly det = one;
      std::vector<bool> seen(rank_, false);
      for (int i = 1; i <= rank_; ++i) {
        if (seen[i - 1]) continue;
        int c = 0, j = i, sign = 1;
        do {
          seen[j - 1] = true;
          int v = w.data()[j - 1];
          if (v < 0) sign = -sign;
          j = std::abs(v);
          ++c;
        } while (j != i);
        LaurentPoly factor = one;
        if (sign > 0)
          factor -= LaurentPoly::x_power(2 * c);
        else
          factor += LaurentPoly::x_power(2 * c);
        det *= factor;
      }
      return det;
    }
    case Family::I2: {
      if (w.data()[1] == 1) return one - LaurentPoly::x_power(4);  // (1-t)(1+t)
      const int j = w.data()[0];
      // trace of the rotation is 2cos(2πj/m); rational only when the reduced
      // denominator of j/m is 1, 2, 3, 4 or 6.
      const int g = std::gcd(j, m_);
      int tr;
      switch (m_ / g) {
        case 1: tr = 2; break;
        case 2: tr = -2; break;
        case 3: tr = -1; break;
        case 4: tr = 0; break;
        case 6: tr = 1; break;
        default:
          fail(Errc::Unsupported, "irrational character value in I2(" + std::to_string(m_) + ")");
      }
      LaurentPoly p = one;
      p.add_term(2, BigInt(-tr));
      p.add_term(4, BigInt(1));
      return p;
    }
  }
  return one;
}

GroupAlgebraElement CoxeterSystem::ext_symmetrizer(int k) const {
  require(k >= 0 && k <= rank_, Errc::InvalidInput, "exterior power out of range");
  GroupAlgebraElement z;
  const BigRat inv(1, order_);
  const int sgn = (k % 2 == 0) ? 1 : -1;
  for (const auto& w : elements_) {
    LaurentPoly det = reflection_char_poly(w);
    // tr(w | Λ^k V) = (-1)^k [t^k] det(1 - t w | V)
    BigInt c = det.coeff(2 * k) * sgn;
    if (c != 0) z.add(w, BigRat(c));
  }
  return z.scaled(inv);
}

LaurentPoly CoxeterSystem::poincare_poly() const {
  LaurentPoly p;
  for (const auto& w : elements_) p.add_term(2 * w.length(), BigInt(1));
  return p;
}

std::set<int> CoxeterSystem::all_indices() const {
  std::set<int> s;
  for (int i = 1; i <= rank_; ++i) s.insert(i);
  return s;
}

std::string subset_str(const std::set<int>& J) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int s : J) {
    if (!first) os << ",";
    os << s;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace qpark
