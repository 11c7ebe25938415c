#include "qpark/homfly.hpp"

#include <random>
#include <sstream>

namespace qpark {

int BraidWord::writhe() const {
  int e = 0;
  for (int l : letters) e += (l > 0) ? 1 : -1;
  return e;
}

void BraidWord::validate() const {
  require(strands >= 1, Errc::InvalidInput, "need at least one strand");
  for (int l : letters)
    require(l != 0 && std::abs(l) <= strands - 1, Errc::InvalidInput,
            "braid letter out of range");
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  BraidWord b;
  b.strands = strands;
  std::istringstream is(text);
  int v;
  while (is >> v) b.letters.push_back(v);
  b.validate();
  return b;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << letters[i];
  }
  return os.str();
}

HeckeElement braid_to_hecke(const CoxeterSystem* sys, const BraidWord& b) {
  b.validate();
  require(sys->family() == Family::A && sys->rank() == b.strands - 1, Errc::SystemMismatch,
          "braid needs the A_{n-1} system");
  HeckeElement h = HeckeElement::unit(sys);
  for (int l : b.letters) {
    if (l > 0) {
      h = h.mul_gen_right(l).scaled(LaurentPoly::x_power(-1));
    } else {
      h = (h * HeckeElement::gen_inverse(sys, -l)).scaled(LaurentPoly::x_power(1));
    }
  }
  return h;
}

ZSlice mu_slice_tau(const HeckeElement& beta, int k, MuRoute route) {
  const CoxeterSystem* sys = &beta.system();
  require(sys->family() == Family::A, Errc::WrongFamily, "markov slices need type A");
  const int n = sys->rank() + 1;
  require(k >= 0 && k <= n - 1, Errc::InvalidInput, "slice index out of range");
  HeckeElement central(sys);
  if (route == MuRoute::Zeta) {
    std::set<int> I;
    for (int s = 1; s <= n - 1 - k; ++s) I.insert(s);
    central = zeta_elt(sys, I, +1);
  } else {
    require(route == MuRoute::Jm, Errc::InvalidInput, "tau route must be zeta or jm");
    central = esym_jm(sys, n - 1 - k);
  }
  // divide by (X-1)^{n-1} = X^{(n-1)/2} z^{n-1}
  ZSlice out{tau_product(beta, central).shifted(-(n - 1)), n - 1};
  out.normalize();
  return out;
}

ZSlice mu_slice_tower(const MarkovTower& tower, const HeckeElement& beta, int k) {
  const int n = tower.strands();
  require(k >= 0 && k <= n - 1, Errc::InvalidInput, "slice index out of range");
  return tower.a_slice(tower.mu(beta), -n + 1 + 2 * k);
}

ZSlice mu_slice(const MarkovTower& tower, const BraidWord& b, int k, MuRoute route) {
  HeckeElement beta = braid_to_hecke(tower.level(b.strands), b);
  if (route == MuRoute::Tower) return mu_slice_tower(tower, beta, k);
  return mu_slice_tau(beta, k, route);
}

std::string CalibrationFactor::str() const {
  if (!defined) return "undetermined";
  std::ostringstream os;
  os << (sign < 0 ? "-" : "");
  if (x_doubled == 0)
    os << "1";
  else if (x_doubled % 2 == 0)
    os << "X^" << x_doubled / 2;
  else
    os << "X^(" << x_doubled << "/2)";
  if (z_pow != 0) os << " * z^" << -z_pow;
  return os.str();
}

namespace {

// extract ±X^{m/2} z^j from a ZSlice ratio, or fail
CalibrationFactor factor_from_ratio(const ZSlice& tower, const ZSlice& jm) {
  // tower = c * jm  =>  c = tower.num / jm.num * z^{jm.z_pow - tower.z_pow}
  LaurentPoly quot = tower.num.exact_div(jm.num);
  int zshift = tower.z_pow - jm.z_pow;
  const LaurentPoly z = z_poly();
  while (quot.terms().size() > 1) {
    quot = quot.exact_div(z);  // throws if not of the expected shape
    --zshift;
  }
  CalibrationFactor f;
  f.defined = true;
  const auto& [e, c] = *quot.terms().begin();
  require(c == 1 || c == -1, Errc::InconsistentCalibration,
          "calibration factor is not a signed monomial");
  f.sign = (c < 0) ? -1 : +1;
  f.x_doubled = e;
  f.z_pow = zshift;
  return f;
}

}  // namespace

std::vector<CalibrationFactor> calibrate(int n) {
  require(n >= 2 && n <= 5, Errc::Unsupported, "calibration supported for n = 2..5");
  MarkovTower tower(n);
  const CoxeterSystem* sys = tower.level(n);
  std::vector<BraidWord> probes;
  probes.push_back(BraidWord{n, {}});
  probes.push_back(BraidWord{n, {1}});
  probes.push_back(BraidWord{n, {1, 1, 1}});
  {
    BraidWord all{n, {}};
    for (int i = 1; i <= n - 1; ++i) all.letters.push_back(i);
    probes.push_back(all);
    BraidWord doubled = all;
    doubled.letters.insert(doubled.letters.end(), all.letters.begin(), all.letters.end());
    probes.push_back(doubled);
  }
  std::mt19937_64 rng(20240 + n);
  std::uniform_int_distribution<int> letter(1, n - 1);
  for (int t = 0; t < 6; ++t) {
    BraidWord b{n, {}};
    for (int i = 0; i < 6; ++i) b.letters.push_back(letter(rng));
    probes.push_back(b);
  }

  std::vector<CalibrationFactor> out(n);
  for (int k = 0; k <= n - 1; ++k) {
    CalibrationFactor found;
    for (const auto& b : probes) {
      HeckeElement beta = braid_to_hecke(sys, b);
      ZSlice jm = mu_slice_tau(beta, k, MuRoute::Jm);
      if (jm.num.is_zero()) continue;
      ZSlice tw = mu_slice_tower(tower, beta, k);
      CalibrationFactor f = factor_from_ratio(tw, jm);
      if (!found.defined) {
        found = f;
      } else {
        require(found.sign == f.sign && found.x_doubled == f.x_doubled &&
                    found.z_pow == f.z_pow,
                Errc::InconsistentCalibration, "calibration factor depends on the braid");
      }
    }
    out[k] = found;
  }
  return out;
}

MarkovValue homfly(const BraidWord& b) {
  b.validate();
  if (b.strands == 1) return MarkovValue{BivarPoly(BigInt(1)), 0};
  MarkovTower tower(b.strands);
  HeckeElement beta = braid_to_hecke(tower.level(b.strands), b);
  MarkovValue mu = tower.mu(beta);
  const int e = b.writhe();
  BivarPoly prefactor = BivarPoly::monomial((e % 2 == 0) ? 1 : -1, e, 0);
  return mu * prefactor;
}

bool kalman_check(const BraidWord& b) {
  b.validate();
  if (b.strands == 1) return true;
  auto sys = CoxeterSystem::build(Family::A, b.strands - 1);
  HeckeElement beta = braid_to_hecke(sys.get(), b);
  ZSlice bottom = mu_slice_tau(beta, 0, MuRoute::Jm);
  ZSlice top = mu_slice_tau(beta * full_twist(sys.get()), b.strands - 1, MuRoute::Jm);
  return bottom == top;
}

BraidWord conjugate_braid(const BraidWord& b, int letter) {
  BraidWord out{b.strands, {letter}};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  out.letters.push_back(-letter);
  out.validate();
  return out;
}

BraidWord stabilize_braid(const BraidWord& b, bool positive) {
  BraidWord out{b.strands + 1, b.letters};
  out.letters.push_back(positive ? b.strands : -b.strands);
  return out;
}

BraidWord rewrite_braid(const BraidWord& b, unsigned seed, int steps) {
  BraidWord cur = b;
  std::mt19937_64 rng(seed);
  for (int step = 0; step < steps; ++step) {
    std::uniform_int_distribution<int> move(0, 3);
    switch (move(rng)) {
      case 0: {  // far commutation
        std::vector<size_t> spots;
        for (size_t i = 0; i + 1 < cur.letters.size(); ++i)
          if (std::abs(std::abs(cur.letters[i]) - std::abs(cur.letters[i + 1])) >= 2)
            spots.push_back(i);
        if (spots.empty()) break;
        size_t i = spots[rng() % spots.size()];
        std::swap(cur.letters[i], cur.letters[i + 1]);
        break;
      }
      case 1: {  // braid relation on positive triples
        std::vector<size_t> spots;
        for (size_t i = 0; i + 2 < cur.letters.size(); ++i) {
          int a = cur.letters[i], c = cur.letters[i + 1], d = cur.letters[i + 2];
          if (a > 0 && c > 0 && d > 0 && a == d && std::abs(a - c) == 1) spots.push_back(i);
        }
        if (spots.empty()) break;
        size_t i = spots[rng() % spots.size()];
        int a = cur.letters[i], c = cur.letters[i + 1];
        cur.letters[i] = c;
        cur.letters[i + 1] = a;
        cur.letters[i + 2] = c;
        break;
      }
      case 2: {  // insert s s^{-1}
        std::uniform_int_distribution<int> letter(1, cur.strands - 1);
        std::uniform_int_distribution<size_t> at(0, cur.letters.size());
        int l = letter(rng);
        size_t i = at(rng);
        cur.letters.insert(cur.letters.begin() + i, {l, -l});
        break;
      }
      case 3: {  // free reduction
        for (size_t i = 0; i + 1 < cur.letters.size(); ++i)
          if (cur.letters[i] == -cur.letters[i + 1]) {
            cur.letters.erase(cur.letters.begin() + i, cur.letters.begin() + i + 2);
            break;
          }
        break;
      }
    }
  }
  return cur;
}

}  // namespace qpark
