#include "qpark/noncrossing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qpark {

namespace {

std::vector<std::vector<int>> cycle_blocks(const CoxeterElement& w) {
  const auto& d = w.data();
  std::vector<bool> seen(d.size(), false);
  std::vector<std::vector<int>> blocks;
  for (size_t i = 0; i < d.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> block;
    size_t j = i;
    do {
      seen[j] = true;
      block.push_back(static_cast<int>(j) + 1);
      j = static_cast<size_t>(d[j] - 1);
    } while (j != i);
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

CoxeterElement demazure_product(const CoxeterSystem* sys, const std::vector<int>& word) {
  CoxeterElement u = sys->identity();
  for (int s : word)
    if (!u.right_descent(s)) u = u.mul_gen_right(s);
  return u;
}

}  // namespace

bool is_minimal_block_rep(const CoxeterElement& v,
                          const std::vector<std::vector<int>>& blocks) {
  for (const auto& block : blocks)
    for (size_t i = 0; i + 1 < block.size(); ++i)
      if (v.data()[static_cast<size_t>(block[i] - 1)] >
          v.data()[static_cast<size_t>(block[i + 1] - 1)])
        return false;
  return true;
}

int absolute_length(const CoxeterElement& w) {
  return static_cast<int>(w.data().size() - cycle_blocks(w).size());
}

std::vector<NCPartition> nc_enumerate(int n, const std::vector<int>& cword) {
  require(n >= 1 && n <= 8, Errc::Unsupported, "noncrossing enumeration supports n <= 8");
  require(static_cast<int>(cword.size()) == n - 1, Errc::InvalidInput,
          "need a Coxeter word with n-1 letters");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  CoxeterElement c = sys->from_word(cword);
  require(absolute_length(c) == n - 1, Errc::InvalidInput, "word is not a Coxeter word");
  std::vector<NCPartition> out;
  for (const auto& pi : sys->elements()) {
    if (absolute_length(pi) + absolute_length(pi.inverse() * c) != n - 1) continue;
    NCPartition p;
    p.element = pi;
    p.blocks = cycle_blocks(pi);
    p.absolute_length = absolute_length(pi);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ParkingFunction> nc_parking_functions(int n, const std::vector<int>& cword) {
  require(n <= 6, Errc::Unsupported, "parking functions supported for n <= 6");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  auto nc = nc_enumerate(n, cword);
  std::vector<ParkingFunction> out;
  for (size_t pi = 0; pi < nc.size(); ++pi)
    for (const auto& v : sys->elements())
      if (is_minimal_block_rep(v, nc[pi].blocks))
        out.push_back({static_cast<int>(pi), v});
  return out;
}

std::vector<int> nc_sorting_word(const CoxeterSystem* sys, const std::vector<int>& cword) {
  CoxeterElement u = sys->identity();
  const int target = sys->longest_element().length();
  std::vector<int> word;
  int guard = 0;
  while (u.length() < target) {
    require(++guard <= target + 1, Errc::DomainError, "sorting word did not terminate");
    for (int s : cword) {
      if (!u.right_descent(s)) {
        u = u.mul_gen_right(s);
        word.push_back(s);
      }
    }
  }
  return word;
}

std::vector<std::vector<int>> nc_asso_faces(int n, const std::vector<int>& cword, int k) {
  require(n <= 5, Errc::Unsupported, "associahedron faces supported for n <= 5");
  require(k >= 0 && k <= n - 1, Errc::InvalidInput, "face dimension out of range");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  std::vector<int> q = cword;
  auto sorting = nc_sorting_word(sys.get(), cword);
  q.insert(q.end(), sorting.begin(), sorting.end());
  const int size = n - 1 - k;  // polytope dimension k <-> complex face size
  const CoxeterElement w0 = sys->longest_element();

  std::vector<std::vector<int>> faces;
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(subset.size()) == size) {
      std::vector<int> complement;
      for (int i = 0; i < static_cast<int>(q.size()); ++i)
        if (!std::binary_search(subset.begin(), subset.end(), i))
          complement.push_back(q[static_cast<size_t>(i)]);
      if (demazure_product(sys.get(), complement) == w0) faces.push_back(subset);
      return;
    }
    for (int i = start; i < static_cast<int>(q.size()); ++i) {
      subset.push_back(i);
      rec(i + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return faces;
}

std::vector<CoxeterElement> nc_ak_set(const CoxeterSystem* sys, int k) {
  require(sys->family() == Family::A, Errc::WrongFamily, "A_k sets live in type A");
  const int r = sys->rank();
  require(k >= 0 && k <= r, Errc::InvalidInput, "k out of range");
  // w_j = s_r s_{r-1} ... s_j
  auto wj = [&](int j) {
    std::vector<int> word;
    for (int s = r; s >= j; --s) word.push_back(s);
    return sys->from_word(word);
  };
  std::vector<CoxeterElement> out;
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(subset.size()) == k) {
      CoxeterElement w = sys->identity();
      for (int j : subset) w = w * wj(j);
      out.push_back(w);
      return;
    }
    for (int j = start; j <= r; ++j) {
      subset.push_back(j);
      rec(j + 1);
      subset.pop_back();
    }
  };
  rec(1);
  // cross-check against the ascent-set description
  std::set<int> Ik;
  for (int s = 1; s <= r - k; ++s) Ik.insert(s);
  std::set<std::vector<int>> expect;
  for (const auto& w : sys->elements())
    if (w.ascents() == Ik) expect.insert(w.data());
  require(expect.size() == out.size(), Errc::DomainError, "A_k count mismatch");
  for (const auto& w : out)
    require(expect.count(w.data()) == 1, Errc::DomainError, "A_k element mismatch");
  return out;
}

NCReport nc_verify_prop(int n, const std::vector<int>& cword) {
  require(n <= 6, Errc::Unsupported, "proposition sweep supported for n <= 6");
  auto sys = CoxeterSystem::build(Family::A, n - 1);
  CoxeterElement c = sys->from_word(cword);
  std::vector<int> std_word;
  for (int s = 1; s <= n - 1; ++s) std_word.push_back(s);
  CoxeterElement c_std = sys->from_word(std_word);
  // conjugate to the standard Coxeter element (the proof is stated for it)
  CoxeterElement g = sys->identity();
  bool found = false;
  for (const auto& cand : sys->elements())
    if (cand * c * cand.inverse() == c_std) {
      g = cand;
      found = true;
      break;
    }
  require(found, Errc::InvalidInput, "not a Coxeter word");

  NCReport report;
  auto nc = nc_enumerate(n, cword);
  std::vector<std::vector<CoxeterElement>> ak;
  for (int k = 0; k <= n - 1; ++k) ak.push_back(nc_ak_set(sys.get(), k));
  for (const auto& pi : nc) {
    CoxeterElement conj = g * pi.element * g.inverse();
    auto blocks = cycle_blocks(conj);
    for (int k = 0; k <= n - 1; ++k) {
      long count = 0;
      for (const auto& v : ak[static_cast<size_t>(k)])
        if (is_minimal_block_rep(v, blocks)) ++count;
      // binom(n-1-l_T(pi), k)
      long binom = 1;
      const int top = n - 1 - pi.absolute_length;
      if (k > top) {
        binom = 0;
      } else {
        for (int i = 1; i <= k; ++i) binom = binom * (top - i + 1) / i;
      }
      bool ok = count == binom;
      report.pass = report.pass && ok;
      if (!ok) {
        std::ostringstream os;
        os << "pi with " << pi.blocks.size() << " blocks, k=" << k << ": " << count
           << " != " << binom;
        report.lines.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace qpark
