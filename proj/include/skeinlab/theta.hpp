#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "skeinlab/classical.hpp"

namespace skeinlab {

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// E_k = (E^-1 - 1)(E^-1 - 2) ... (E^-1 - k + 1), E_1 = 1.
inline LaurentFraction ek(int k) {
  LaurentFraction r(1);
  LaurentFraction einv = parse_fraction("E^-1");
  for (int j = 1; j < k; ++j) r = r * (einv - LaurentFraction(j));
  return r;
}

namespace detail {

// Set partitions of {0..m-1} as restricted growth strings, streamed.
template <typename Fn>
void for_each_partition(int m, Fn&& fn) {
  std::vector<int> rgs(static_cast<size_t>(m), 0);
  while (true) {
    int k = 0;
    for (int v : rgs) k = std::max(k, v + 1);
    std::vector<std::set<int>> blocks(static_cast<size_t>(k));
    for (int i = 0; i < m; ++i) blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].insert(i);
    fn(blocks);
    // next restricted growth string
    int i = m - 1;
    while (i > 0) {
      int maxPrefix = 0;
      for (int j = 0; j < i; ++j) maxPrefix = std::max(maxPrefix, rgs[static_cast<size_t>(j)]);
      if (rgs[static_cast<size_t>(i)] <= maxPrefix) break;
      --i;
    }
    if (i == 0) return;
    ++rgs[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j) rgs[static_cast<size_t>(j)] = 0;
  }
}

// nu(pi): sum of lk(i,j) over pairs in distinct blocks.
inline int nu_of(const std::vector<std::set<int>>& blocks,
                 const std::vector<std::vector<int>>& lk) {
  int m = static_cast<int>(lk.size());
  std::vector<int> block_of(static_cast<size_t>(m));
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int i : blocks[b]) block_of[static_cast<size_t>(i)] = static_cast<int>(b);
  int nu = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (block_of[static_cast<size_t>(i)] != block_of[static_cast<size_t>(j)])
        nu += lk[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return nu;
}

}  // namespace detail

// theta(L) = sum over partitions pi into k blocks of
//   (-1)^{k-1} (q+q^-1)^{k-1} E_k q^{4 nu(pi)} prod_blocks V(sublink).
inline LaurentFraction theta_partition(const LinkDiagram& L, int cap = kDefaultCrossingCap) {
  auto lk = L.linking_matrix();
  int m = L.n_components();
  LaurentFraction total;
  static const LaurentFraction minus_qq = parse_fraction("-q - q^-1");
  detail::for_each_partition(m, [&](const std::vector<std::set<int>>& blocks) {
    int k = static_cast<int>(blocks.size());
    LaurentFraction term = minus_qq.pow(k - 1) * ek(k);
    term = term * LaurentFraction(LaurentPoly(1).shifted(
               Monomial::var(Var::q, 4 * detail::nu_of(blocks, lk))));
    for (const auto& b : blocks) term = term * jones(sublink(L, b), JonesVar::q, cap);
    total = total + term;
  });
  return total;
}

// Theta(L) = sum over partitions of mu^{k-1} E_k lambda^{nu(pi)} prod P(sublink),
// with lambda carried as s^2.
inline LaurentFraction Theta_partition(const LinkDiagram& L, int cap = kDefaultCrossingCap) {
  auto lk = L.linking_matrix();
  int m = L.n_components();
  LaurentFraction total;
  const LaurentFraction mu = detail::mu_s();
  detail::for_each_partition(m, [&](const std::vector<std::set<int>>& blocks) {
    int k = static_cast<int>(blocks.size());
    LaurentFraction term = mu.pow(k - 1) * ek(k);
    term = term * LaurentFraction(LaurentPoly(1).shifted(
               Monomial::var(Var::s, 2 * detail::nu_of(blocks, lk))));
    for (const auto& b : blocks) term = term * homflypt(sublink(L, b), cap);
    total = total + term;
  });
  return total;
}

enum class SplitNormalization { kConsistent, kPrinted };

namespace detail {

// First mixed crossing, along the ordered traversal, where the
// lower-indexed component passes under.
inline int first_wrong_crossing(const LinkDiagram& L) {
  auto comp = L.component_of();
  std::map<int, size_t> under_of, over_of;
  for (size_t i = 0; i < L.crossings.size(); ++i) {
    under_of[L.crossings[i].a] = i;
    over_of[L.crossings[i].over_in()] = i;
  }
  for (const auto& cyc : L.component_cycles()) {
    for (int e : cyc) {
      size_t c;
      if (auto u = under_of.find(e); u != under_of.end())
        c = u->second;
      else if (auto o = over_of.find(e); o != over_of.end())
        c = o->second;
      else
        continue;
      const Crossing& x = L.crossings[c];
      int cu = comp.at(x.a), co = comp.at(x.over_in());
      if (cu < co) return static_cast<int>(c);
    }
  }
  return -1;
}

inline LaurentFraction theta_split_terminal(const LinkDiagram& L, SplitNormalization norm,
                                            int cap) {
  int r = L.n_components();
  LaurentFraction v(1);
  for (int i = 0; i < r; ++i) v = v * jones(sublink(L, {i}), JonesVar::q, cap);
  LaurentFraction scale(LaurentPoly(1).shifted(Monomial::var(Var::E, 1 - r)));
  if (norm == SplitNormalization::kConsistent)
    scale = scale * parse_fraction("-q - q^-1").pow(r - 1);
  return scale * v;
}

inline LaurentFraction theta_skein_impl(const LinkDiagram& L, SplitNormalization norm, int cap,
                                        std::map<std::string, LaurentFraction>& memo,
                                        int depth) {
  // the (components, wrong-crossing count) measure bounds the path length
  if (depth > 2 * (cap + 2) * (cap + 2))
    throw NonTermination("theta skein descent failed to make progress");
  LinkDiagram D = simplify(L);
  std::string key = canonical_key(D);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  LaurentFraction result;
  int wrong = first_wrong_crossing(D);
  if (wrong < 0) {
    // components are stacked by index: a split union of its component knots
    result = theta_split_terminal(D, norm, cap);
  } else {
    LaurentFraction sw =
        theta_skein_impl(resolve(D, wrong, ResolveMode::kSwitch), norm, cap, memo, depth + 1);
    LaurentFraction sm =
        theta_skein_impl(resolve(D, wrong, ResolveMode::kSmooth), norm, cap, memo, depth + 1);
    if (D.crossings[static_cast<size_t>(wrong)].sign > 0)
      result = parse_fraction("q^4") * sw + parse_fraction("q^3 - q") * sm;
    else
      result = parse_fraction("q^-4") * sw - parse_fraction("q^-1 - q^-3") * sm;
  }
  memo.emplace(key, result);
  return memo.at(key);
}

}  // namespace detail

// theta by mixed-crossing skein descent:
//   q^-2 theta(L+) - q^2 theta(L-) = (q - q^-1) theta(L0)
// down to split unions of knots.
inline LaurentFraction theta_skein(const LinkDiagram& L,
                                   SplitNormalization norm = SplitNormalization::kConsistent,
                                   int cap = kDefaultCrossingCap) {
  if (static_cast<int>(L.crossings.size()) > cap)
    throw TooManyCrossings("theta limited to " + std::to_string(cap) + " crossings");
  static std::map<std::string, LaurentFraction> memo_consistent, memo_printed;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto& memo = norm == SplitNormalization::kConsistent ? memo_consistent : memo_printed;
  return detail::theta_skein_impl(L, norm, cap, memo, 0);
}

struct CompareReport {
  LaurentFraction v1, v2, p1, p2, theta1, theta2;
  LaurentFraction v_diff, p_diff, theta_diff;
  bool v_equal, p_equal, theta_equal;
};

inline CompareReport compare(const LinkDiagram& L1, const LinkDiagram& L2,
                             int cap = kDefaultCrossingCap) {
  CompareReport r;
  r.v1 = jones(L1, JonesVar::q, cap);
  r.v2 = jones(L2, JonesVar::q, cap);
  r.p1 = homflypt(L1, cap);
  r.p2 = homflypt(L2, cap);
  r.theta1 = theta_skein(L1, SplitNormalization::kConsistent, cap);
  r.theta2 = theta_skein(L2, SplitNormalization::kConsistent, cap);
  r.v_diff = r.v1 - r.v2;
  r.p_diff = r.p1 - r.p2;
  r.theta_diff = r.theta1 - r.theta2;
  r.v_equal = r.v_diff.is_zero();
  r.p_equal = r.p_diff.is_zero();
  r.theta_equal = r.theta_diff.is_zero();
  return r;
}

}  // namespace skeinlab
