#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/poly_io.hpp"

namespace skeinlab {

struct TooManyCrossings : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCrossingCap = 24;

namespace detail {

class UnionFind {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(int i, int j) {
    i = find(i);
    j = find(j);
    if (i != j) parent_[i] = j;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// State sum over the 2^n smoothings: A^(#A - #B) * delta^(loops - 1) with
// delta = -A^2 - A^-2. The A-smoothing of X(a,b,c,d) joins a-b and c-d.
inline LaurentPoly kauffman_bracket(const LinkDiagram& L, int cap = kDefaultCrossingCap) {
  int n = static_cast<int>(L.crossings.size());
  if (n > cap) throw TooManyCrossings("bracket limited to " + std::to_string(cap) + " crossings");

  std::map<int, int> id;
  for (const auto& [e, s] : L.next) {
    (void)s;
    id.emplace(e, static_cast<int>(id.size()));
  }
  // arc joins away from crossings are common to every state
  std::set<int> in_slots;
  for (const auto& x : L.crossings) {
    in_slots.insert(x.a);
    in_slots.insert(x.over_in());
  }
  LaurentPoly delta = parse_poly("-A^2 - A^-2");
  LaurentPoly sum;
  for (long state = 0; state < (1L << n); ++state) {
    detail::UnionFind uf;
    for (size_t i = 0; i < id.size(); ++i) uf.make();
    for (const auto& [e, s] : L.next)
      if (!in_slots.count(e)) uf.unite(id.at(e), id.at(s));
    int a_minus_b = 0;
    for (int c = 0; c < n; ++c) {
      const Crossing& x = L.crossings[c];
      if (state >> c & 1) {
        ++a_minus_b;
        uf.unite(id.at(x.a), id.at(x.b));
        uf.unite(id.at(x.c), id.at(x.d));
      } else {
        --a_minus_b;
        uf.unite(id.at(x.a), id.at(x.d));
        uf.unite(id.at(x.b), id.at(x.c));
      }
    }
    std::set<int> loops;
    for (const auto& [e, i] : id) {
      (void)e;
      loops.insert(uf.find(i));
    }
    LaurentPoly term(1);
    term = term.shifted(Monomial::var(Var::A, a_minus_b));
    sum += term * delta.pow(static_cast<int>(loops.size()) - 1);
  }
  return sum;
}

enum class JonesVar { q, t };

// f(L) = (-A^4)^{-w} A^w <L> = (-1)^w A^{-3w} <L>, rebased by q = A^{-2}.
inline LaurentFraction jones(const LinkDiagram& L, JonesVar convention = JonesVar::q,
                             int cap = kDefaultCrossingCap) {
  LaurentPoly br = kauffman_bracket(L, cap);
  int w = L.writhe();
  LaurentPoly f = br.shifted(Monomial::var(Var::A, -3 * w));
  if (w % 2 != 0) f = f * mpq_class(-1);
  LaurentPoly v = rebase(f, Rebase::AtoQ);
  if (convention == JonesVar::t) v = rebase(v, Rebase::QtoT);
  return LaurentFraction(v);
}

namespace detail {

// First crossing along the ordered component traversal that is met on its
// under-strand before having been seen from above; -1 when descending.
inline int first_bad_crossing(const LinkDiagram& L) {
  std::map<int, size_t> under_of, over_of;
  for (size_t i = 0; i < L.crossings.size(); ++i) {
    under_of[L.crossings[i].a] = i;
    over_of[L.crossings[i].over_in()] = i;
  }
  std::set<size_t> seen;
  for (const auto& cyc : L.component_cycles()) {
    for (int e : cyc) {
      auto u = under_of.find(e);
      if (u != under_of.end()) {
        if (!seen.count(u->second)) return static_cast<int>(u->second);
        continue;
      }
      auto o = over_of.find(e);
      if (o != over_of.end()) seen.insert(o->second);
    }
  }
  return -1;
}

inline const LaurentFraction& mu_s() {
  static const LaurentFraction m = parse_fraction("(s^-1 - s)/(q - q^-1)");
  return m;
}

inline LaurentFraction homflypt_impl(const LinkDiagram& L,
                                     std::map<std::string, LaurentFraction>& memo) {
  LinkDiagram D = simplify(L);
  if (D.crossings.empty()) return mu_s().pow(D.n_components() - 1);
  std::string key = canonical_key(D);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  LaurentFraction result;
  auto pieces = split(D);
  if (pieces.size() > 1) {
    result = mu_s().pow(static_cast<int>(pieces.size()) - 1);
    for (const auto& p : pieces) result = result * homflypt_impl(p, memo);
  } else {
    int bad = first_bad_crossing(D);
    if (bad < 0) {  // descending diagrams are unlinks
      result = mu_s().pow(D.n_components() - 1);
    } else {
      LaurentFraction sw = homflypt_impl(resolve(D, bad, ResolveMode::kSwitch), memo);
      LaurentFraction sm = homflypt_impl(resolve(D, bad, ResolveMode::kSmooth), memo);
      static const LaurentFraction qq = parse_fraction("q - q^-1");
      if (D.crossings[static_cast<size_t>(bad)].sign > 0)
        result = parse_fraction("s^2") * sw + parse_fraction("s") * qq * sm;
      else
        result = parse_fraction("s^-2") * sw - parse_fraction("s^-1") * qq * sm;
    }
  }
  memo.emplace(key, result);
  return memo.at(key);
}

}  // namespace detail

// Homflypt P in (s, q): s^-1 P(L+) - s P(L-) = (q - q^-1) P(L0), P(unknot)=1.
inline LaurentFraction homflypt(const LinkDiagram& L, int cap = kDefaultCrossingCap) {
  if (static_cast<int>(L.crossings.size()) > cap)
    throw TooManyCrossings("homflypt limited to " + std::to_string(cap) + " crossings");
  static std::map<std::string, LaurentFraction> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return detail::homflypt_impl(L, memo);
}

}  // namespace skeinlab
