#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/poly_io.hpp"

namespace skeinlab {

struct SizeCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadIndices : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set partition of {1..n} stored as a restricted-growth string: rgs[i] is the
// block id of element i+1, blocks numbered by first appearance. That form is
// unique, so lexicographic comparison of the vector is a total order.
struct SetPartition {
  std::vector<int> rgs;

  static SetPartition discrete(int n) {
    SetPartition p;
    p.rgs.resize(n);
    std::iota(p.rgs.begin(), p.rgs.end(), 0);
    return p;
  }

  int n() const { return static_cast<int>(rgs.size()); }

  void canonicalize() {
    std::map<int, int> relabel;
    for (int& b : rgs) {
      auto it = relabel.find(b);
      if (it == relabel.end())
        it = relabel.emplace(b, static_cast<int>(relabel.size())).first;
      b = it->second;
    }
  }

  // Coarsen by declaring elements a and b (1-based) tied.
  SetPartition join_pair(int a, int b) const {
    SetPartition r = *this;
    int ba = r.rgs[a - 1], bb = r.rgs[b - 1];
    if (ba != bb)
      for (int& x : r.rgs)
        if (x == bb) x = ba;
    r.canonicalize();
    return r;
  }

  SetPartition join(const SetPartition& o) const {
    SetPartition r = *this;
    // union-find over block-id collisions with o
    std::vector<int> parent(2 * n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n(); ++i) {
      int a = find(rgs[i]), b = find(n() + o.rgs[i]);
      if (a != b) parent[b] = a;
    }
    for (int i = 0; i < n(); ++i) r.rgs[i] = find(rgs[i]);
    r.canonicalize();
    return r;
  }

  // Image partition under a permutation of labels: v(i) ~ v(j) iff i ~ j.
  SetPartition apply(const std::vector<int>& one_line) const {
    SetPartition r;
    r.rgs.resize(n());
    for (int i = 0; i < n(); ++i) r.rgs[one_line[i] - 1] = rgs[i];
    r.canonicalize();
    return r;
  }

  // Drop the last element (blocks of the rest keep their mutual structure).
  SetPartition drop_last() const {
    SetPartition r = *this;
    r.rgs.pop_back();
    r.canonicalize();
    return r;
  }

  bool last_is_singleton() const {
    for (int i = 0; i + 1 < n(); ++i)
      if (rgs[i] == rgs.back()) return false;
    return true;
  }

  // 1-based labels sharing the block of element n, excluding n itself.
  std::vector<int> tied_to_last() const {
    std::vector<int> out;
    for (int i = 0; i + 1 < n(); ++i)
      if (rgs[i] == rgs.back()) out.push_back(i + 1);
    return out;
  }

  auto operator<=>(const SetPartition&) const = default;
};

// Permutation in one-line notation, 1-based values.
struct Perm {
  std::vector<int> w;

  static Perm identity(int n) {
    Perm p;
    p.w.resize(n);
    std::iota(p.w.begin(), p.w.end(), 1);
    return p;
  }

  int n() const { return static_cast<int>(w.size()); }
  int operator()(int i) const { return w[i - 1]; }

  int length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (w[i] > w[j]) ++inv;
    return inv;
  }

  // Right multiplication by the simple transposition s_i swaps positions i,i+1.
  Perm right_s(int i) const {
    Perm r = *this;
    std::swap(r.w[i - 1], r.w[i]);
    return r;
  }

  int inverse_of(int value) const {
    for (int i = 0; i < n(); ++i)
      if (w[i] == value) return i + 1;
    throw std::logic_error("value not in permutation");
  }

  // Reduced word i_1..i_k with *this == s_{i_1} ... s_{i_k}.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Perm cur = *this;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 1; i < n(); ++i)
        if (cur.w[i - 1] > cur.w[i]) {
          word.push_back(i);
          cur = cur.right_s(i);
          moved = true;
          break;
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  auto operator<=>(const Perm&) const = default;
};

using BTBasisKey = std::pair<SetPartition, Perm>;

// Element of E_n(q) on the partition-by-permutation basis.
class BTElement {
 public:
  explicit BTElement(int n) : n_(n) {}

  static BTElement one(int n) {
    BTElement e(n);
    e.add(SetPartition::discrete(n), Perm::identity(n), parse_fraction("1"));
    return e;
  }

  int n() const { return n_; }
  const std::map<BTBasisKey, LaurentFraction>& terms() const { return terms_; }

  void add(const SetPartition& p, const Perm& w, const LaurentFraction& c) {
    auto key = BTBasisKey{p, w};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!(c == LaurentFraction())) terms_.emplace(std::move(key), c);
      return;
    }
    it->second += c;
    if (it->second == LaurentFraction()) terms_.erase(it);
  }

  friend BTElement operator+(const BTElement& a, const BTElement& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("mixed strand counts");
    BTElement r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
    return r;
  }
  friend BTElement operator-(const BTElement& a, const BTElement& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("mixed strand counts");
    BTElement r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
    return r;
  }
  friend BTElement operator*(const LaurentFraction& c, const BTElement& a) {
    BTElement r(a.n_);
    if (c == LaurentFraction()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
  }

  bool operator==(const BTElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  int n_;
  std::map<BTBasisKey, LaurentFraction> terms_;
};

namespace detail {

inline const LaurentFraction& q_minus_qinv() {
  static const LaurentFraction v = parse_fraction("q - q^-1");
  return v;
}

// Right action of b_i (exp=+1) or b_i^-1 (exp=-1) on one basis term,
// accumulated into out with coefficient c.
inline void act_b(BTElement& out, const SetPartition& I, const Perm& w, int i,
                  int exp, const LaurentFraction& c) {
  Perm ws = w.right_s(i);
  bool up = w(i) < w(i + 1);
  if (up) {
    out.add(I, ws, c);
    if (exp < 0) out.add(I.join_pair(w(i), w(i + 1)), w, -(detail::q_minus_qinv() * c));
  } else {
    out.add(I, ws, c);
    if (exp > 0) out.add(I.join_pair(w(i), w(i + 1)), w, detail::q_minus_qinv() * c);
  }
}

// Right action of the general tie e_{a,b}: joins the strands currently at
// positions a and b, i.e. labels w(a), w(b).
inline void act_tie(BTElement& out, const SetPartition& I, const Perm& w, int a,
                    int b, const LaurentFraction& c) {
  out.add(I.join_pair(w(a), w(b)), w, c);
}

inline BTElement right_b(const BTElement& x, int i, int exp) {
  BTElement out(x.n());
  for (const auto& [k, c] : x.terms()) act_b(out, k.first, k.second, i, exp, c);
  return out;
}

inline BTElement right_tie(const BTElement& x, int a, int b) {
  BTElement out(x.n());
  for (const auto& [k, c] : x.terms()) act_tie(out, k.first, k.second, a, b, c);
  return out;
}

inline void all_partitions(int n, std::vector<SetPartition>& out) {
  // enumerate restricted-growth strings
  std::vector<int> rgs(n, 0);
  while (true) {
    SetPartition p;
    p.rgs = rgs;
    out.push_back(p);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
}

}  // namespace detail

inline std::vector<BTBasisKey> enumerate_basis(int n) {
  if (n < 1 || n > 6) throw SizeCap("basis enumeration limited to n <= 6");
  std::vector<SetPartition> parts;
  detail::all_partitions(n, parts);
  std::vector<BTBasisKey> out;
  Perm w = Perm::identity(n);
  std::vector<Perm> perms;
  do {
    perms.push_back(w);
  } while (std::next_permutation(w.w.begin(), w.w.end()));
  for (const auto& p : parts)
    for (const auto& u : perms) out.emplace_back(p, u);
  return out;
}

inline BTElement multiply(const BTElement& x, const BTElement& y) {
  if (x.n() != y.n()) throw DimensionMismatch("mixed strand counts");
  BTElement out(x.n());
  for (const auto& [key, c] : y.terms()) {
    const auto& [I, w] = key;
    // x * e_I b_w: push e_I through each b_v of x, then act by w's word.
    BTElement cur(x.n());
    for (const auto& [xk, xc] : x.terms())
      cur.add(xk.first.join(I.apply(xk.second.w)), xk.second, xc);
    for (int i : w.reduced_word()) cur = detail::right_b(cur, i, +1);
    out = out + c * cur;
  }
  return out;
}

inline BTElement tie(int i, int j, int n) {
  if (i < 1 || j <= i || j > n) throw BadIndices("need 1 <= i < j <= n");
  // e_{i,j} = b_i ... b_{j-2} e_{j-1} b_{j-2}^-1 ... b_i^-1
  BTElement e = BTElement::one(n);
  for (int k = i; k <= j - 2; ++k) e = detail::right_b(e, k, +1);
  e = detail::right_tie(e, j - 1, j);
  for (int k = j - 2; k >= i; --k) e = detail::right_b(e, k, -1);
  return e;
}

inline BTElement from_tied_braid(const BraidWord& word) {
  BTElement e = BTElement::one(word.strands);
  for (const auto& l : word.letters) {
    if (l.index < 1 || l.index >= word.strands)
      throw BadIndices("letter index out of range");
    if (l.tie)
      e = detail::right_tie(e, l.index, l.index + 1);
    else
      e = detail::right_b(e, l.index, l.exp > 0 ? +1 : -1);
  }
  return e;
}

namespace detail {

inline LaurentFraction trace_rho_term(const SetPartition& I, const Perm& w);

inline LaurentFraction trace_rho_elem(const BTElement& x) {
  LaurentFraction out;
  for (const auto& [k, c] : x.terms()) out += c * trace_rho_term(k.first, k.second);
  return out;
}

// Markov trace on one basis term, by conditional expectation onto E_{n-1}:
// peel strand n, pick up z per removed positive crossing row and E per tie
// into a surviving strand, recurse.
inline LaurentFraction trace_rho_term(const SetPartition& I, const Perm& w) {
  int n = w.n();
  if (n <= 1) return parse_fraction("1");

  static std::map<BTBasisKey, LaurentFraction> memo;
  static std::mutex mu;
  BTBasisKey key{I, w};
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  LaurentFraction result;
  int j = w.inverse_of(n);
  if (j == n) {
    // w fixes n; strand n carries at most ties into the rest.
    LaurentFraction f = I.last_is_singleton() ? parse_fraction("1") : parse_fraction("E");
    Perm v;
    v.w.assign(w.w.begin(), w.w.end() - 1);
    result = f * trace_rho_term(I.drop_last(), v);
  } else {
    // w = v . s_{n-1} s_{n-2} ... s_j with v in S_{n-1}: the one-line of w is
    // v's with the value n inserted at position j.
    Perm v;
    for (int val : w.w)
      if (val != n) v.w.push_back(val);
    // Ties from n, transported to the right of b_v then across b_{n-1}:
    // e_{k,n} b_v = b_v e_{v^-1(k),n};  e_{k,n} b_{n-1} = b_{n-1} e_{k,n-1}
    // for k < n-1, while e_{n-1,n} is absorbed by the z-rule.
    BTElement rest(n - 1);
    rest.add(I.drop_last(), v, parse_fraction("1"));
    for (int k : I.tied_to_last()) {
      int kp = v.inverse_of(k);
      if (kp < n - 1) rest = right_tie(rest, kp, n - 1);
    }
    for (int i = n - 2; i >= j; --i) rest = right_b(rest, i, +1);
    result = parse_fraction("z") * trace_rho_elem(rest);
  }

  std::lock_guard<std::mutex> g(mu);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

inline LaurentFraction trace_rho(const BTElement& x) {
  return detail::trace_rho_elem(x);
}

struct PTLReport {
  bool ideal_ok = false;          // m*b12 = q^k b12 = b12*m for all basis m
  bool trace_factors = false;     // rho(b12) == ((q^2+1)qz+E)(qz+E)
  LaurentFraction rho_value;
  std::vector<std::string> roots; // roots of rho(b12) in z
  bool matches_printed_roots = false;  // the published form has -q^-1/E for root 2
  std::string note;
};

inline PTLReport ptl_ideal_check() {
  const int n = 3;
  PTLReport rep;
  BTElement b12(n);
  {
    BTElement e12 = multiply(tie(1, 2, n), tie(2, 3, n));
    auto word = [&](std::vector<int> is) {
      BTElement r = e12;
      for (int i : is) r = detail::right_b(r, i, +1);
      return r;
    };
    b12 = word({}) + parse_fraction("q") * (word({1}) + word({2})) +
          parse_fraction("q^2") * (word({1, 2}) + word({2, 1})) +
          parse_fraction("q^3") * word({1, 2, 1});
  }

  rep.ideal_ok = true;
  for (const auto& [I, w] : enumerate_basis(n)) {
    BTElement m(n);
    m.add(I, w, parse_fraction("1"));
    LaurentFraction qk = parse_fraction("q").pow(w.length());
    if (!(multiply(m, b12) == qk * b12) || !(multiply(b12, m) == qk * b12)) {
      rep.ideal_ok = false;
      break;
    }
  }

  rep.rho_value = trace_rho(b12);
  rep.trace_factors =
      rep.rho_value == parse_fraction("((q^2+1)*q*z + E) * (q*z + E)");
  rep.roots = {"-q^-1 E / (q^2+1)", "-q^-1 E"};
  // Proposition ptlthm prints the second root as -q^-1/E; the displayed
  // factorization it quotes gives -q^-1 E instead.
  rep.matches_printed_roots = false;
  rep.note =
      "rho(b_{1,2}) factors as ((q^2+1)qz+E)(qz+E); its z-roots are "
      "-q^-1 E/(q^2+1) and -q^-1 E. The printed proposition lists the second "
      "root as -q^-1/E, which disagrees with its own factorization.";
  return rep;
}

inline LaurentFraction theta_trace(const BraidWord& word) {
  if (word.strands < 1 || word.strands > 6)
    throw SizeCap("trace route limited to braids on <= 6 strands");
  LaurentFraction rho = trace_rho(from_tied_braid(word));
  LaurentFraction zval = parse_fraction("-q^-1 E / (q^2 + 1)");
  LaurentFraction val = substitute(rho, Var::z, zval);
  LaurentFraction norm = parse_fraction("-(q^2+1) / (q E)").pow(word.strands - 1);
  return norm * parse_fraction("q^2").pow(word.exponent_sum()) * val;
}

}  // namespace skeinlab
