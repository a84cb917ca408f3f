#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab {

struct MalformedRecord : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentEdgeCount : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrientationConflict : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TieLettersPresent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptySubset : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownCrossing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edges (a,b,c,d) counterclockwise starting from the incoming under-edge;
// the under-strand runs a -> c. Positive crossings have the over-strand
// running d -> b, negative ones b -> d.
struct Crossing {
  int a, b, c, d;
  int sign;

  int slot(int i) const { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
  int& slot(int i) { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
  int over_in() const { return sign > 0 ? d : b; }
  int over_out() const { return sign > 0 ? b : d; }
};

class LinkDiagram {
 public:
  std::vector<Crossing> crossings;
  std::map<int, int> next;  // successor edge along the orientation

  int n_components() const { return static_cast<int>(component_cycles().size()); }

  // Cycles of `next`, ordered by smallest edge; defines component indexing.
  std::vector<std::vector<int>> component_cycles() const {
    std::vector<std::vector<int>> cycles;
    std::set<int> seen;
    for (const auto& [e, s] : next) {
      (void)s;
      if (seen.count(e)) continue;
      std::vector<int> cyc;
      int x = e;
      do {
        cyc.push_back(x);
        seen.insert(x);
        x = next.at(x);
      } while (x != e);
      cycles.push_back(std::move(cyc));
    }
    // map iteration starts each cycle at its smallest edge, and cycles are
    // discovered in increasing order of that edge, so the order is canonical
    return cycles;
  }

  std::map<int, int> component_of() const {
    std::map<int, int> comp;
    auto cycles = component_cycles();
    for (size_t i = 0; i < cycles.size(); ++i)
      for (int e : cycles[i]) comp[e] = static_cast<int>(i);
    return comp;
  }

  int writhe() const {
    int w = 0;
    for (const auto& x : crossings) w += x.sign;
    return w;
  }

  // lk(i,j) = half the signed sum over crossings between components i and j.
  std::vector<std::vector<int>> linking_matrix() const {
    int n = n_components();
    auto comp = component_of();
    std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
    for (const auto& x : crossings) {
      int cu = comp.at(x.a), co = comp.at(x.over_in());
      if (cu != co) {
        twice[cu][co] += x.sign;
        twice[co][cu] += x.sign;
      }
    }
    for (auto& row : twice)
      for (auto& v : row) v /= 2;
    return twice;
  }

  int total_linking() const {
    auto lk = linking_matrix();
    int s = 0;
    for (size_t i = 0; i < lk.size(); ++i)
      for (size_t j = i + 1; j < lk.size(); ++j) s += lk[i][j];
    return s;
  }
};

struct BraidLetter {
  int index;  // generator index i in [1, strands-1]
  int exp;    // +1 or -1; ignored for ties
  bool tie = false;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  int exponent_sum() const {
    int e = 0;
    for (const auto& l : letters)
      if (!l.tie) e += l.exp;
    return e;
  }
  bool has_ties() const {
    for (const auto& l : letters)
      if (l.tie) return true;
    return false;
  }
};

// Whitespace-separated letters: s<i>, s<i>^<k> (k may be negative), e<i> for
// ties. Strand count is max generator index + 1 unless `strands` forces more.
inline BraidWord parse_braid(const std::string& text, int strands = 1) {
  BraidWord w;
  w.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool tie = tok[0] == 'e';
    if (tok[0] != 's' && !tie)
      throw MalformedRecord("bad braid letter: " + tok);
    size_t caret = tok.find('^');
    int idx, exp = 1;
    try {
      idx = std::stoi(tok.substr(1, caret - 1));
      if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw MalformedRecord("bad braid letter: " + tok);
    }
    if (idx < 1) throw MalformedRecord("bad braid letter: " + tok);
    if (tie && caret != std::string::npos)
      throw MalformedRecord("ties take no exponent: " + tok);
    w.strands = std::max(w.strands, idx + 1);
    if (tie)
      w.letters.push_back({idx, 1, true});
    else
      for (int r = 0; r < std::abs(exp); ++r)
        w.letters.push_back({idx, exp < 0 ? -1 : 1, false});
  }
  return w;
}

namespace detail {

inline void set_succ(std::map<int, int>& next, int from, int to) {
  auto [it, inserted] = next.emplace(from, to);
  if (!inserted && it->second != to)
    throw OrientationConflict("edge " + std::to_string(from) +
                              " has two distinct successors");
}

}  // namespace detail

// Parse whitespace-separated X(a,b,c,d) records. Orientation of over-strands
// is inferred from the sequential edge numbering (wraparound per component).
inline LinkDiagram parse_pd(const std::string& text) {
  struct Rec {
    int a, b, c, d;
  };
  std::vector<Rec> recs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'X') throw MalformedRecord("expected 'X' at offset " + std::to_string(i));
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw MalformedRecord("expected '(' after X");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    int vals[4];
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw MalformedRecord("expected edge number in X record");
      vals[k] = std::stoi(text.substr(start, i - start));
      if (vals[k] <= 0) throw MalformedRecord("edge numbers must be positive");
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] == close)
          throw MalformedRecord("X record needs four edges");
      }
    }
    if (i >= text.size() || text[i] != close) throw MalformedRecord("unterminated X record");
    ++i;
    recs.push_back({vals[0], vals[1], vals[2], vals[3]});
    skip_ws();
  }
  if (recs.empty()) throw MalformedRecord("no X records in input");

  std::map<int, int> uses;
  for (const auto& r : recs)
    for (int e : {r.a, r.b, r.c, r.d}) ++uses[e];
  for (const auto& [e, n] : uses)
    if (n != 2)
      throw InconsistentEdgeCount("edge " + std::to_string(e) + " used " +
                                  std::to_string(n) + " times");

  LinkDiagram L;
  std::map<int, int>& next = L.next;
  // Each edge enters a crossing exactly once and leaves one exactly once.
  std::set<int> in_used, out_used;
  for (const auto& r : recs) {
    detail::set_succ(next, r.a, r.c);
    if (!in_used.insert(r.a).second)
      throw OrientationConflict("edge " + std::to_string(r.a) + " enters two crossings");
    if (!out_used.insert(r.c).second)
      throw OrientationConflict("edge " + std::to_string(r.c) + " leaves two crossings");
  }

  // Over-strand directions: propagate the one-in/one-out constraint from the
  // forced under-strands; only then fall back to the sequential-numbering
  // reading (consecutive edges, else wraparound from a component's max to
  // its min) for strands every appearance of which is an over-slot.
  std::vector<int> sign(recs.size(), 0);
  auto decide = [&](size_t i, int s) {
    const Rec& r = recs[i];
    int oin = s > 0 ? r.d : r.b;
    int oout = s > 0 ? r.b : r.d;
    if (in_used.count(oin) || out_used.count(oout))
      throw OrientationConflict("over-strand direction clashes at record " + std::to_string(i));
    detail::set_succ(next, oin, oout);
    in_used.insert(oin);
    out_used.insert(oout);
    sign[i] = s;
  };
  bool progress = true;
  size_t undecided = recs.size();
  while (progress && undecided > 0) {
    progress = false;
    for (size_t i = 0; i < recs.size(); ++i) {
      if (sign[i]) continue;
      const Rec& r = recs[i];
      if (r.b == r.d) throw OrientationConflict("over-strand uses one edge twice");
      // positive means d enters and b leaves here, so d consumed as an
      // in-slot elsewhere (or b as an out-slot) rules it out, and vice versa
      bool force_pos = in_used.count(r.b) || out_used.count(r.d);
      bool force_neg = in_used.count(r.d) || out_used.count(r.b);
      if (force_pos && force_neg)
        throw OrientationConflict("over-strand over-constrained at record " + std::to_string(i));
      if (force_pos || force_neg) {
        decide(i, force_pos ? +1 : -1);
        --undecided;
        progress = true;
      }
    }
    if (!progress && undecided > 0) {
      // free choice left: pin one crossing by the numbering heuristic
      for (size_t i = 0; i < recs.size(); ++i) {
        if (sign[i]) continue;
        const Rec& r = recs[i];
        int s;
        if (r.b == r.d + 1)
          s = +1;
        else if (r.d == r.b + 1)
          s = -1;
        else
          s = r.b < r.d ? +1 : -1;
        decide(i, s);
        --undecided;
        progress = true;
        break;
      }
    }
  }
  for (size_t i = 0; i < recs.size(); ++i)
    L.crossings.push_back({recs[i].a, recs[i].b, recs[i].c, recs[i].d, sign[i]});

  // `next` must be a permutation of the edge set.
  std::map<int, int> indeg;
  for (const auto& [e, s] : next) {
    (void)e;
    ++indeg[s];
  }
  if (next.size() != uses.size()) throw OrientationConflict("orientation left edges unassigned");
  for (const auto& [e, n] : uses) {
    (void)n;
    if (!next.count(e) || indeg[e] != 1)
      throw OrientationConflict("edge " + std::to_string(e) + " breaks orientation cycles");
  }
  return L;
}

// Trace closure of a braid word; strands run downward, sigma_i^[+1] takes the
// strand at position i under the strand at position i+1.
inline LinkDiagram braid_closure(const BraidWord& w) {
  if (w.has_ties()) throw TieLettersPresent("tied braids have no diagram closure");
  if (w.strands < 1) throw MalformedRecord("braid needs at least one strand");
  LinkDiagram L;
  int n = w.strands;
  std::vector<int> cur(n);
  for (int j = 0; j < n; ++j) cur[j] = j + 1;
  int fresh = n + 1;
  for (const auto& l : w.letters) {
    if (l.index < 1 || l.index >= n) throw MalformedRecord("generator index out of range");
    int i = l.index - 1;
    int x = cur[i], y = cur[i + 1];
    int u = fresh++, v = fresh++;
    if (l.exp > 0) {
      // under x->v, over y->u
      L.crossings.push_back({x, u, v, y, +1});
      detail::set_succ(L.next, x, v);
      detail::set_succ(L.next, y, u);
    } else {
      // under y->u, over x->v
      L.crossings.push_back({y, x, u, v, -1});
      detail::set_succ(L.next, y, u);
      detail::set_succ(L.next, x, v);
    }
    cur[i] = u;
    cur[i + 1] = v;
  }
  // Close the braid: the bottom edge of strand j is the top edge of strand j.
  std::map<int, int> rename;
  for (int j = 0; j < n; ++j)
    if (cur[j] != j + 1) rename[cur[j]] = j + 1;
  if (!rename.empty()) {
    auto rn = [&](int e) {
      auto it = rename.find(e);
      return it == rename.end() ? e : it->second;
    };
    for (auto& x : L.crossings) {
      x.a = rn(x.a);
      x.b = rn(x.b);
      x.c = rn(x.c);
      x.d = rn(x.d);
    }
    std::map<int, int> nn;
    for (const auto& [e, s] : L.next) nn[rn(e)] = rn(s);
    L.next = std::move(nn);
  }
  for (int j = 0; j < n; ++j)
    if (!L.next.count(j + 1)) L.next[j + 1] = j + 1;  // untouched strand: free loop
  return L;
}

// Delete all crossings touching components outside S and splice the retained
// strands through them.
inline LinkDiagram sublink(const LinkDiagram& L, const std::set<int>& S) {
  if (S.empty()) throw EmptySubset("sublink of no components");
  auto comp = L.component_of();
  LinkDiagram R;
  R.next = L.next;
  std::map<int, int> alias;  // spliced edge -> surviving edge
  auto find = [&](int e) {
    while (alias.count(e)) e = alias[e];
    return e;
  };
  auto splice = [&](int in, int out) {
    in = find(in);
    out = find(out);
    if (in == out) {  // strand closes onto itself: a crossing-free circle
      R.next[in] = in;
      return;
    }
    R.next[in] = R.next[out];
    R.next.erase(out);
    alias[out] = in;
  };
  for (const auto& x : L.crossings) {
    bool under_in = S.count(comp.at(x.a)) > 0;
    bool over_in = S.count(comp.at(x.over_in())) > 0;
    if (under_in && over_in) continue;  // kept below
    if (under_in) splice(x.a, x.c);
    if (over_in) splice(x.over_in(), x.over_out());
  }
  for (const auto& x : L.crossings) {
    if (!S.count(comp.at(x.a)) || !S.count(comp.at(x.over_in()))) continue;
    Crossing y = x;
    for (int i = 0; i < 4; ++i) y.slot(i) = find(y.slot(i));
    R.crossings.push_back(y);
  }
  for (auto& [e, s] : R.next) {
    (void)e;
    s = find(s);  // successor values may point at spliced-away edges
  }
  // drop edges of removed components
  for (const auto& [e, c] : comp)
    if (!S.count(c)) R.next.erase(e);
  return R;
}

enum class ResolveMode { kSwitch, kSmooth };

inline LinkDiagram resolve(const LinkDiagram& L, size_t c, ResolveMode mode) {
  if (c >= L.crossings.size()) throw UnknownCrossing("crossing index out of range");
  LinkDiagram R = L;
  Crossing& x = R.crossings[c];
  if (mode == ResolveMode::kSwitch) {
    // over/under exchange; orientations and connectivity are untouched
    if (x.sign > 0)
      x = {x.d, x.a, x.b, x.c, -1};
    else
      x = {x.b, x.c, x.d, x.a, +1};
    return R;
  }
  // Oriented smoothing: reconnect incoming edges to the outgoing edges that
  // preserve orientation, then drop the crossing.
  if (x.sign > 0) {
    R.next[x.a] = x.b;
    R.next[x.d] = x.c;
  } else {
    R.next[x.a] = x.d;
    R.next[x.b] = x.c;
  }
  R.crossings.erase(R.crossings.begin() + static_cast<long>(c));
  return R;
}

// Connected pieces of the diagram (crossing incidence plus edge cycles).
inline std::vector<LinkDiagram> split(const LinkDiagram& L) {
  auto comp = L.component_of();
  int n = L.n_components();
  // union components sharing a crossing
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (const auto& x : L.crossings) {
    int i = find(comp.at(x.a)), j = find(comp.at(x.over_in()));
    if (i != j) parent[i] = j;
  }
  std::map<int, std::set<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].insert(i);
  std::vector<LinkDiagram> pieces;
  for (const auto& [root, g] : groups) {
    (void)root;
    pieces.push_back(sublink(L, g));
  }
  return pieces;
}

// Remove reducible kinks (Reidemeister I). Crossing-free circles survive as
// explicit one-edge cycles.
inline LinkDiagram simplify(const LinkDiagram& L) {
  LinkDiagram R = L;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < R.crossings.size(); ++i) {
      const Crossing& x = R.crossings[i];
      // A kink repeats one edge between an under-slot and an over-slot; the
      // strand then runs pin -> loop -> pout through this crossing alone.
      int loop, pin, pout;
      if (x.a == x.over_out()) {
        loop = x.a;
        pin = x.over_in();
        pout = x.c;
      } else if (x.c == x.over_in()) {
        loop = x.c;
        pin = x.a;
        pout = x.over_out();
      } else {
        continue;
      }
      R.next[pin] = pin == pout ? pin : pout;  // 1-crossing unknot becomes a bare circle
      if (loop != pin) R.next.erase(loop);
      R.crossings.erase(R.crossings.begin() + static_cast<long>(i));
      changed = true;
      break;
    }
  }
  return R;
}

namespace detail {

// Canonical serialization of one connected diagram, minimized over the
// choice of starting edge.
inline std::string connected_key(const LinkDiagram& L) {
  std::vector<int> edges;
  for (const auto& [e, s] : L.next) {
    (void)s;
    edges.push_back(e);
  }
  std::string best;
  for (int start : edges) {
    std::map<int, int> label;
    int counter = 0;
    auto label_cycle = [&](int e) {
      int x = e;
      do {
        label[x] = counter++;
        x = L.next.at(x);
      } while (x != e);
    };
    label_cycle(start);
    std::vector<bool> done(L.crossings.size(), false);
    for (size_t processed = 0; processed < L.crossings.size(); ++processed) {
      // next crossing: smallest labelled-slot tuple (unlabelled = infinity)
      long bestScore = -1;
      size_t pick = 0;
      for (size_t i = 0; i < L.crossings.size(); ++i) {
        if (done[i]) continue;
        long score = 1 << 30;
        for (int k = 0; k < 4; ++k) {
          auto it = label.find(L.crossings[i].slot(k));
          if (it != label.end()) score = std::min(score, static_cast<long>(it->second));
        }
        if (bestScore < 0 || score < bestScore) {
          bestScore = score;
          pick = i;
        }
      }
      done[pick] = true;
      for (int k = 0; k < 4; ++k) {
        int e = L.crossings[pick].slot(k);
        if (!label.count(e)) label_cycle(e);
      }
    }
    if (label.size() != edges.size()) continue;  // disconnected; caller splits first
    std::vector<std::string> rows;
    for (const auto& x : L.crossings) {
      std::string r = std::to_string(label[x.a]) + "," + std::to_string(label[x.b]) + "," +
                      std::to_string(label[x.c]) + "," + std::to_string(label[x.d]) +
                      (x.sign > 0 ? "+" : "-");
      rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    std::string key;
    for (const auto& r : rows) key += r + ";";
    if (best.empty() || key < best) best = key;
  }
  if (best.empty()) best = "O" + std::to_string(L.next.size()) + ";";  // bare circles
  return best;
}

}  // namespace detail

// Equal up to edge/crossing relabeling => equal keys.
inline std::string canonical_key(const LinkDiagram& L) {
  std::vector<std::string> keys;
  for (const auto& piece : split(L)) {
    if (piece.crossings.empty())
      keys.push_back("O;");  // a bare circle, regardless of oversegmentation
    else
      keys.push_back(detail::connected_key(piece));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + "|";
  return out;
}

// Serialize to PD text. Edges are renumbered sequentially along each
// component so the orientation heuristic of parse_pd recovers the diagram.
inline std::string to_pd_text(const LinkDiagram& L) {
  // coalesce oversegmented arcs: an edge ends at a crossing iff it sits in an
  // in-slot; otherwise it merges with its successor
  std::set<int> in_slots;
  for (const auto& x : L.crossings) {
    in_slots.insert(x.a);
    in_slots.insert(x.over_in());
  }
  std::map<int, int> arc_of;  // edge -> representative arc id (its in-slot edge)
  for (const auto& [e, s] : L.next) {
    (void)s;
    if (arc_of.count(e)) continue;
    int x = e;
    while (!in_slots.count(x)) {
      x = L.next.at(x);
      if (x == e) throw MalformedRecord("crossing-free component has no PD form");
    }
    // x is the last segment of the arc; walk again marking
    int y = e;
    arc_of[y] = x;
    while (y != x) {
      y = L.next.at(y);
      arc_of[y] = x;
    }
  }
  // successor map on arcs
  std::map<int, int> arc_next;
  for (int e : in_slots) arc_next[e] = arc_of.at(L.next.at(e));
  // sequential numbering along each arc cycle
  std::map<int, int> num;
  int counter = 1;
  for (const auto& [e, s] : arc_next) {
    (void)s;
    if (num.count(e)) continue;
    int x = e;
    do {
      num[x] = counter++;
      x = arc_next.at(x);
    } while (x != e);
  }
  std::string out;
  for (const auto& x : L.crossings) {
    out += "X(" + std::to_string(num.at(arc_of.at(x.a))) + "," +
           std::to_string(num.at(arc_of.at(x.b))) + "," + std::to_string(num.at(arc_of.at(x.c))) +
           "," + std::to_string(num.at(arc_of.at(x.d))) + ") ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace skeinlab
