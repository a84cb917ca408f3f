// Reconstructs a 15-crossing diagram of the Thistlethwaite link: two bands
// (annuli) clasped like a Hopf link, each band cut open with a rational
// tangle spliced in. Searches small tangle/sign variants for the diagram
// whose components are a trefoil and a figure-eight knot, with linking
// number zero and the Jones polynomial of the 2-component unlink.
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skeinlab/classical.hpp"
#include "skeinlab/theta.hpp"

using namespace skeinlab;

namespace {

struct Build {
  std::vector<int> uf;
  // crossing = four edge ids in counterclockwise order; over_diag selects
  // which diagonal (ends {0,2} or {1,3}) is the over strand
  struct Cr {
    std::array<int, 4> e;
    int over_diag;
  };
  std::vector<Cr> crs;

  int nu() {
    uf.push_back(static_cast<int>(uf.size()));
    return uf.back();
  }
  int find(int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }
  void unite(int a, int b) { uf[find(a)] = find(b); }
  void add(std::array<int, 4> e, int od) { crs.push_back({e, od}); }
};

// 2-string tangle under construction; port edge ids at the four corners
struct Tangle {
  int nw, ne, sw, se;
};

Tangle start_h(Build& B) {
  int a = B.nu(), b = B.nu();
  return {a, a, b, b};
}
Tangle start_v(Build& B) {
  int a = B.nu(), b = B.nu();
  return {a, b, a, b};
}

// twist the two east ports
Tangle op_r(Build& B, Tangle t, int s) {
  int nne = B.nu(), nse = B.nu();
  B.add({nne, t.ne, t.se, nse}, s > 0 ? 1 : 0);
  return {t.nw, nne, t.sw, nse};
}

// twist the two south ports
Tangle op_b(Build& B, Tangle t, int s) {
  int nsw = B.nu(), nse = B.nu();
  B.add({t.sw, nsw, nse, t.se}, s > 0 ? 0 : 1);
  return {t.nw, t.ne, nsw, nse};
}

struct Shape {
  bool vstart = false;
  std::vector<std::pair<char, int>> ops;  // ('r'|'b', sign)
  std::string label() const {
    std::string s = vstart ? "v" : "h";
    for (auto [c, g] : ops) {
      s += c;
      s += g > 0 ? '+' : '-';
    }
    return s;
  }
};

Tangle build_shape(Build& B, const Shape& sh) {
  Tangle t = sh.vstart ? start_v(B) : start_h(B);
  for (auto [c, g] : sh.ops) t = c == 'r' ? op_r(B, t, g) : op_b(B, t, g);
  return t;
}

// Assemble the doubled clasp with tangle slots. over1/over2: whether the
// y band is the over strand at the top/bottom clasp region.
std::string assemble(const Shape& st, const Shape& su, bool y_over1,
                     bool y_over2, bool* ok) {
  Build B;
  int a1 = B.nu(), b1 = B.nu(), p1 = B.nu(), q1 = B.nu();
  int a2 = B.nu(), a3 = B.nu(), a4 = B.nu(), a5 = B.nu();
  int b2 = B.nu(), b3 = B.nu(), b4 = B.nu(), b5 = B.nu();
  int p2 = B.nu(), p3 = B.nu(), p4 = B.nu(), p5 = B.nu();
  int q2 = B.nu(), q3 = B.nu(), q4 = B.nu(), q5 = B.nu();

  int od1 = y_over1 ? 1 : 0, od2 = y_over2 ? 1 : 0;
  // top clasp region: x rails run NW-SE, y rails NE-SW
  B.add({a1, p2, a2, p1}, od1);
  B.add({a2, q2, a3, q1}, od1);
  B.add({b1, p3, b2, p2}, od1);
  B.add({b2, q3, b3, q2}, od1);
  // bottom clasp region: x rails run NE-SW, y rails NW-SE
  B.add({a3, q4, a4, q5}, od2);
  B.add({a4, p4, a5, p5}, od2);
  B.add({b3, q3, b4, q4}, od2);
  B.add({b4, p3, b5, p4}, od2);

  // tangle slot in the x band (strands travel westward through it)
  Tangle t = build_shape(B, st);
  B.unite(t.ne, b5);
  B.unite(t.se, a5);
  B.unite(t.nw, b1);
  B.unite(t.sw, a1);
  // tangle slot in the y band (strands travel eastward)
  Tangle u = build_shape(B, su);
  B.unite(u.nw, q5);
  B.unite(u.sw, p5);
  B.unite(u.ne, q1);
  B.unite(u.se, p1);

  *ok = false;
  // canonical edge ids; every edge must occur exactly twice
  std::map<int, std::vector<std::pair<int, int>>> inc;
  for (int c = 0; c < static_cast<int>(B.crs.size()); ++c)
    for (int i = 0; i < 4; ++i) {
      B.crs[c].e[i] = B.find(B.crs[c].e[i]);
      inc[B.crs[c].e[i]].push_back({c, i});
    }
  for (auto& [e, v] : inc)
    if (v.size() != 2) return "";

  // planarity via Euler characteristic of the rotation system, assuming the
  // diagram is connected (it is: both bands pass through both clasp regions)
  {
    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (int c = 0; c < static_cast<int>(B.crs.size()); ++c)
      for (int i = 0; i < 4; ++i) {
        if (seen.count({c, i})) continue;
        ++faces;
        int cc = c, ii = i;
        while (!seen.count({cc, ii})) {
          seen.insert({cc, ii});
          int e = B.crs[cc].e[ii];
          auto& v = inc[e];
          auto [c2, i2] = v[0].first == cc && v[0].second == ii ? v[1] : v[0];
          cc = c2;
          ii = (i2 + 3) % 4;
        }
      }
    int n = static_cast<int>(B.crs.size());
    if (faces != n + 2) return "";
  }

  // orient every strand passage, then emit PD records
  int n = static_cast<int>(B.crs.size());
  std::vector<std::array<int, 4>> dir(n, {0, 0, 0, 0});  // 1 = in, -1 = out
  for (int c0 = 0; c0 < n; ++c0)
    for (int i0 = 0; i0 < 4; ++i0) {
      if (dir[c0][i0] != 0) continue;
      int cc = c0, ii = i0;
      while (dir[cc][ii] == 0) {
        dir[cc][ii] = 1;
        int out = (ii + 2) % 4;
        dir[cc][out] = -1;
        int e = B.crs[cc].e[out];
        auto& v = inc[e];
        auto [c2, i2] = v[0].first == cc && v[0].second == out ? v[1] : v[0];
        cc = c2;
        ii = i2;
      }
    }

  std::string pd;
  for (int c = 0; c < n; ++c) {
    int u0 = B.crs[c].over_diag == 0 ? 1 : 0;  // first under end
    int start = dir[c][u0] == 1 ? u0 : u0 + 2;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "X(%d,%d,%d,%d) ", B.crs[c].e[start] + 1,
                  B.crs[c].e[(start + 1) % 4] + 1, B.crs[c].e[(start + 2) % 4] + 1,
                  B.crs[c].e[(start + 3) % 4] + 1);
    pd += buf;
  }
  *ok = true;
  return pd;
}

std::vector<Shape> enumerate_shapes(int min_len, int max_len) {
  std::vector<Shape> out;
  std::vector<Shape> frontier{{false, {}}, {true, {}}};
  for (int len = 0; len <= max_len; ++len) {
    for (const auto& s : frontier)
      if (len >= min_len) out.push_back(s);
    std::vector<Shape> next;
    for (const auto& s : frontier)
      for (char c : {'r', 'b'})
        for (int g : {1, -1}) {
          Shape t = s;
          t.ops.push_back({c, g});
          next.push_back(t);
        }
    frontier = std::move(next);
  }
  return out;
}

// knot type of the component carrying the given tangle, via a clasp with the
// other slot left as a pair of plain strands
LaurentFraction component_jones(const Shape& sh, bool x_slot) {
  Shape trivial{false, {}};
  bool ok = false;
  std::string pd = assemble(x_slot ? sh : trivial, x_slot ? trivial : sh,
                            true, false, &ok);
  if (!ok) return LaurentFraction();
  LinkDiagram L = parse_pd(pd);
  // pick the component with crossings of its own
  for (int c = 0; c < L.n_components(); ++c) {
    LinkDiagram S = simplify(sublink(L, {c}));
    if (!S.crossings.empty()) return jones(S);
  }
  return parse_fraction("1");
}

}  // namespace

int main() {
  const LaurentFraction tref_l = parse_fraction("-q^-8 + q^-6 + q^-2");
  const LaurentFraction tref_r = parse_fraction("-q^8 + q^6 + q^2");
  const LaurentFraction fig8 = parse_fraction("q^-4 - q^-2 + 1 - q^2 + q^4");
  const LaurentFraction unlink2 = parse_fraction("-q - q^-1");

  std::vector<Shape> tref_shapes, fig8_shapes;
  for (const auto& sh : enumerate_shapes(3, 4)) {
    LaurentFraction v = component_jones(sh, true);
    if (v == tref_l || v == tref_r) tref_shapes.push_back(sh);
  }
  for (const auto& sh : enumerate_shapes(4, 4)) {
    LaurentFraction v = component_jones(sh, false);
    if (v == fig8) fig8_shapes.push_back(sh);
  }
  std::printf("trefoil slot shapes: %zu, figure-eight slot shapes: %zu\n",
              tref_shapes.size(), fig8_shapes.size());

  int hits = 0;
  for (const auto& st : tref_shapes)
    for (const auto& su : fig8_shapes)
      for (bool o1 : {false, true})
        for (bool o2 : {false, true}) {
          bool ok = false;
          std::string pd = assemble(st, su, o1, o2, &ok);
          if (!ok) continue;
          LinkDiagram L = parse_pd(pd);
          if (L.n_components() != 2) continue;
          if (L.total_linking() != 0) continue;
          if (!(jones(L) == unlink2)) continue;
          LaurentFraction v1 = jones(simplify(sublink(L, {0})));
          LaurentFraction v2 = jones(simplify(sublink(L, {1})));
          bool t1 = v1 == tref_l || v1 == tref_r;
          bool t2 = v2 == tref_l || v2 == tref_r;
          if (!((t1 && v2 == fig8) || (v1 == fig8 && t2))) continue;
          ++hits;
          std::printf("HIT T=%s U=%s o1=%d o2=%d\n  pd: %s\n  V(K1)=%s V(K2)=%s\n",
                      st.label().c_str(), su.label().c_str(), o1, o2,
                      pd.c_str(), to_string(v1).c_str(), to_string(v2).c_str());
          LaurentFraction th = theta_partition(L);
          LaurentFraction expect =
              parse_fraction("(1 - E^-1) * (q + q^-1)") * v1 * v2 + unlink2;
          std::printf("  theta matches closed expression: %s\n",
                      th == expect ? "yes" : "NO");
          if (hits >= 12) return 0;
        }
  std::printf("total hits: %d\n", hits);
  return hits > 0 ? 0 : 1;
}
