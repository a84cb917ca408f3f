// Checks a candidate Thistlethwaite-link diagram against the four-step
// skein tree: switching two positive then two negative mixed crossings,
// with the intermediate smoothings required to produce specific knots.
#include <cstdio>
#include <string>
#include <vector>

#include "skeinlab/classical.hpp"
#include "skeinlab/theta.hpp"

using namespace skeinlab;

namespace {

LaurentFraction vk(const char* s) { return parse_fraction(s); }

bool dfs(const LinkDiagram& L, int depth, const std::vector<LaurentFraction>& ks,
         const LaurentFraction& split_v, std::vector<int>* path) {
  if (depth == 4) return jones(L) == split_v;
  int want_sign = depth < 2 ? 1 : -1;
  auto comp = L.component_of();
  for (int c = 0; c < static_cast<int>(L.crossings.size()); ++c) {
    if (L.crossings[c].sign != want_sign) continue;
    if (comp.at(L.crossings[c].a) == comp.at(L.crossings[c].over_in()))
      continue;  // mixed crossings only
    if (!(jones(resolve(L, c, ResolveMode::kSmooth)) == ks[depth])) continue;
    path->push_back(c);
    if (dfs(resolve(L, c, ResolveMode::kSwitch), depth + 1, ks, split_v, path))
      return true;
    path->pop_back();
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  std::string pd;
  for (int i = 1; i < argc; ++i) {
    pd += argv[i];
    pd += ' ';
  }
  std::vector<LaurentFraction> ks = {
      vk("-1 + q^-14 - 2 q^-12 + 3 q^-10 - 4 q^-8 + 4 q^-6 - 4 q^-4 + 3 q^-2 + q^2"),
      vk("1 - q^-18 + 3 q^-16 - 4 q^-14 + 5 q^-12 - 6 q^-10 + 5 q^-8 - 4 q^-6 + 3 q^-4 - q^-2"),
      vk("1 - q^-18 + 2 q^-16 - 3 q^-14 + 4 q^-12 - 4 q^-10 + 4 q^-8 - 3 q^-6 + 2 q^-4 - q^-2"),
      vk("-1 - q^-12 + 2 q^-10 - 2 q^-8 + 3 q^-6 - 3 q^-4 + 2 q^-2 + q^2")};
  LaurentFraction split_v =
      vk("q^-13 - q^-11 - q^-7 + q^-3 - q^-1 - q^3");

  LinkDiagram L = parse_pd(pd);
  std::vector<int> path;
  if (dfs(L, 0, ks, split_v, &path)) {
    std::printf("tree MATCH, crossings:");
    for (int c : path) std::printf(" %d", c);
    std::printf("\n");
    return 0;
  }
  std::printf("no match\n");
  return 1;
}
