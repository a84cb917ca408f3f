#include <random>

#include "doctest.h"
#include "skeinlab/theta.hpp"

using namespace skeinlab;

namespace {

BraidWord braid(int strands, std::initializer_list<int> word) {
  BraidWord w;
  w.strands = strands;
  for (int g : word) w.letters.push_back({g < 0 ? -g : g, g < 0 ? -1 : 1, false});
  return w;
}

BraidWord random_braid(std::mt19937& rng, int max_strands = 4, int max_len = 8) {
  std::uniform_int_distribution<int> nstr(2, max_strands), len(1, max_len), coin(0, 1);
  BraidWord w;
  w.strands = nstr(rng);
  int l = len(rng);
  std::uniform_int_distribution<int> gen(1, w.strands - 1);
  for (int i = 0; i < l; ++i) w.letters.push_back({gen(rng), coin(rng) ? 1 : -1, false});
  return w;
}

LaurentFraction F(const std::string& s) { return parse_fraction(s); }

}  // namespace

TEST_CASE("ek") {
  CHECK(ek(1) == F("1"));
  CHECK(ek(2) == F("E^-1 - 1"));
  CHECK(ek(3) == F("E^-1 - 1") * F("E^-1 - 2"));
}

TEST_CASE("theta on small links") {
  // knots: theta = V
  for (auto word : {std::initializer_list<int>{1, 1, 1}, {-1, -1, -1}}) {
    LinkDiagram K = braid_closure(braid(2, word));
    CHECK(theta_partition(K) == jones(K));
    CHECK(theta_skein(K) == jones(K));
  }
  LinkDiagram unlink2 = braid_closure(braid(2, {}));
  CHECK(theta_partition(unlink2) == F("(-q - q^-1) * E^-1"));
  CHECK(theta_skein(unlink2) == F("(-q - q^-1) * E^-1"));
  CHECK(theta_skein(unlink2, SplitNormalization::kPrinted) == F("E^-1"));

  LinkDiagram hopf = braid_closure(braid(2, {1, 1}));
  LaurentFraction expected = F("-(q^5 + q^3) * E^-1 + q^3 - q");
  CHECK(theta_skein(hopf) == expected);
  CHECK(theta_partition(hopf) == expected);
}

TEST_CASE("oracle equivalence: skein vs partition on 200 random closures") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    LinkDiagram L = braid_closure(random_braid(rng));
    CHECK(theta_skein(L) == theta_partition(L));
  }
}

TEST_CASE("specialization ladder") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    LinkDiagram L = braid_closure(random_braid(rng));
    LaurentFraction th = theta_partition(L);
    LaurentFraction Th = Theta_partition(L);
    CHECK(substitute(th, Var::E, F("1")) == jones(L));
    CHECK(substitute(theta_skein(L), Var::E, F("1")) == jones(L));
    CHECK(substitute(Th, Var::s, F("q^2")) == th);
    CHECK(substitute(Th, Var::E, F("1")) == homflypt(L));
  }
}

TEST_CASE("theta at E = 1/d is a Laurent polynomial") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    LinkDiagram L = braid_closure(random_braid(rng));
    LaurentFraction th = theta_skein(L);
    for (int d = 1; d <= 4; ++d) {
      LaurentFraction td = substitute(th, Var::E, F("1").pow(0) * LaurentFraction(mpq_class(1, d)));
      CHECK(td.is_poly());
    }
  }
}

TEST_CASE("split unions of knots: telescoped terminal") {
  std::mt19937 rng(808);
  std::vector<BraidWord> knots;
  knots.push_back(braid(2, {1, 1, 1}));
  knots.push_back(braid(2, {-1, -1, -1}));
  knots.push_back(braid(3, {1, -2, 1, -2}));
  knots.push_back(braid(1, {}));
  for (int r = 2; r <= 4; ++r) {
    BraidWord all;
    all.strands = 0;
    LaurentFraction vprod(1);
    for (int i = 0; i < r; ++i) {
      const BraidWord& k = knots[static_cast<size_t>(i)];
      for (auto l : k.letters) {
        l.index += all.strands;
        all.letters.push_back(l);
      }
      all.strands += k.strands;
      vprod = vprod * jones(braid_closure(k));
    }
    LaurentFraction expected = F("-q - q^-1").pow(r - 1) *
                               LaurentFraction(LaurentPoly(1).shifted(Monomial::var(Var::E, 1 - r))) *
                               vprod;
    LinkDiagram L = braid_closure(all);
    CHECK(theta_partition(L) == expected);
    CHECK(theta_skein(L) == expected);
  }
  (void)rng;
}

TEST_CASE("mixed-crossing skein identity") {
  std::mt19937 rng(606);
  static const LaurentFraction qq = F("q - q^-1");
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    LinkDiagram L = braid_closure(random_braid(rng));
    auto comp = L.component_of();
    for (size_t c = 0; c < L.crossings.size(); ++c) {
      if (comp.at(L.crossings[c].a) == comp.at(L.crossings[c].over_in())) continue;
      LinkDiagram sw = resolve(L, c, ResolveMode::kSwitch);
      LinkDiagram sm = resolve(L, c, ResolveMode::kSmooth);
      const LinkDiagram& Lp = L.crossings[c].sign > 0 ? L : sw;
      const LinkDiagram& Lm = L.crossings[c].sign > 0 ? sw : L;
      CHECK(F("q^-2") * theta_skein(Lp) - F("q^2") * theta_skein(Lm) == qq * theta_skein(sm));
      ++checked;
      break;
    }
  }
  CHECK(checked == 25);
}

TEST_CASE("theta invariance under Markov moves and relabeling") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 8; ++trial) {
    BraidWord w = random_braid(rng, 3, 6);
    LinkDiagram L = braid_closure(w);
    LaurentFraction th = theta_skein(L);

    BraidWord stab = w;
    stab.strands += 1;
    stab.letters.push_back({w.strands, 1, false});
    CHECK(theta_skein(braid_closure(stab)) == th);

    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    int g = gen(rng);
    BraidWord conj = w;
    conj.letters.insert(conj.letters.begin(), {g, -1, false});
    conj.letters.push_back({g, 1, false});
    CHECK(theta_skein(braid_closure(conj)) == th);

    // relabeling via PD round trip permutes component indices; the partition
    // sum must not care
    bool free_loop = false;
    for (const auto& piece : split(L))
      if (piece.crossings.empty()) free_loop = true;
    if (!L.crossings.empty() && !free_loop)
      CHECK(theta_partition(parse_pd(to_pd_text(L))) == theta_partition(L));
  }
}

TEST_CASE("compare") {
  LinkDiagram hopf = braid_closure(braid(2, {1, 1}));
  LinkDiagram unlink2 = braid_closure(braid(2, {}));
  CompareReport same = compare(hopf, hopf);
  CHECK(same.v_equal);
  CHECK(same.p_equal);
  CHECK(same.theta_equal);
  CompareReport diff = compare(hopf, unlink2);
  CHECK(!diff.v_equal);
  CHECK(!diff.theta_equal);
}
