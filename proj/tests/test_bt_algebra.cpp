#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/bt_algebra.hpp"
#include "skeinlab/theta.hpp"

using namespace skeinlab;

namespace {

BTElement gen_b(int i, int n) { return detail::right_b(BTElement::one(n), i, +1); }
BTElement gen_e(int i, int n) { return detail::right_tie(BTElement::one(n), i, i + 1); }

BTElement random_element(std::mt19937& rng, int n,
                         const std::vector<BTBasisKey>& basis) {
  static const LaurentFraction coeffs[] = {
      parse_fraction("1"), parse_fraction("-1"), parse_fraction("q"),
      parse_fraction("q - q^-1"), parse_fraction("2")};
  BTElement x(n);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    const auto& [p, w] = basis[rng() % basis.size()];
    x.add(p, w, coeffs[rng() % 5]);
  }
  return x;
}

BTElement embed(const BTElement& x, int n) {
  BTElement out(n);
  for (const auto& [k, c] : x.terms()) {
    SetPartition p = k.first;
    Perm w = k.second;
    while (p.n() < n) {
      p.rgs.push_back(*std::max_element(p.rgs.begin(), p.rgs.end()) + 1);
      w.w.push_back(w.n() + 1);
    }
    out.add(p, w, c);
  }
  return out;
}

BraidWord random_word(std::mt19937& rng, int strands, int letters) {
  BraidWord w;
  w.strands = strands;
  for (int i = 0; i < letters; ++i)
    w.letters.push_back({1 + static_cast<int>(rng() % (strands - 1)),
                         rng() % 2 ? 1 : -1, false});
  return w;
}

}  // namespace

TEST_CASE("basis enumeration") {
  CHECK(enumerate_basis(1).size() == 1);
  CHECK(enumerate_basis(2).size() == 4);
  CHECK(enumerate_basis(3).size() == 30);
  CHECK(enumerate_basis(4).size() == 360);
  CHECK(enumerate_basis(5).size() == 52 * 120);
  CHECK_THROWS_AS(enumerate_basis(7), SizeCap);

  // n=2: {1, e1, b1, e1 b1}
  auto b2 = enumerate_basis(2);
  BTElement sum(2);
  for (const auto& [p, w] : b2) sum.add(p, w, parse_fraction("1"));
  CHECK(sum == BTElement::one(2) + gen_e(1, 2) + gen_b(1, 2) +
                   multiply(gen_e(1, 2), gen_b(1, 2)));
}

TEST_CASE("defining relations") {
  auto qd = parse_fraction("q - q^-1");
  for (int n = 2; n <= 5; ++n) {
    auto one = BTElement::one(n);
    for (int i = 1; i < n; ++i) {
      auto bi = gen_b(i, n), ei = gen_e(i, n);
      CHECK(multiply(bi, bi) == one + qd * multiply(ei, bi));
      CHECK(multiply(ei, ei) == ei);
      CHECK(multiply(ei, bi) == multiply(bi, ei));
      for (int j = 1; j < n; ++j) {
        auto bj = gen_b(j, n), ej = gen_e(j, n);
        CHECK(multiply(ei, ej) == multiply(ej, ei));
        if (std::abs(i - j) > 1) {
          CHECK(multiply(bi, bj) == multiply(bj, bi));
          CHECK(multiply(ei, bj) == multiply(bj, ei));
        }
        if (std::abs(i - j) == 1) {
          CHECK(multiply(multiply(bi, bj), bi) == multiply(multiply(bj, bi), bj));
          CHECK(multiply(multiply(ei, ej), bi) == multiply(bi, multiply(ei, ej)));
          CHECK(multiply(multiply(ei, ej), bi) == multiply(ej, multiply(bi, ej)));
          CHECK(multiply(ei, multiply(bj, bi)) == multiply(multiply(bj, bi), ej));
        }
      }
    }
  }
}

TEST_CASE("associativity") {
  std::mt19937 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    auto basis = enumerate_basis(n);
    for (int t = 0; t < (n == 4 ? 34 : 33); ++t) {
      auto x = random_element(rng, n, basis);
      auto y = random_element(rng, n, basis);
      auto z = random_element(rng, n, basis);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("ties") {
  CHECK(tie(1, 2, 3) == gen_e(1, 3));
  CHECK(tie(2, 3, 3) == gen_e(2, 3));
  CHECK_THROWS_AS(tie(2, 2, 3), BadIndices);
  CHECK_THROWS_AS(tie(1, 4, 3), BadIndices);

  // e_{1,3} is the pure basis idempotent tying strands 1 and 3
  auto e13 = tie(1, 3, 3);
  BTElement expect(3);
  SetPartition p = SetPartition::discrete(3).join_pair(1, 3);
  expect.add(p, Perm::identity(3), parse_fraction("1"));
  CHECK(e13 == expect);
  CHECK(multiply(e13, e13) == e13);

  // transport: b_w e_{j,k} = e_{w(j),w(k)} b_w for random w
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    int n = 4;
    Perm w = Perm::identity(n);
    for (int s = 0; s < 6; ++s) std::shuffle(w.w.begin(), w.w.end(), rng);
    BTElement bw(n);
    bw.add(SetPartition::discrete(n), w, parse_fraction("1"));
    int j = 1 + static_cast<int>(rng() % n), k = 1 + static_cast<int>(rng() % n);
    if (j == k) continue;
    if (j > k) std::swap(j, k);
    int wj = std::min(w(j), w(k)), wk = std::max(w(j), w(k));
    CHECK(multiply(bw, tie(j, k, n)) == multiply(tie(wj, wk, n), bw));
  }
}

TEST_CASE("word images") {
  auto qd = parse_fraction("q - q^-1");
  BraidWord w1{2, {{1, 1, true}}};
  CHECK(from_tied_braid(w1) == gen_e(1, 2));
  BraidWord w2{2, {{1, 1, false}, {1, 1, false}}};
  CHECK(from_tied_braid(w2) ==
        BTElement::one(2) + qd * multiply(gen_e(1, 2), gen_b(1, 2)));
  BraidWord w3{2, {{1, 1, false}, {1, -1, false}}};
  CHECK(from_tied_braid(w3) == BTElement::one(2));
  BraidWord w4{3, {{1, -1, false}, {2, 1, false}, {1, 1, false}, {2, -1, false}}};
  CHECK(multiply(from_tied_braid(w4),
                 from_tied_braid({3, {{2, 1, false}, {1, -1, false},
                                      {2, -1, false}, {1, 1, false}}})) ==
        BTElement::one(3));
}

TEST_CASE("trace values") {
  CHECK(trace_rho(BTElement::one(3)) == parse_fraction("1"));
  CHECK(trace_rho(gen_b(1, 2)) == parse_fraction("z"));
  CHECK(trace_rho(gen_e(1, 2)) == parse_fraction("E"));

  auto e1e2b2 = multiply(multiply(gen_e(1, 3), gen_e(2, 3)), gen_b(2, 3));
  CHECK(trace_rho(e1e2b2) == parse_fraction("z E"));

  auto e1e2 = multiply(gen_e(1, 3), gen_e(2, 3));
  auto b1b2b1 = multiply(multiply(gen_b(1, 3), gen_b(2, 3)), gen_b(1, 3));
  CHECK(trace_rho(multiply(e1e2, b1b2b1)) ==
        parse_fraction("z E + (q - q^-1) z^2"));
}

TEST_CASE("trace properties") {
  std::mt19937 rng(99);
  for (int n = 2; n <= 4; ++n) {
    auto basis = enumerate_basis(n);
    int pairs = n == 4 ? 168 : 166;
    for (int t = 0; t < pairs; ++t) {
      auto x = random_element(rng, n, basis);
      auto y = random_element(rng, n, basis);
      CHECK(trace_rho(multiply(x, y)) == trace_rho(multiply(y, x)));
    }
  }
}

TEST_CASE("markov rules") {
  std::mt19937 rng(4242);
  for (int n = 3; n <= 5; ++n) {
    auto basis = enumerate_basis(n - 1);
    for (int t = 0; t < 20; ++t) {
      auto a = embed(random_element(rng, n - 1, basis), n);
      auto ra = trace_rho(a);
      CHECK(trace_rho(multiply(a, gen_b(n - 1, n))) == parse_fraction("z") * ra);
      CHECK(trace_rho(multiply(a, gen_e(n - 1, n))) == parse_fraction("E") * ra);
      CHECK(trace_rho(multiply(a, multiply(gen_e(n - 1, n), gen_b(n - 1, n)))) ==
            parse_fraction("z") * ra);
    }
    // embedding preserves the trace
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(rng, n - 1, basis);
      CHECK(trace_rho(embed(a, n)) == trace_rho(a));
    }
  }
}

TEST_CASE("ptl ideal") {
  auto rep = ptl_ideal_check();
  CHECK(rep.ideal_ok);
  CHECK(rep.trace_factors);
  CHECK(rep.rho_value ==
        parse_fraction("E^2 + 2 q z E + q^3 z E + q^2 z^2 + q^4 z^2"));
  CHECK(rep.roots.size() == 2);
  CHECK(!rep.matches_printed_roots);

  // Lemma instance: e_{1,3} b1 b2 b1 . b12 = q^3 b12
  BTElement m = tie(1, 3, 3);
  for (int i : {1, 2, 1}) m = detail::right_b(m, i, +1);
  BTElement b12(3);
  {
    auto e12 = multiply(tie(1, 2, 3), tie(2, 3, 3));
    auto word = [&](std::vector<int> is) {
      BTElement r = e12;
      for (int i : is) r = detail::right_b(r, i, +1);
      return r;
    };
    b12 = word({}) + parse_fraction("q") * (word({1}) + word({2})) +
          parse_fraction("q^2") * (word({1, 2}) + word({2, 1})) +
          parse_fraction("q^3") * word({1, 2, 1});
  }
  CHECK(multiply(m, b12) == parse_fraction("q^3") * b12);
}

TEST_CASE("theta via trace") {
  BraidWord empty2{2, {}};
  CHECK(theta_trace(empty2) == parse_fraction("-(q + q^-1) / (E)"));
  BraidWord unknot{2, {{1, 1, false}}};
  CHECK(theta_trace(unknot) == parse_fraction("1"));
  BraidWord trefoil{2, {{1, 1, false}, {1, 1, false}, {1, 1, false}}};
  CHECK(theta_trace(trefoil) == parse_fraction("-q^8 + q^6 + q^2"));
  BraidWord hopf{2, {{1, 1, false}, {1, 1, false}}};
  CHECK(theta_trace(hopf) ==
        parse_fraction("(-q^5 - q^3 + q^3 E - q E) / (E)"));

  BraidWord wide{7, {}};
  CHECK_THROWS_AS(theta_trace(wide), SizeCap);
}

TEST_CASE("trace route matches diagram routes") {
  // exhaustive on 3 strands up to 6 letters
  std::vector<BraidWord> frontier{{3, {}}};
  int checked = 0;
  for (int len = 0; len <= 6; ++len) {
    for (const auto& w : frontier) {
      CHECK(theta_trace(w) == theta_partition(braid_closure(w)));
      ++checked;
    }
    if (len == 6) break;
    std::vector<BraidWord> next;
    for (const auto& w : frontier)
      for (int idx : {1, 2})
        for (int e : {1, -1}) {
          BraidWord x = w;
          x.letters.push_back({idx, e, false});
          next.push_back(x);
        }
    frontier = std::move(next);
  }
  CHECK(checked == 5461);

  // random on 4 strands
  std::mt19937 rng(31337);
  for (int t = 0; t < 50; ++t) {
    auto w = random_word(rng, 4, 3 + static_cast<int>(rng() % 5));
    CHECK(theta_trace(w) == theta_partition(braid_closure(w)));
  }
}

TEST_CASE("markov moves on theta_trace") {
  std::mt19937 rng(555);
  for (int t = 0; t < 25; ++t) {
    auto a = random_word(rng, 3, 2 + static_cast<int>(rng() % 4));
    auto b = random_word(rng, 3, 1 + static_cast<int>(rng() % 3));
    BraidWord conj{3, {}};
    for (auto l : b.letters) conj.letters.push_back(l);
    for (auto l : a.letters) conj.letters.push_back(l);
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
      conj.letters.push_back({it->index, -it->exp, false});
    CHECK(theta_trace(conj) == theta_trace(a));

    BraidWord stab{4, a.letters};
    stab.letters.push_back({3, rng() % 2 ? 1 : -1, false});
    // positive and negative stabilization both preserve theta
    CHECK(theta_trace(stab) == theta_trace(a));
  }
}
