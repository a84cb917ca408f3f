#pragma once

#include <algorithm>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace detail {

// Univariate view of a poly in the main variable `v`: coefficients are polys
// in the remaining variables, indexed by degree 0..deg. Input must have
// non-negative exponents in v.
inline std::vector<LaurentPoly> univariate_view(const LaurentPoly& p, Var v) {
  std::vector<LaurentPoly> coeffs(static_cast<size_t>(p.max_degree(v)) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int d = rest[v];
    rest[v] = 0;
    coeffs[static_cast<size_t>(d)].add_term(rest, c);
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

inline LaurentPoly from_univariate(const std::vector<LaurentPoly>& coeffs, Var v) {
  LaurentPoly p;
  for (size_t d = 0; d < coeffs.size(); ++d)
    p += coeffs[d].shifted(Monomial::var(v, static_cast<int>(d)));
  return p;
}

inline LaurentPoly poly_gcd_impl(LaurentPoly a, LaurentPoly b);

// gcd of rational coefficients: gcd of numerators over lcm of denominators.
// Keeps pseudo-remainder sequences numerically primitive.
inline mpq_class rational_content(const LaurentPoly& p) {
  mpz_class num = 0, den = 1;
  for (const auto& [m, c] : p.terms()) {
    (void)m;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    num = g;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (num == 0) return 1;
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline void strip_rational_content(std::vector<LaurentPoly>& coeffs) {
  LaurentPoly all;
  mpz_class num = 0, den = 1;
  for (const auto& p : coeffs)
    for (const auto& [m, c] : p.terms()) {
      (void)m;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
      num = g;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
  if (num == 0) return;
  mpq_class r(den, num);  // inverse of the content
  r.canonicalize();
  for (auto& p : coeffs) p = p * r;
}

// GCD of the univariate coefficient list (the content with respect to the
// main variable).
inline LaurentPoly coeff_content(const std::vector<LaurentPoly>& coeffs) {
  LaurentPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd_impl(g, c);
    if (g.size() == 1 && g.lead_monomial().is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable v (both as univariate coefficient
// lists, b nonzero).
inline std::vector<LaurentPoly> pseudo_rem(std::vector<LaurentPoly> a,
                                           const std::vector<LaurentPoly>& b) {
  const LaurentPoly& lb = b.back();
  while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
    size_t shift = a.size() - b.size();
    LaurentPoly la = a.back();
    for (size_t i = 0; i + 1 < a.size(); ++i) a[i] = a[i] * lb;
    for (size_t i = 0; i < b.size() - 1; ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
  }
  if (a.empty()) a.emplace_back();
  return a;
}

inline void strip_rational_content(LaurentPoly& p) {
  std::vector<LaurentPoly> one{std::move(p)};
  strip_rational_content(one);
  p = std::move(one[0]);
}

// --- Heuristic gcd (GCDHEU): evaluate one variable at a large integer,
// recurse, reconstruct the polynomial xi-adically, verify by division.
// Inputs must have integer coefficients; result is correct whenever the
// function returns true.

inline mpz_class coeff_height(const LaurentPoly& p) {
  mpz_class h = 0;
  for (const auto& [m, c] : p.terms()) {
    (void)m;
    mpz_class a = abs(c.get_num());
    if (a > h) h = a;
  }
  return h;
}

inline LaurentPoly eval_var(const LaurentPoly& p, Var v, const mpz_class& xi) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(m[v]));
    Monomial rest = m;
    rest[v] = 0;
    r.add_term(rest, c * mpq_class(pw));
  }
  return r;
}

inline mpz_class balanced_mod(const mpz_class& z, const mpz_class& xi) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), xi.get_mpz_t());  // r in [0, xi)
  if (2 * r > xi) r -= xi;
  return r;
}

// xi-adic reconstruction of g from h = g(v = xi).
inline bool heu_interp(LaurentPoly h, Var v, const mpz_class& xi, LaurentPoly& g) {
  g = LaurentPoly();
  for (int d = 0; !h.is_zero(); ++d) {
    if (d > 512) return false;
    LaurentPoly gd;
    for (const auto& [m, c] : h.terms()) {
      mpz_class r = balanced_mod(c.get_num(), xi);
      if (r != 0) gd.add_term(m, mpq_class(r));
    }
    g += gd.shifted(Monomial::var(v, d));
    h -= gd;
    LaurentPoly h2;
    for (const auto& [m, c] : h.terms()) h2.add_term(m, mpq_class(c.get_num() / xi));
    h = std::move(h2);
  }
  return true;
}

inline bool gcd_heuristic_pp(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& g);

// gcd over Z, integer content included: the content is the channel through
// which the evaluated image of the gcd survives the recursion.
inline bool gcd_heuristic_z(LaurentPoly a, LaurentPoly b, LaurentPoly& g) {
  if (a.is_zero()) { g = std::move(b); return true; }
  if (b.is_zero()) { g = std::move(a); return true; }
  mpq_class ca = rational_content(a), cb = rational_content(b);
  a = a * (1 / ca);
  b = b * (1 / cb);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_num().get_mpz_t(), cb.get_num().get_mpz_t());
  LaurentPoly p;
  if (!gcd_heuristic_pp(a, b, p)) return false;
  g = p * mpq_class(c);
  return true;
}

// gcd of integer-primitive polynomials: evaluate one variable at a large
// integer, recurse, reconstruct xi-adically, verify by division. Primitive
// parts keep accidental integer factors of the evaluations out of the
// candidate (Gauss: for primitive operands Q-divisibility equals
// Z-divisibility).
inline bool gcd_heuristic_pp(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& g) {
  Var v = Var::q;
  bool found = false;
  for (int i = 0; i < kNumVars && !found; ++i) {
    v = static_cast<Var>(i);
    if (a.uses_var(v) || b.uses_var(v)) found = true;
  }
  if (!found) {
    g = LaurentPoly(1);
    return true;
  }

  mpz_class ha = coeff_height(a), hb = coeff_height(b);
  mpz_class xi = 2 * (ha < hb ? ha : hb) + 29;
  int max_deg = std::max(a.max_degree(v), b.max_degree(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<size_t>(max_deg + 1) > 200000)
      return false;
    LaurentPoly h;
    if (gcd_heuristic_z(eval_var(a, v, xi), eval_var(b, v, xi), h)) {
      LaurentPoly cand;
      if (!h.is_zero() && heu_interp(h, v, xi, cand) && !cand.is_zero()) {
        strip_rational_content(cand);
        if (divides_exactly(cand, a, nullptr) && divides_exactly(cand, b, nullptr)) {
          g = std::move(cand);
          return true;
        }
      }
    }
    xi = xi * 73794 / 27011;  // irrational-ish growth avoids repeating bad points
  }
  return false;
}

// gcd of ordinary polynomials (non-negative exponents), up to a rational
// constant. Tries cheap shortcuts and the heuristic gcd first; falls back to
// a primitive pseudo-remainder sequence.
inline LaurentPoly poly_gcd_impl(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  Var v = Var::q;
  bool found = false;
  for (int i = 0; i < kNumVars && !found; ++i) {
    v = static_cast<Var>(i);
    if (a.uses_var(v) || b.uses_var(v)) found = true;
  }
  if (!found) return LaurentPoly(1);  // both rational constants

  // Monomial operand: the gcd is the common monomial divisor.
  if (a.size() == 1 || b.size() == 1) {
    Monomial ma = a.min_exponents(), mb = b.min_exponents();
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.exp[i] = std::min(ma.exp[i], mb.exp[i]);
    LaurentPoly r;
    r.add_term(m, 1);
    return r;
  }

  strip_rational_content(a);
  strip_rational_content(b);
  if (a == b) return a;
  if (divides_exactly(b, a, nullptr)) return b;
  if (divides_exactly(a, b, nullptr)) return a;

  LaurentPoly g;
  if (gcd_heuristic_pp(a, b, g)) return g;

  auto ua = univariate_view(a, v);
  auto ub = univariate_view(b, v);
  LaurentPoly ca = coeff_content(ua);
  LaurentPoly cb = coeff_content(ub);
  LaurentPoly content_gcd = poly_gcd_impl(ca, cb);

  for (auto& c : ua) c = c.is_zero() ? c : exact_divide(c, ca);
  for (auto& c : ub) c = c.is_zero() ? c : exact_divide(c, cb);
  strip_rational_content(ua);
  strip_rational_content(ub);

  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (!(ub.size() == 1 && ub[0].is_zero())) {
    auto r = pseudo_rem(ua, ub);
    ua = std::move(ub);
    ub = std::move(r);
    if (!(ub.size() == 1 && ub[0].is_zero())) {
      LaurentPoly c = coeff_content(ub);
      for (auto& x : ub) x = x.is_zero() ? x : exact_divide(x, c);
      strip_rational_content(ub);
    }
  }
  LaurentPoly c = coeff_content(ua);
  for (auto& x : ua) x = x.is_zero() ? x : exact_divide(x, c);
  strip_rational_content(ua);
  return content_gcd * from_univariate(ua, v);
}

}  // namespace detail

// GCD of Laurent polynomials, defined up to monomial units: the result is an
// ordinary polynomial, primitive in its monomial content, with lex-leading
// coefficient 1.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  LaurentPoly pa = a.is_zero() ? a : a.shifted(Monomial::one() / a.min_exponents());
  LaurentPoly pb = b.is_zero() ? b : b.shifted(Monomial::one() / b.min_exponents());
  LaurentPoly g = detail::poly_gcd_impl(pa, pb);
  g = g.shifted(Monomial::one() / g.min_exponents());
  mpq_class lc = g.lead_coeff();
  return g * (1 / lc);
}

}  // namespace skeinlab
