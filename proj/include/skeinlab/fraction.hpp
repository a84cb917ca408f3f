#pragma once

#include "skeinlab/gcd.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

// Ratio of Laurent polynomials in canonical form: numerator and denominator
// share no non-unit polynomial factor, the denominator has no monomial
// content, and its lex-greatest monomial has coefficient 1.
class LaurentFraction {
 public:
  LaurentFraction() : num_(), den_(1) {}
  /*implicit*/ LaurentFraction(long c) : num_(c), den_(1) {}
  /*implicit*/ LaurentFraction(const mpq_class& c) : num_(c), den_(1) {}
  /*implicit*/ LaurentFraction(const LaurentPoly& p) : num_(p), den_(1) {}
  LaurentFraction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    canonicalize();
  }

  static LaurentFraction var(Var v, int e = 1) { return LaurentFraction(LaurentPoly::var(v, e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
    return LaurentFraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
    if (b.is_zero()) throw DivisionByZero();
    return LaurentFraction(a.num_ * b.den_, a.den_ * b.num_);
  }
  LaurentFraction operator-() const {
    LaurentFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  LaurentFraction& operator+=(const LaurentFraction& o) { return *this = *this + o; }
  LaurentFraction& operator-=(const LaurentFraction& o) { return *this = *this - o; }
  LaurentFraction& operator*=(const LaurentFraction& o) { return *this = *this * o; }
  LaurentFraction& operator/=(const LaurentFraction& o) { return *this = *this / o; }

  LaurentFraction pow(int k) const {
    if (k == 0) return LaurentFraction(1);
    if (k < 0) {
      if (is_zero()) throw DivisionByZero();
      return LaurentFraction(den_.pow(-k), num_.pow(-k));
    }
    LaurentFraction r;
    r.num_ = num_.pow(k);
    r.den_ = den_.pow(k);
    r.canonicalize();  // scale normalization only; num/den stay coprime
    return r;
  }

  bool operator==(const LaurentFraction& o) const = default;

 private:
  void canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    // Move the denominator's monomial content into the numerator.
    Monomial shift = den_.min_exponents();
    if (!shift.is_one()) {
      den_ = den_.shifted(Monomial::one() / shift);
      num_ = num_.shifted(Monomial::one() / shift);
    }
    if (!den_.is_one()) {
      LaurentPoly g = laurent_gcd(num_, den_);
      if (!(g.size() == 1 && g.lead_monomial().is_one())) {
        Monomial nshift = num_.min_exponents();
        Monomial dshift = den_.min_exponents();
        num_ = exact_divide(num_.shifted(Monomial::one() / nshift), g).shifted(nshift);
        den_ = exact_divide(den_.shifted(Monomial::one() / dshift), g).shifted(dshift);
        shift = den_.min_exponents();
        if (!shift.is_one()) {
          den_ = den_.shifted(Monomial::one() / shift);
          num_ = num_.shifted(Monomial::one() / shift);
        }
      }
    }
    mpq_class lc = den_.lead_coeff();
    if (lc != 1) {
      mpq_class inv = 1 / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool canonical_eq(const LaurentFraction& a, const LaurentFraction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

// Every occurrence of `v` in `p` replaced by `value`.
inline LaurentFraction substitute(const LaurentFraction& p, Var v, const LaurentFraction& value) {
  auto subst_poly = [&](const LaurentPoly& poly) {
    LaurentFraction acc;
    for (const auto& [m, c] : poly.terms()) {
      Monomial rest = m;
      int e = rest[v];
      rest[v] = 0;
      LaurentFraction term(LaurentPoly(rest, c));
      if (e != 0) term *= value.pow(e);
      acc += term;
    }
    return acc;
  };
  return subst_poly(p.num()) / subst_poly(p.den());
}

enum class Rebase { AtoQ, QtoT, TtoQ };

// Variable-convention conversion: q = A^-2 and t = q^2.
inline LaurentPoly rebase(const LaurentPoly& p, Rebase rule) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    switch (rule) {
      case Rebase::AtoQ: {
        int e = r[Var::A];
        if (e % 2 != 0) throw OddExponent("rebase A->q: odd A-exponent " + std::to_string(e));
        r[Var::A] = 0;
        r[Var::q] += -e / 2;
        break;
      }
      case Rebase::QtoT: {
        // Half-integer t-powers are never stored: an odd q-exponent keeps one
        // factor of q alongside t^(e/2) (floor toward zero handled below).
        int e = r[Var::q];
        int half = (e >= 0 ? e / 2 : -((-e + 1) / 2));
        r[Var::q] = e - 2 * half;
        r[Var::t] += half;
        break;
      }
      case Rebase::TtoQ: {
        int e = r[Var::t];
        r[Var::t] = 0;
        r[Var::q] += 2 * e;
        break;
      }
    }
    out.add_term(r, c);
  }
  return out;
}

inline LaurentFraction rebase(const LaurentFraction& p, Rebase rule) {
  return LaurentFraction(rebase(p.num(), rule), rebase(p.den(), rule));
}

}  // namespace skeinlab
