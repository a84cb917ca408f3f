#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "skeinlab/monomial.hpp"

namespace skeinlab {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};
struct OddExponent : std::domain_error {
  explicit OddExponent(const std::string& what) : std::domain_error(what) {}
};

// Multivariate Laurent polynomial with exact rational coefficients.
// Invariant: no zero coefficients are stored, so the term map is a canonical
// form and operator== decides equality.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  LaurentPoly() = default;
  /*implicit*/ LaurentPoly(long c) {
    if (c != 0) terms_[Monomial::one()] = c;
  }
  /*implicit*/ LaurentPoly(const mpq_class& c) {
    if (c != 0) terms_[Monomial::one()] = c;
  }
  LaurentPoly(const Monomial& m, const mpq_class& c) {
    if (c != 0) terms_[m] = c;
  }

  static LaurentPoly var(Var v, int e = 1) { return LaurentPoly(Monomial::var(v, e), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
  }
  size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly operator*(const mpq_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }
  LaurentPoly shifted(const Monomial& m) const {
    LaurentPoly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  LaurentPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly r(1), base(*this);
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const = default;

  // Lexicographically greatest monomial; poly must be nonzero.
  const Monomial& lead_monomial() const { return terms_.rbegin()->first; }
  const mpq_class& lead_coeff() const { return terms_.rbegin()->second; }

  // Componentwise minimum of all exponent vectors (the Laurent "monomial
  // content"); zero poly yields the unit.
  Monomial min_exponents() const {
    Monomial m;
    bool first = true;
    for (const auto& [mm, c] : terms_) {
      (void)c;
      if (first) {
        m = mm;
        first = false;
      } else {
        for (int i = 0; i < kNumVars; ++i) m.exp[i] = std::min(m.exp[i], mm.exp[i]);
      }
    }
    return m;
  }

  bool uses_var(Var v) const {
    for (const auto& [m, c] : terms_) {
      (void)c;
      if (m[v] != 0) return true;
    }
    return false;
  }

  int min_degree(Var v) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      (void)c;
      if (first || m[v] < d) d = m[v];
      first = false;
    }
    return d;
  }
  int max_degree(Var v) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      (void)c;
      if (first || m[v] > d) d = m[v];
      first = false;
    }
    return d;
  }

 private:
  Terms terms_;
};

// Exact division; throws if b does not divide a. Both operands must be
// ordinary polynomials in the sense that exactness is up to monomial units:
// common Laurent shifts are handled by the caller (fraction layer).
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  LaurentPoly rem = a, quot;
  while (!rem.is_zero()) {
    const Monomial lm = rem.lead_monomial();
    const Monomial& lb = b.lead_monomial();
    if (!lm.divisible_by(lb)) throw std::runtime_error("exact_divide: not exact");
    Monomial q = lm / lb;
    mpq_class c = rem.lead_coeff() / b.lead_coeff();
    quot.add_term(q, c);
    rem -= b.shifted(q) * c;
    if (!rem.is_zero() && rem.lead_monomial() >= lm)
      throw std::runtime_error("exact_divide: not exact");
  }
  return quot;
}

inline bool divides_exactly(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quot_out) {
  if (b.is_zero()) return false;
  LaurentPoly rem = a, quot;
  while (!rem.is_zero()) {
    const Monomial lm = rem.lead_monomial();
    const Monomial& lb = b.lead_monomial();
    if (!lm.divisible_by(lb)) return false;
    Monomial q = lm / lb;
    mpq_class c = rem.lead_coeff() / b.lead_coeff();
    quot.add_term(q, c);
    rem -= b.shifted(q) * c;
    if (!rem.is_zero() && rem.lead_monomial() >= lm) return false;
  }
  if (quot_out) *quot_out = quot;
  return true;
}

}  // namespace skeinlab
