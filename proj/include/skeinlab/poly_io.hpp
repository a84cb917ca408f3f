#pragma once

#include <cctype>
#include <string>

#include "skeinlab/fraction.hpp"

namespace skeinlab {

inline std::string coeff_str(const mpq_class& c) {
  return c.get_str();  // "a" or "a/b"
}

// Terms in descending canonical monomial order, exponents as q^-3,
// coefficients as integers or a/b.
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class a = abs(c);
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    if (m.is_one())
      out += coeff_str(a);
    else if (a == 1)
      out += m.str();
    else
      out += coeff_str(a) + "*" + m.str();
  }
  return out;
}

inline std::string to_string(const LaurentFraction& f) {
  if (f.is_poly()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentFraction parse_fraction() {
    LaurentPoly num = parse_poly();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      LaurentPoly den = parse_group();
      skip_ws();
      if (pos_ != s_.size()) throw ParseError("trailing input: " + std::string(s_.substr(pos_)));
      return LaurentFraction(num, den);
    }
    if (pos_ != s_.size()) throw ParseError("trailing input: " + std::string(s_.substr(pos_)));
    return LaurentFraction(num);
  }

 private:
  LaurentPoly parse_group() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      LaurentPoly p = parse_poly();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'");
      ++pos_;
      return p;
    }
    return parse_poly();
  }

  LaurentPoly parse_poly() {
    LaurentPoly p;
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      LaurentPoly t = parse_term();
      p += (sign < 0) ? -t : t;
      first = false;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    if (first) throw ParseError("empty polynomial");
    return p;
  }

  LaurentPoly parse_term() {
    skip_ws();
    LaurentPoly p(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      p = LaurentPoly(parse_rational());
      any = true;
    }
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '(') {
        // Parenthesized factor, e.g. (q-q^-1)*E.
        ++pos_;
        LaurentPoly inner = parse_poly();
        skip_ws();
        if (peek() != ')') throw ParseError("expected ')'");
        ++pos_;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = parse_int();
          if (e < 0) throw ParseError("negative exponent on a parenthesized factor");
        }
        p *= inner.pow(e);
        any = true;
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(peek()))) break;
      Var v = var_from_name(std::string_view(&s_[pos_], 1));
      ++pos_;
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int();
      }
      p = p.shifted(Monomial::var(v, e));
      any = true;
    }
    if (!any) throw ParseError("expected term");
    return p;
  }

  mpq_class parse_rational() {
    std::string digits = parse_digits();
    skip_ws();
    // A '/' introduces a rational coefficient only when followed by digits;
    // otherwise it separates numerator and denominator polynomials.
    size_t save = pos_;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string den = parse_digits();
        mpq_class r(digits + "/" + den);
        r.canonicalize();
        return r;
      }
      pos_ = save;
    }
    return mpq_class(digits);
  }

  int parse_int() {
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    std::string d = parse_digits();
    return sign * std::stoi(d);
  }

  std::string parse_digits() {
    skip_ws();
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    if (d.empty()) throw ParseError("expected digits");
    return d;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline LaurentFraction parse_fraction(std::string_view text) {
  return detail::PolyParser(text).parse_fraction();
}

inline LaurentPoly parse_poly(std::string_view text) {
  LaurentFraction f = parse_fraction(text);
  if (!f.is_poly()) throw ParseError("expected a polynomial, got a fraction");
  return f.num();
}

}  // namespace skeinlab
