#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skeinlab {

// Fixed variable universe, in canonical order.
enum class Var : int { q = 0, E = 1, z = 2, s = 3, A = 4, t = 5 };

inline constexpr int kNumVars = 6;
inline constexpr const char* kVarNames[kNumVars] = {"q", "E", "z", "s", "A", "t"};

inline const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

inline Var var_from_name(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  throw std::invalid_argument("unknown variable: " + std::string(name));
}

// Exponent vector over the fixed variable universe. The zero vector is the
// unit monomial.
struct Monomial {
  std::array<int, kNumVars> exp{};

  static Monomial one() { return Monomial{}; }
  static Monomial var(Var v, int e = 1) {
    Monomial m;
    m.exp[static_cast<int>(v)] = e;
    return m;
  }

  int operator[](Var v) const { return exp[static_cast<int>(v)]; }
  int& operator[](Var v) { return exp[static_cast<int>(v)]; }

  bool is_one() const {
    for (int e : exp)
      if (e != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] - o.exp[i];
    return r;
  }
  Monomial pow(int k) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] * k;
    return r;
  }

  // True when every exponent of o is covered (o divides this in the
  // non-Laurent sense).
  bool divisible_by(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (exp[i] < o.exp[i]) return false;
    return true;
  }

  auto operator<=>(const Monomial& o) const = default;

  std::string str() const {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
      if (exp[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += kVarNames[i];
      if (exp[i] != 1) out += "^" + std::to_string(exp[i]);
    }
    return out.empty() ? "1" : out;
  }
};

}  // namespace skeinlab
