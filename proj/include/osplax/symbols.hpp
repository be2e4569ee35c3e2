#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace osplax {

// Formal spectral-parameter symbols. x,y are the running spectral parameters,
// t drives renormalized limits, x1/x2/y1/y2 are the shift parameters of the
// non-degenerate families. They generate a commutative polynomial ring over
// the rationals; exponents may go negative transiently while a limit is
// being formed.
enum Sym : int {
  SymX = 0,
  SymY = 1,
  SymT = 2,
  SymX1 = 3,
  SymX2 = 4,
  SymY1 = 5,
  SymY2 = 6,
};
inline constexpr int kSymCount = 7;

inline const char* sym_name(int s) {
  static const char* names[kSymCount] = {"x", "y", "t", "x1", "x2", "y1", "y2"};
  return names[s];
}

struct Monomial {
  std::array<int8_t, kSymCount> e{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool is_one() const {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kSymCount; ++i) {
      int s = int(e[i]) + int(o.e[i]);
      if (s > 127 || s < -128) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = int8_t(s);
    }
    return r;
  }

  static Monomial one() { return Monomial{}; }

  static Monomial var(Sym s, int pow = 1) {
    Monomial m;
    m.e[int(s)] = int8_t(pow);
    return m;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < kSymCount; ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += " ";
      out += sym_name(i);
      if (e[i] != 1) out += "^" + std::to_string(int(e[i]));
    }
    return out;
  }
};

}  // namespace osplax
