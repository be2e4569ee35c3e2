#pragma once

#include <gmpxx.h>

#include <string>

namespace osplax {

// Exact arbitrary-precision rational coefficients. Every identity checked by
// this library is an exact polynomial identity; floats would mask sign errors.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace osplax
