#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osplax/generator.hpp"
#include "osplax/rational.hpp"
#include "osplax/symbols.hpp"

namespace osplax {

struct ParityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A normal-ordered word: all creators precede all annihilators, each block
// sorted by the canonical generator key. The empty word is the unit.
struct Word {
  std::vector<uint32_t> g;

  friend auto operator<=>(const Word& a, const Word& b) {
    return a.g <=> b.g;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.g == b.g; }

  bool empty() const { return g.empty(); }
  int parity() const {
    int p = 0;
    for (auto k : g) p ^= int(k & 1);
    return p;
  }
  std::string str() const;
};

struct Term {
  Word w;
  Monomial m;
  friend auto operator<=>(const Term&, const Term&) = default;
};

// Exact linear combination of normal-ordered superoscillator words with
// polynomial coefficients in the spectral symbols. Canonical form is unique:
// equality of elements is equality of the term maps.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement constant(Rational c);
  static AlgebraElement constant(long c) { return constant(rat(c)); }
  static AlgebraElement symbol(Sym s, int pow = 1);
  static AlgebraElement monomial(const Monomial& m, Rational c = rat(1));
  static AlgebraElement generator(Generator g);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Term, Rational>& terms() const { return terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement r = a;
    r *= rat(-1);
    return r;
  }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) {
    a *= c;
    return a;
  }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
    a *= c;
    return a;
  }
  // Product in canonical normal-ordered form: each annihilator is moved right
  // past creators via xy = (-1)^{|x||y|} yx + [x,y], with [x,y] the pairing
  // delta. Total operation, bilinear over coefficients.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  // Z2 parity if all words share it (the zero element counts as even),
  // nullopt for an inhomogeneous element.
  std::optional<int> parity() const;

  AlgebraElement rename_symbol(Sym from, Sym to) const;
  AlgebraElement eval_symbol(Sym s, const Rational& value) const;
  // Multiply by s^power (power may be negative; used by scaled limits).
  AlgebraElement shift_symbol_degree(Sym s, int power) const;
  int max_degree(Sym s) const;
  AlgebraElement coefficient_of(Sym s, int degree) const;
  bool depends_on(Sym s) const;
  bool has_symbols() const;
  bool is_scalar() const;  // no oscillator words

  // Drops every term whose word contains a copy-2 generator: the copy-2
  // Fock-vacuum expectation of a normal-ordered element.
  AlgebraElement project_copy2_vacuum() const;

  std::string str() const;

  // Adds c * m * normalize(w) where w need not be normal-ordered.
  void add_word(std::vector<uint32_t> w, const Monomial& m, const Rational& c);

 private:
  void add_term(Term t, const Rational& c);
  std::map<Term, Rational> terms_;
};

// lhs*rhs - (-1)^{|lhs||rhs|} rhs*lhs; both arguments must be homogeneous.
AlgebraElement supercommutator(const AlgebraElement& a, const AlgebraElement& b);

// Sum_{k=0..K} ad_T^k(X)/k! where K is the first index with ad_T^{K+1}(X)=0.
// Throws TruncationError if the adjoint series does not terminate within
// max_depth (a non-nilpotent adjoint action such as T = abar*a), and
// ParityError if T is not parity-even.
AlgebraElement conjugate_by_exponential(const AlgebraElement& T, const AlgebraElement& X,
                                        int max_depth = 64);

}  // namespace osplax
