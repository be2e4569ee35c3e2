#include "osplax/algebra.hpp"

#include <algorithm>
#include <utility>

namespace osplax {

std::string Word::str() const {
  std::string out;
  for (auto k : g) {
    if (!out.empty()) out += " ";
    Generator gen;
    gen.key = k;
    out += gen.str();
  }
  return out;
}

AlgebraElement AlgebraElement::constant(Rational c) {
  AlgebraElement e;
  e.add_term(Term{}, c);
  return e;
}

AlgebraElement AlgebraElement::symbol(Sym s, int pow) {
  AlgebraElement e;
  e.add_term(Term{Word{}, Monomial::var(s, pow)}, rat(1));
  return e;
}

AlgebraElement AlgebraElement::monomial(const Monomial& m, Rational c) {
  AlgebraElement e;
  e.add_term(Term{Word{}, m}, c);
  return e;
}

AlgebraElement AlgebraElement::generator(Generator g) {
  AlgebraElement e;
  e.add_term(Term{Word{{g.key}}, Monomial::one()}, rat(1));
  return e;
}

void AlgebraElement::add_term(Term t, const Rational& c) {
  if (osplax::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(std::move(t), c);
  if (!inserted) {
    it->second += c;
    if (osplax::is_zero(it->second)) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (osplax::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

namespace {

inline bool fermionic(uint32_t key) { return (key & 1) != 0; }

// Position of the first adjacent pair violating normal order, or -1.
// A pair (u,v) violates iff u > v in the canonical key order (creators sort
// below annihilators, so this also covers annihilator-before-creator).
inline int first_violation(const std::vector<uint32_t>& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) return int(i);
  return -1;
}

}  // namespace

void AlgebraElement::add_word(std::vector<uint32_t> w, const Monomial& m, const Rational& c) {
  if (osplax::is_zero(c)) return;
  // Worklist rewriting: swap out-of-order neighbours with the graded sign;
  // an annihilator stepping over its pairing partner also emits the
  // contracted word.
  std::vector<std::pair<std::vector<uint32_t>, Rational>> work;
  work.emplace_back(std::move(w), c);
  while (!work.empty()) {
    auto [cur, coeff] = std::move(work.back());
    work.pop_back();
    int pos = first_violation(cur);
    if (pos < 0) {
      // Sorted: a fermionic generator appearing twice makes the word zero.
      bool dead = false;
      for (size_t i = 0; i + 1 < cur.size(); ++i)
        if (cur[i] == cur[i + 1] && fermionic(cur[i])) {
          dead = true;
          break;
        }
      if (!dead) add_term(Term{Word{std::move(cur)}, m}, coeff);
      continue;
    }
    Generator u{cur[size_t(pos)]}, v{cur[size_t(pos) + 1]};
    if (u.kind() == Kind::Annihilation && v.kind() == Kind::Creation && contracts(u, v)) {
      std::vector<uint32_t> contracted;
      contracted.reserve(cur.size() - 2);
      contracted.insert(contracted.end(), cur.begin(), cur.begin() + pos);
      contracted.insert(contracted.end(), cur.begin() + pos + 2, cur.end());
      work.emplace_back(std::move(contracted), coeff);
    }
    std::swap(cur[size_t(pos)], cur[size_t(pos) + 1]);
    Rational sign = (u.parity() && v.parity()) ? rat(-1) : rat(1);
    work.emplace_back(std::move(cur), coeff * sign);
  }
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      std::vector<uint32_t> w;
      w.reserve(ta.w.g.size() + tb.w.g.size());
      w.insert(w.end(), ta.w.g.begin(), ta.w.g.end());
      w.insert(w.end(), tb.w.g.begin(), tb.w.g.end());
      out.add_word(std::move(w), ta.m * tb.m, ca * cb);
    }
  }
  return out;
}

std::optional<int> AlgebraElement::parity() const {
  std::optional<int> p;
  for (const auto& [t, c] : terms_) {
    int wp = t.w.parity();
    if (!p)
      p = wp;
    else if (*p != wp)
      return std::nullopt;
  }
  return p ? p : std::optional<int>(0);
}

AlgebraElement AlgebraElement::rename_symbol(Sym from, Sym to) const {
  AlgebraElement out;
  for (const auto& [t, c] : terms_) {
    Monomial m = t.m;
    int d = m.e[int(from)];
    if (d != 0) {
      m.e[int(from)] = 0;
      int s = int(m.e[int(to)]) + d;
      if (s > 127 || s < -128) throw std::overflow_error("monomial exponent overflow");
      m.e[int(to)] = int8_t(s);
    }
    out.add_term(Term{t.w, m}, c);
  }
  return out;
}

AlgebraElement AlgebraElement::eval_symbol(Sym s, const Rational& value) const {
  AlgebraElement out;
  for (const auto& [t, c] : terms_) {
    Monomial m = t.m;
    int d = m.e[int(s)];
    if (d < 0) throw std::domain_error("cannot evaluate negative power");
    m.e[int(s)] = 0;
    Rational v = c;
    for (int k = 0; k < d; ++k) v *= value;
    out.add_term(Term{t.w, m}, v);
  }
  return out;
}

AlgebraElement AlgebraElement::shift_symbol_degree(Sym s, int power) const {
  AlgebraElement out;
  for (const auto& [t, c] : terms_) {
    Monomial m = t.m;
    int d = int(m.e[int(s)]) + power;
    if (d > 127 || d < -128) throw std::overflow_error("monomial exponent overflow");
    m.e[int(s)] = int8_t(d);
    out.add_term(Term{t.w, m}, c);
  }
  return out;
}

int AlgebraElement::max_degree(Sym s) const {
  int d = 0;
  for (const auto& [t, c] : terms_) d = std::max(d, int(t.m.e[int(s)]));
  return d;
}

AlgebraElement AlgebraElement::coefficient_of(Sym s, int degree) const {
  AlgebraElement out;
  for (const auto& [t, c] : terms_) {
    if (int(t.m.e[int(s)]) != degree) continue;
    Monomial m = t.m;
    m.e[int(s)] = 0;
    out.add_term(Term{t.w, m}, c);
  }
  return out;
}

bool AlgebraElement::depends_on(Sym s) const {
  for (const auto& [t, c] : terms_)
    if (t.m.e[int(s)] != 0) return true;
  return false;
}

bool AlgebraElement::has_symbols() const {
  for (const auto& [t, c] : terms_)
    if (!t.m.is_one()) return true;
  return false;
}

bool AlgebraElement::is_scalar() const {
  for (const auto& [t, c] : terms_)
    if (!t.w.empty()) return false;
  return true;
}

AlgebraElement AlgebraElement::project_copy2_vacuum() const {
  AlgebraElement out;
  for (const auto& [t, c] : terms_) {
    bool has_copy2 = false;
    for (auto k : t.w.g) {
      Generator g{k};
      if (g.copy() == 2) {
        has_copy2 = true;
        break;
      }
    }
    if (!has_copy2) out.add_term(t, c);
  }
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    if (!out.empty()) out += "  +  ";
    out += to_string(c);
    if (!t.m.is_one()) out += " " + t.m.str();
    if (!t.w.empty()) out += " " + t.w.str();
  }
  return out;
}

AlgebraElement supercommutator(const AlgebraElement& a, const AlgebraElement& b) {
  auto pa = a.parity(), pb = b.parity();
  if (!pa || !pb) throw ParityError("supercommutator of inhomogeneous element");
  AlgebraElement r = a * b;
  AlgebraElement ba = b * a;
  if (*pa && *pb)
    r += ba;
  else
    r -= ba;
  return r;
}

AlgebraElement conjugate_by_exponential(const AlgebraElement& T, const AlgebraElement& X,
                                        int max_depth) {
  auto pt = T.parity();
  if (!pt || *pt != 0) throw ParityError("conjugation requires a parity-even exponent");
  AlgebraElement acc = X;
  AlgebraElement cur = X;
  for (int k = 1; k <= max_depth; ++k) {
    // T is even, so ad_T is the plain commutator on arbitrary elements.
    cur = T * cur - cur * T;
    if (cur.is_zero()) return acc;
    cur *= Rational(1, k);
    acc += cur;
  }
  throw TruncationError("adjoint series did not truncate within max_depth");
}

}  // namespace osplax
