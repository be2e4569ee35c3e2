#include "osplax/substitution.hpp"

namespace osplax {

void GeneratorSubstitution::set(Generator from, const Rational& scale, Generator to) {
  images_[from.key] = {scale, to.key};
}

AlgebraElement GeneratorSubstitution::apply(const AlgebraElement& e) const {
  AlgebraElement out;
  for (const auto& [t, c] : e.terms()) {
    Rational coeff = c;
    std::vector<uint32_t> w;
    w.reserve(t.w.g.size());
    for (auto k : t.w.g) {
      auto it = images_.find(k);
      if (it == images_.end()) {
        w.push_back(k);
      } else {
        coeff *= it->second.first;
        w.push_back(it->second.second);
      }
    }
    out.add_word(std::move(w), t.m, coeff);
  }
  return out;
}

GeneratorSubstitution::Verdict GeneratorSubstitution::verify() const {
  for (const auto& [k, img] : images_) {
    Generator g{k};
    if (!images_.count(g.partner().key))
      return {false, "domain not closed under pairing partner of " + g.str()};
  }
  for (const auto& [ka, ia] : images_) {
    for (const auto& [kb, ib] : images_) {
      Generator a{ka}, b{kb};
      AlgebraElement lhs =
          supercommutator(AlgebraElement::generator(a), AlgebraElement::generator(b));
      // lhs is a scalar (0 or 1) in the free oscillator algebra; a scalar is
      // fixed by the substitution.
      AlgebraElement rhs = supercommutator(apply(AlgebraElement::generator(a)),
                                           apply(AlgebraElement::generator(b)));
      if (!(lhs == rhs))
        return {false, "[" + a.str() + "," + b.str() + "] is not preserved: " + lhs.str() +
                           " vs " + rhs.str()};
    }
  }
  return {};
}

void GeneratorSubstitution::verify_or_throw() const {
  auto v = verify();
  if (!v.ok) throw HomomorphismError(v.violated);
}

GeneratorSubstitution negation_substitution(const std::vector<Generator>& gens) {
  GeneratorSubstitution s;
  for (auto g : gens) s.set(g, rat(-1), g);
  return s;
}

}  // namespace osplax
