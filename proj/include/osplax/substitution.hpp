#pragma once

#include <map>
#include <string>

#include "osplax/algebra.hpp"

namespace osplax {

struct HomomorphismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator substitution sending each generator of the declared domain to a
// scalar multiple of a generator; generators outside the domain are fixed.
// Applying it rewrites a word factor by factor (left to right) and
// re-normalizes, so reordering signs come out of the kernel. verify() checks
// that the map preserves all pairwise supercommutators on its domain, i.e.
// that it is a candidate algebra homomorphism.
class GeneratorSubstitution {
 public:
  void set(Generator from, const Rational& scale, Generator to);

  struct Verdict {
    bool ok = true;
    std::string violated;  // description of the first violated relation
  };
  Verdict verify() const;

  // Throws HomomorphismError if verify() fails.
  void verify_or_throw() const;

  AlgebraElement apply(const AlgebraElement& e) const;

  size_t domain_size() const { return images_.size(); }

 private:
  std::map<uint32_t, std::pair<Rational, uint32_t>> images_;
};

// The sign flip g -> -g on every generator appearing in `gens` (a
// homomorphism for any generator set closed under partners).
GeneratorSubstitution negation_substitution(const std::vector<Generator>& gens);

}  // namespace osplax
