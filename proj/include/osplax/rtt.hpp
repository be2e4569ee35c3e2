#pragma once

#include <string>

#include "osplax/matrix.hpp"
#include "osplax/signature.hpp"

namespace osplax {

struct CheckReport {
  std::string check;
  std::string family;
  int n = 0, m = 0, a = -1;
  bool odd = false;
  std::string verdict = "pass";  // pass | fail | error | unverified
  std::string witness;           // first-failure entry indices and residual size
  long residual_terms = 0;
  double millis = 0;

  bool passed() const { return verdict == "pass"; }
};

// Componentwise RTT for the gl-type R-matrix: for all index tuples, the
// relation cleared of its (x-y) denominator must vanish identically. L is a
// matrix in the spectral symbol x (shift symbols may appear freely).
CheckReport check_rtt_gl(const SpectralMatrix& L);

// Componentwise RTT for the orthosymplectic R-matrix, cleared of denominators
// by (x-y)(x-y+kappa).
CheckReport check_rtt_osp(const SpectralMatrix& L, const SuperSignature& sig);

// Dispatch on the descriptor tag ("gl-*" vs everything else).
CheckReport check_rtt_componentwise(const SpectralMatrix& L, const SuperSignature* sig);

// Matrix-form tensor cross-check of the same RTT relation: lifts L to the
// two slots of V (x) V with the Remark (a) identification signs, lifts R via
// its e_ij (x) e_kl coefficients, and composes everything with the graded
// tensor product. Verdicts must agree with the componentwise form.
CheckReport check_rtt_tensor_gl(const SpectralMatrix& L);
CheckReport check_rtt_tensor_osp(const SpectralMatrix& L, const SuperSignature& sig);

// The two slot lifts used by the tensor check, exposed for direct testing:
// entry ((i,k),(j,l)) of the returned d^2-matrix is the coefficient of
// e_ij (x) e_kl in L (x) Id (slot 1) or Id (x) L (slot 2).
ElementMat tensor_lift(const SpectralMatrix& L, int slot);

// Graded composition of two lifted operators (pure-tensor coefficient
// arrays) over the given parity sequence.
ElementMat graded_compose(const ElementMat& A, const ElementMat& B,
                          const std::vector<int>& parity);

}  // namespace osplax
