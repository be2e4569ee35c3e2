#pragma once

#include <string>
#include <vector>

#include "osplax/matrix.hpp"
#include "osplax/signature.hpp"

namespace osplax {

enum class RKind { Gl, Osp };

// A rational-polynomial operator on V (x) V in one spectral symbol, stored as
// its action matrix: column (j,l) holds the image of v_j (x) v_l. All graded
// signs of the P and Q actions are baked into the entries, so composition of
// these even operators is plain matrix multiplication.
struct ROperator {
  int d = 0;  // dim V
  RKind kind = RKind::Osp;
  std::vector<int> parity;  // of V
  ElementMat m;             // d^2 x d^2

  int idx(int i, int k) const { return (i - 1) * d + k; }
};

// Permutation operator: v_j (x) v_l -> (-1)^{|j||l|} v_l (x) v_j.
ROperator build_P(const std::vector<int>& parity);
// Q of the orthosymplectic R-matrix, built from its explicit action.
ROperator build_Q(const SuperSignature& sig);
// Cross-check construction of Q from the e_ij (x) e_{i'j'} sum with graded
// action signs; equals build_Q (verified in tests at (N,m)=(2,1)).
ROperator build_Q_from_sum(const SuperSignature& sig);

// gl: x Id + P on an arbitrary parity sequence; osp: x(x+kappa) Id +
// (x+kappa) P - x Q. `spectral` is the polynomial substituted for x.
ROperator build_R_gl(const std::vector<int>& parity, const AlgebraElement& spectral);
ROperator build_R_osp(const SuperSignature& sig, const AlgebraElement& spectral);

struct ResidualReport {
  bool ok = true;
  std::string witness;   // first nonzero residual entry
  long residual_terms = 0;
};

// Yang-Baxter equation R12(x) R13(x+y) R23(y) = R23(y) R13(x+y) R12(x) as an
// exact polynomial identity on V (x) V (x) V. The builder callback produces
// R(spectral) for this check's three arguments.
template <class BuildR>
ResidualReport check_ybe(const std::vector<int>& parity, BuildR&& build);

ResidualReport check_ybe(const SuperSignature& sig);        // osp kind
ResidualReport check_ybe_gl(const std::vector<int>& parity);  // gl kind
ResidualReport check_ybe_custom(const ROperator& Rx, const ROperator& Rxy,
                                const ROperator& Ry);

// [R(x), J (x) J] = 0 with the graded lift of J (x) J (plain Kronecker for an
// even scalar J).
ResidualReport check_invariance(const ROperator& R, const ScalarMat& J);

// Invariance matrices of the lemmas.
ScalarMat build_J_theta(const SuperSignature& sig);
ScalarMat build_J_tilde(const SuperSignature& sig);
ScalarMat build_J_hat_theta(const SuperSignature& sig);
ScalarMat build_Id_theta(const SuperSignature& sig);  // requires N = 0
ScalarMat build_G(int n_minus_1, int m);              // G_{n-1,m} block

// The generalized invariance family: per index i in 1..n+m either a diagonal
// choice (a_i, d_i in {+-1}, gamma_i = a_i d_i) or an antidiagonal choice
// (b_i, c_i in {+-1}, gamma_i = (-1)^{|i|} b_i c_i). All gamma_i must agree;
// violating inputs are rejected.
struct GeneralizedChoice {
  bool antidiagonal = false;
  int first = 1, second = 1;  // (a_i,d_i) or (b_i,c_i)
};
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
ScalarMat build_generalized_invariance(const SuperSignature& sig,
                                       const std::vector<GeneralizedChoice>& choices);

// Scalar c with Q^2 = c Q, computed by applying Q twice to v_1 (x) v_{1'}.
// Diagnostic only; the paper does not state the constant.
Rational q_projector_scalar(const SuperSignature& sig);

}  // namespace osplax
