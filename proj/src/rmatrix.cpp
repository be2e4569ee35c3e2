#include "osplax/rmatrix.hpp"

namespace osplax {

ROperator build_P(const std::vector<int>& parity) {
  ROperator P;
  P.d = int(parity.size());
  P.parity = parity;
  P.m = ElementMat(P.d * P.d, P.d * P.d);
  for (int j = 1; j <= P.d; ++j)
    for (int l = 1; l <= P.d; ++l) {
      int sign = (parity[size_t(j - 1)] && parity[size_t(l - 1)]) ? -1 : 1;
      P.m.at(P.idx(l, j), P.idx(j, l)) = AlgebraElement::constant(sign);
    }
  return P;
}

ROperator build_Q(const SuperSignature& sig) {
  ROperator Q;
  Q.d = sig.dim();
  Q.parity = sig.parity;
  Q.m = ElementMat(Q.d * Q.d, Q.d * Q.d);
  for (int a = 1; a <= Q.d; ++a) {
    // Q(v_a (x) v_{a'}) = (-1)^{|a|} theta_a sum_i theta_i v_i (x) v_{i'};
    // every other basis vector is annihilated.
    int pref = sig.th(a) * ((sig.p(a) == 1) ? -1 : 1);
    for (int i = 1; i <= Q.d; ++i)
      Q.m.at(Q.idx(i, sig.dual(i)), Q.idx(a, sig.dual(a))) =
          AlgebraElement::constant(pref * sig.th(i));
  }
  return Q;
}

ROperator build_Q_from_sum(const SuperSignature& sig) {
  // Q = sum_{ij} (-1)^{|i||j|} theta_i theta_j e_ij (x) e_{i'j'} with the
  // graded action (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw.
  ROperator Q;
  Q.d = sig.dim();
  Q.parity = sig.parity;
  Q.m = ElementMat(Q.d * Q.d, Q.d * Q.d);
  for (int i = 1; i <= Q.d; ++i)
    for (int j = 1; j <= Q.d; ++j) {
      int coeff = sig.th(i) * sig.th(j);
      if (sig.p(i) && sig.p(j)) coeff = -coeff;
      // e_ij (x) e_{i'j'} maps v_j (x) v_{j'} to (-1)^{(|i|+|j|)|j|} v_i (x) v_{i'}.
      int act = ((sig.p(i) + sig.p(j)) * sig.p(j)) % 2 ? -1 : 1;
      Q.m.at(Q.idx(i, sig.dual(i)), Q.idx(j, sig.dual(j))) +=
          AlgebraElement::constant(coeff * act);
    }
  return Q;
}

ROperator build_R_gl(const std::vector<int>& parity, const AlgebraElement& spectral) {
  ROperator R = build_P(parity);
  R.kind = RKind::Gl;
  for (int i = 1; i <= R.d; ++i)
    for (int k = 1; k <= R.d; ++k) R.m.at(R.idx(i, k), R.idx(i, k)) += spectral;
  return R;
}

ROperator build_R_osp(const SuperSignature& sig, const AlgebraElement& spectral) {
  ROperator P = build_P(sig.parity);
  ROperator Q = build_Q(sig);
  ROperator R;
  R.d = sig.dim();
  R.kind = RKind::Osp;
  R.parity = sig.parity;
  AlgebraElement xk = spectral + AlgebraElement::constant(sig.kappa);
  AlgebraElement id_coeff = spectral * xk;
  R.m = ElementMat(R.d * R.d, R.d * R.d);
  for (int rc = 1; rc <= R.d * R.d; ++rc) R.m.at(rc, rc) = id_coeff;
  for (int r = 1; r <= R.d * R.d; ++r)
    for (int c = 1; c <= R.d * R.d; ++c) {
      if (!P.m.at(r, c).is_zero()) R.m.at(r, c) += xk * P.m.at(r, c);
      if (!Q.m.at(r, c).is_zero()) R.m.at(r, c) -= spectral * Q.m.at(r, c);
    }
  return R;
}

namespace {

// Lift of an even operator on V (x) V to slots (s1,s2) of the triple tensor
// product, as an action matrix. For slots (1,2) and (2,3) this is the plain
// Kronecker product with the identity; for (1,3) the middle factor crosses
// the operator's legs, giving the sign (-1)^{(|i|+|j|)|q|} on the passive
// index q.
ElementMat lift3(const ROperator& O, int s1, int s2) {
  int d = O.d;
  int D = d * d * d;
  ElementMat out(D, D);
  auto id3 = [d](int a, int b, int c) { return (a - 1) * d * d + (b - 1) * d + c; };
  const auto& par = O.parity;
  for (int i = 1; i <= d; ++i)
    for (int k = 1; k <= d; ++k)
      for (int j = 1; j <= d; ++j)
        for (int l = 1; l <= d; ++l) {
          const AlgebraElement& e = O.m.at(O.idx(i, k), O.idx(j, l));
          if (e.is_zero()) continue;
          for (int q = 1; q <= d; ++q) {
            if (s1 == 1 && s2 == 2)
              out.at(id3(i, k, q), id3(j, l, q)) += e;
            else if (s1 == 2 && s2 == 3)
              out.at(id3(q, i, k), id3(q, j, l)) += e;
            else {
              bool neg =
                  ((par[size_t(i - 1)] + par[size_t(j - 1)]) * par[size_t(q - 1)]) % 2 != 0;
              if (neg)
                out.at(id3(i, q, k), id3(j, q, l)) -= e;
              else
                out.at(id3(i, q, k), id3(j, q, l)) += e;
            }
          }
        }
  return out;
}

ResidualReport report_matrix_residual(const ElementMat& lhs, const ElementMat& rhs) {
  for (int r = 1; r <= lhs.rows; ++r)
    for (int c = 1; c <= lhs.cols; ++c) {
      AlgebraElement diff = lhs.at(r, c) - rhs.at(r, c);
      if (!diff.is_zero())
        return {false,
                "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + diff.str(),
                long(diff.term_count())};
    }
  return {};
}

}  // namespace

ResidualReport check_ybe_custom(const ROperator& Rx, const ROperator& Rxy,
                                const ROperator& Ry) {
  ElementMat R12 = lift3(Rx, 1, 2);
  ElementMat R13 = lift3(Rxy, 1, 3);
  ElementMat R23 = lift3(Ry, 2, 3);
  ElementMat lhs = mul(mul(R12, R13), R23);
  ElementMat rhs = mul(mul(R23, R13), R12);
  return report_matrix_residual(lhs, rhs);
}

ResidualReport check_ybe(const SuperSignature& sig) {
  auto x = AlgebraElement::symbol(SymX);
  auto y = AlgebraElement::symbol(SymY);
  return check_ybe_custom(build_R_osp(sig, x), build_R_osp(sig, x + y), build_R_osp(sig, y));
}

ResidualReport check_ybe_gl(const std::vector<int>& parity) {
  auto x = AlgebraElement::symbol(SymX);
  auto y = AlgebraElement::symbol(SymY);
  return check_ybe_custom(build_R_gl(parity, x), build_R_gl(parity, x + y),
                          build_R_gl(parity, y));
}

ResidualReport check_invariance(const ROperator& R, const ScalarMat& J) {
  int d = R.d;
  if (J.rows != d || J.cols != d) throw DimensionError("invariance matrix size mismatch");
  // J is even and scalar, so J (x) J acts by the plain Kronecker product.
  ElementMat JJ(d * d, d * d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (is_zero(J.at(i, j))) continue;
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          if (is_zero(J.at(k, l))) continue;
          JJ.at(R.idx(i, k), R.idx(j, l)) = AlgebraElement::constant(J.at(i, j) * J.at(k, l));
        }
    }
  return report_matrix_residual(mul(R.m, JJ), mul(JJ, R.m));
}

ScalarMat build_J_theta(const SuperSignature& sig) {
  // Block form [[0, -J_n],[J_{n+2m}, 0]]; equivalently epsilon_r e_{r,r'}
  // with epsilon_r = -1 for r <= n and +1 otherwise.
  if (sig.odd) throw ConstraintError("J_theta requires even N");
  int d = sig.dim();
  ScalarMat J(d, d);
  for (int r = 1; r <= d; ++r) J.at(r, sig.dual(r)) = rat(r <= sig.n ? -1 : 1);
  return J;
}

ScalarMat build_J_tilde(const SuperSignature& sig) {
  int d = sig.dim();
  ScalarMat J = scalar_identity(d);
  J.at(1, 1) = rat(0);
  J.at(d, d) = rat(0);
  J.at(1, d) = rat(1);
  J.at(d, 1) = rat(1);
  return J;
}

ScalarMat build_G(int n_minus_1, int m) {
  // [[0, -J_{n-1}],[J_m, 0]]: rows split (n-1, m), cols split (m, n-1).
  ScalarMat G(n_minus_1 + m, n_minus_1 + m);
  for (int r = 1; r <= n_minus_1; ++r) G.at(r, m + (n_minus_1 + 1 - r)) = rat(-1);
  for (int r = 1; r <= m; ++r) G.at(n_minus_1 + r, m + 1 - r) = rat(1);
  return G;
}

ScalarMat build_J_hat_theta(const SuperSignature& sig) {
  if (sig.odd) throw ConstraintError("J_hat_theta requires even N");
  int n = sig.n, m = sig.m;
  if (n < 1) throw ConstraintError("J_hat_theta requires n >= 1");
  int inner = n + m - 1;
  ScalarMat one(1, 1);
  one.at(1, 1) = rat(1);
  ScalarMat minus_one(1, 1);
  minus_one.at(1, 1) = rat(-1);
  return assemble_scalar({
      {one, scalar_zero(1, inner), scalar_zero(1, inner), scalar_zero(1, 1)},
      {scalar_zero(inner, 1), scalar_zero(inner, inner), build_G(n - 1, m),
       scalar_zero(inner, 1)},
      {scalar_zero(inner, 1), antidiag(inner), scalar_zero(inner, inner),
       scalar_zero(inner, 1)},
      {scalar_zero(1, 1), scalar_zero(1, inner), scalar_zero(1, inner), minus_one},
  });
}

ScalarMat build_Id_theta(const SuperSignature& sig) {
  if (sig.N != 0) throw ConstraintError("Id_theta requires N = 0");
  int d = sig.dim();
  ScalarMat J(d, d);
  for (int i = 1; i <= d; ++i) J.at(i, i) = rat(i <= sig.m ? 1 : -1);
  return J;
}

ScalarMat build_generalized_invariance(const SuperSignature& sig,
                                       const std::vector<GeneralizedChoice>& choices) {
  if (sig.odd) throw ConstraintError("generalized invariance family requires even N");
  int half = sig.n + sig.m;
  if (int(choices.size()) != half)
    throw ConstraintError("need one choice per index i = 1..n+m");
  int gamma = 0;
  int d = sig.dim();
  ScalarMat J(d, d);
  for (int i = 1; i <= half; ++i) {
    const auto& c = choices[size_t(i - 1)];
    if (c.first * c.first != 1 || c.second * c.second != 1)
      throw ConstraintError("entries must be +-1");
    int gi;
    if (c.antidiagonal) {
      gi = (sig.p(i) ? -1 : 1) * c.first * c.second;
      J.at(i, sig.dual(i)) = rat(c.first);
      J.at(sig.dual(i), i) = rat(c.second);
    } else {
      gi = c.first * c.second;
      J.at(i, i) = rat(c.first);
      J.at(sig.dual(i), sig.dual(i)) = rat(c.second);
    }
    if (i == 1)
      gamma = gi;
    else if (gi != gamma)
      throw ConstraintError("gamma_i not constant across i (violated at i=" +
                            std::to_string(i) + ")");
  }
  return J;
}

Rational q_projector_scalar(const SuperSignature& sig) {
  ROperator Q = build_Q(sig);
  int d = sig.dim();
  // Apply Q twice to v_1 (x) v_{1'} and read off the ratio against Q applied once.
  std::vector<Rational> v(size_t(d * d));
  v[size_t(Q.idx(1, sig.dual(1)) - 1)] = rat(1);
  auto applyQ = [&](const std::vector<Rational>& in) {
    std::vector<Rational> out(size_t(d * d));
    for (int r = 1; r <= d * d; ++r)
      for (int c = 1; c <= d * d; ++c) {
        const auto& e = Q.m.at(r, c);
        if (e.is_zero() || is_zero(in[size_t(c - 1)])) continue;
        out[size_t(r - 1)] += e.terms().begin()->second * in[size_t(c - 1)];
      }
    return out;
  };
  auto qv = applyQ(v);
  auto qqv = applyQ(qv);
  for (size_t i = 0; i < qv.size(); ++i)
    if (!is_zero(qv[i])) return qqv[i] / qv[i];
  return rat(0);
}

}  // namespace osplax
