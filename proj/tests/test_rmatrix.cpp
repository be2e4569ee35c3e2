#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osplax/rmatrix.hpp"

using namespace osplax;

namespace {

// Test-side oracle: the orthosymplectic R-matrix assembled directly from the
// explicit actions of P and Q on basis vectors, independent of build_R_osp's
// assembly path.
ElementMat oracle_R_osp(const SuperSignature& sig) {
  int d = sig.dim();
  auto x = AlgebraElement::symbol(SymX);
  auto xk = x + AlgebraElement::constant(sig.kappa);
  ElementMat R(d * d, d * d);
  auto idx = [d](int i, int k) { return (i - 1) * d + k; };
  for (int j = 1; j <= d; ++j)
    for (int l = 1; l <= d; ++l) {
      R.at(idx(j, l), idx(j, l)) += x * xk;
      int psign = (sig.p(j) && sig.p(l)) ? -1 : 1;
      R.at(idx(l, j), idx(j, l)) += rat(psign) * xk;
      if (l == sig.dual(j)) {
        int pref = sig.th(j) * (sig.p(j) ? -1 : 1);
        for (int i = 1; i <= d; ++i)
          R.at(idx(i, sig.dual(i)), idx(j, l)) -= rat(pref * sig.th(i)) * x;
      }
    }
  return R;
}

}  // namespace

TEST_CASE("signature data at small ranks") {
  auto s21 = build_signature(2, 1);
  CHECK(s21.theta == std::vector<int>{1, 1, -1, 1});
  CHECK(s21.kappa == rat(-1));
  CHECK(s21.parity == std::vector<int>{0, 1, 1, 0});

  auto s40 = build_signature(4, 0);
  CHECK(s40.theta == std::vector<int>{1, 1, 1, 1});

  auto s01 = build_signature(0, 1);
  CHECK(s01.theta == std::vector<int>{1, -1});
  CHECK(s01.parity == std::vector<int>{1, 1});

  // theta_{i'} = (-1)^{|i|} theta_i on both parities of N.
  for (auto [N, m] : {std::pair{2, 1}, {4, 1}, {3, 1}, {3, 2}, {0, 2}}) {
    auto s = build_signature(N, m);
    for (int i = 1; i <= s.dim(); ++i) {
      CHECK(s.th(s.dual(i)) == (s.p(i) ? -s.th(i) : s.th(i)));
      CHECK(s.p(i) == s.p(s.dual(i)));
    }
  }
}

TEST_CASE("P squares to the identity") {
  for (auto [N, m] : {std::pair{2, 1}, {3, 1}, {0, 2}}) {
    auto sig = build_signature(N, m);
    auto P = build_P(sig.parity);
    CHECK(mul(P.m, P.m) == element_identity(sig.dim() * sig.dim()));
  }
}

TEST_CASE("Q kills v_i (x) v_j for j != i'") {
  auto sig = build_signature(2, 1);
  auto Q = build_Q(sig);
  int d = sig.dim();
  for (int j = 1; j <= d; ++j)
    for (int l = 1; l <= d; ++l) {
      if (l == sig.dual(j)) continue;
      for (int r = 1; r <= d * d; ++r) CHECK(Q.m.at(r, Q.idx(j, l)).is_zero());
    }
}

TEST_CASE("Q from the explicit action equals Q from the e_ij sum") {
  auto sig = build_signature(2, 1);
  CHECK(build_Q(sig).m == build_Q_from_sum(sig).m);
}

TEST_CASE("gl R at x=0 is the permutation operator") {
  std::vector<int> parity{0, 1};
  auto R = build_R_gl(parity, AlgebraElement{});
  CHECK(R.m == build_P(parity).m);
}

TEST_CASE("osp R at (2,0) has kappa = 0") {
  auto sig = build_signature(2, 0);
  CHECK(sig.kappa == rat(0));
  auto R = build_R_osp(sig, AlgebraElement::symbol(SymX));
  // R = x^2 Id + x P - x Q entrywise.
  auto x = AlgebraElement::symbol(SymX);
  auto P = build_P(sig.parity);
  auto Q = build_Q(sig);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) {
      AlgebraElement want = x * P.m.at(r, c) - x * Q.m.at(r, c);
      if (r == c) want += x * x;
      CHECK(R.m.at(r, c) == want);
    }
}

TEST_CASE("osp R matches the entrywise oracle") {
  for (auto [N, m] : {std::pair{2, 1}, {2, 0}, {0, 1}, {3, 1}}) {
    auto sig = build_signature(N, m);
    auto R = build_R_osp(sig, AlgebraElement::symbol(SymX));
    CHECK(R.m == oracle_R_osp(sig));
  }
  // Diagonal entry ((1,1),(1,1)) = x(x+kappa) + (x+kappa) at (2,1).
  auto sig = build_signature(2, 1);
  auto R = build_R_osp(sig, AlgebraElement::symbol(SymX));
  auto x = AlgebraElement::symbol(SymX);
  auto xk = x + AlgebraElement::constant(sig.kappa);
  CHECK(R.m.at(1, 1) == x * xk + xk);
}

TEST_CASE("pure permutation satisfies the braid relation") {
  auto sig = build_signature(2, 1);
  auto P = build_P(sig.parity);
  CHECK(check_ybe_custom(P, P, P).ok);
}

TEST_CASE("YBE holds at (2,0) and (0,1), and fails with a corrupted Q") {
  CHECK(check_ybe(build_signature(2, 0)).ok);
  CHECK(check_ybe(build_signature(0, 1)).ok);

  auto sig = build_signature(2, 0);
  auto x = AlgebraElement::symbol(SymX);
  auto y = AlgebraElement::symbol(SymY);
  auto flipQ = [&sig](const AlgebraElement& sp) {
    // x(x+kappa) Id + (x+kappa) P + x Q: wrong sign on Q.
    auto P = build_P(sig.parity);
    auto Q = build_Q(sig);
    ROperator R;
    R.d = sig.dim();
    R.parity = sig.parity;
    auto xk = sp + AlgebraElement::constant(sig.kappa);
    R.m = ElementMat(R.d * R.d, R.d * R.d);
    for (int rc = 1; rc <= R.d * R.d; ++rc) R.m.at(rc, rc) = sp * xk;
    for (int r = 1; r <= R.d * R.d; ++r)
      for (int c = 1; c <= R.d * R.d; ++c) {
        R.m.at(r, c) += xk * P.m.at(r, c);
        R.m.at(r, c) += sp * Q.m.at(r, c);
      }
    return R;
  };
  auto bad = check_ybe_custom(flipQ(x), flipQ(x + y), flipQ(y));
  CHECK(!bad.ok);
  CHECK(!bad.witness.empty());
}

TEST_CASE("gl YBE at (1,1)") {
  CHECK(check_ybe_gl({0, 1}).ok);
}

TEST_CASE("invariance matrices at (n,m)=(1,1)") {
  auto sig = build_signature(2, 1);
  auto Jt = build_J_theta(sig);
  // 4x4 with -J_1 and J_3 blocks.
  ScalarMat want(4, 4);
  want.at(1, 4) = rat(-1);
  want.at(2, 3) = rat(1);
  want.at(3, 2) = rat(1);
  want.at(4, 1) = rat(1);
  CHECK(Jt == want);

  auto Jtil = build_J_tilde(sig);
  CHECK(Jtil.at(1, 4) == rat(1));
  CHECK(Jtil.at(4, 1) == rat(1));
  CHECK(Jtil.at(2, 2) == rat(1));
  CHECK(Jtil.at(3, 3) == rat(1));

  // J_hat_theta = J_tilde * J_theta.
  CHECK(build_J_hat_theta(sig) == mul(Jtil, Jt));

  auto R = build_R_osp(sig, AlgebraElement::symbol(SymX));
  CHECK(check_invariance(R, Jt).ok);
  CHECK(check_invariance(R, Jtil).ok);
  CHECK(check_invariance(R, build_J_hat_theta(sig)).ok);
  CHECK(check_invariance(R, scalar_identity(4)).ok);
}

TEST_CASE("Id_theta invariance for N=0") {
  auto sig = build_signature(0, 1);
  auto R = build_R_osp(sig, AlgebraElement::symbol(SymX));
  CHECK(check_invariance(R, build_Id_theta(sig)).ok);
  CHECK_THROWS_AS(build_Id_theta(build_signature(2, 1)), ConstraintError);
}

TEST_CASE("generalized invariance family") {
  auto sig = build_signature(2, 1);
  auto R = build_R_osp(sig, AlgebraElement::symbol(SymX));

  // Diagonal choices with constant gamma = +1.
  std::vector<GeneralizedChoice> diag{{false, 1, 1}, {false, -1, -1}};
  CHECK(check_invariance(R, build_generalized_invariance(sig, diag)).ok);

  // Mixed diagonal/antidiagonal with constant gamma = -1: at even index i=1,
  // gamma = a_1 d_1 = -1; at odd index i=2 antidiagonal, gamma = -b_2 c_2.
  std::vector<GeneralizedChoice> mixed{{false, 1, -1}, {true, 1, 1}};
  CHECK(check_invariance(R, build_generalized_invariance(sig, mixed)).ok);

  // gamma mismatch is rejected at build time.
  std::vector<GeneralizedChoice> bad{{false, 1, 1}, {false, 1, -1}};
  CHECK_THROWS_AS(build_generalized_invariance(sig, bad), ConstraintError);
}

TEST_CASE("Q projector scalar") {
  CHECK(q_projector_scalar(build_signature(2, 0)) == rat(2));
  CHECK(q_projector_scalar(build_signature(0, 1)) == rat(-2));
  // Q^2 - c Q = 0 as a full matrix at (2,1).
  auto sig = build_signature(2, 1);
  auto Q = build_Q(sig);
  Rational c = q_projector_scalar(sig);
  auto lhs = mul(Q.m, Q.m);
  auto rhs = Q.m;
  for (auto& e : rhs.a) e *= c;
  CHECK(lhs == rhs);
}
