#include <chrono>

#include "osplax/rmatrix.hpp"
#include "osplax/rtt.hpp"

namespace osplax {

namespace {

int pairi(int i, int k, int d) { return (i - 1) * d + k; }

// Pure-tensor coefficient array of the R-matrix: entry ((i,k),(j,l)) is the
// coefficient of e_ij (x) e_kl.
ElementMat r_pure_gl(const std::vector<int>& parity, const AlgebraElement& sp) {
  int d = int(parity.size());
  ElementMat R(d * d, d * d);
  for (int i = 1; i <= d; ++i)
    for (int k = 1; k <= d; ++k) {
      R.at(pairi(i, i, d), pairi(k, k, d)) += sp;  // sp * e_ii (x) e_kk
    }
  // P = sum (-1)^{|b|} e_ab (x) e_ba.
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b) {
      AlgebraElement c = AlgebraElement::constant(parity[size_t(b - 1)] ? -1 : 1);
      R.at(pairi(a, b, d), pairi(b, a, d)) += c;
    }
  return R;
}

ElementMat r_pure_osp(const SuperSignature& sig, const AlgebraElement& sp) {
  int d = sig.dim();
  AlgebraElement xk = sp + AlgebraElement::constant(sig.kappa);
  ElementMat R(d * d, d * d);
  for (int i = 1; i <= d; ++i)
    for (int k = 1; k <= d; ++k) R.at(pairi(i, i, d), pairi(k, k, d)) += sp * xk;
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b) {
      int ps = (sig.p(a) && sig.p(b)) ? -1 : 1;
      R.at(pairi(a, b, d), pairi(b, a, d)) += rat(ps) * xk;
      int qs = sig.th(a) * sig.th(b) * ((sig.p(a) && sig.p(b)) ? -1 : 1);
      R.at(pairi(a, sig.dual(a), d), pairi(b, sig.dual(b), d)) -= rat(qs) * sp;
    }
  return R;
}

// Entry indexing of all pure arrays: row (i,k), column (j,l) addresses the
// coefficient of e_ij (x) e_kl.
CheckReport tensor_check(const ElementMat& Rp, const SpectralMatrix& L,
                         const std::string& kind) {
  auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.check = "rtt-tensor";
  rep.family = L.desc.tag;
  rep.n = L.desc.n;
  rep.m = L.desc.m;
  rep.a = L.desc.a;
  const auto& parity = L.parity;
  SpectralMatrix Ly = L;
  Ly.m = rename_symbol(L.m, SymX, SymY);
  ElementMat L1 = tensor_lift(L, 1);
  ElementMat L2 = tensor_lift(Ly, 2);
  ElementMat lhs = graded_compose(Rp, graded_compose(L1, L2, parity), parity);
  ElementMat rhs = graded_compose(graded_compose(L2, L1, parity), Rp, parity);
  for (int r = 1; r <= lhs.rows; ++r)
    for (int c = 1; c <= lhs.cols; ++c) {
      AlgebraElement diff = lhs.at(r, c) - rhs.at(r, c);
      if (!diff.is_zero()) {
        rep.verdict = "fail";
        rep.witness = kind + " tensor entry (" + std::to_string(r) + "," + std::to_string(c) +
                      "), " + std::to_string(diff.term_count()) + " residual terms";
        rep.residual_terms = long(diff.term_count());
        rep.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        return rep;
      }
    }
  rep.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

}  // namespace

ElementMat tensor_lift(const SpectralMatrix& L, int slot) {
  auto even = check_evenness(L);
  if (!even.ok) throw ParityError("tensor_lift requires an even matrix: " + even.detail);
  int d = L.size();
  const auto& par = L.parity;
  ElementMat out(d * d, d * d);
  // Remark (a) identification: L is sum (-1)^{|i||j|+|j|} e_ij (x) L_ij; the
  // passive slot carries the identity.
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const AlgebraElement& e = L.at(i, j);
      if (e.is_zero()) continue;
      int pi = par[size_t(i - 1)], pj = par[size_t(j - 1)];
      bool neg = ((pi * pj + pj) % 2) != 0;
      for (int q = 1; q <= d; ++q) {
        if (slot == 1) {
          if (neg)
            out.at(pairi(i, q, d), pairi(j, q, d)) -= e;
          else
            out.at(pairi(i, q, d), pairi(j, q, d)) += e;
        } else {
          if (neg)
            out.at(pairi(q, i, d), pairi(q, j, d)) -= e;
          else
            out.at(pairi(q, i, d), pairi(q, j, d)) += e;
        }
      }
    }
  return out;
}

ElementMat graded_compose(const ElementMat& A, const ElementMat& B,
                          const std::vector<int>& parity) {
  int d = int(parity.size());
  if (A.rows != d * d || B.rows != d * d) throw DimensionError("graded_compose size mismatch");
  ElementMat out(d * d, d * d);
  auto p = [&parity](int i) { return parity[size_t(i - 1)]; };
  for (int i = 1; i <= d; ++i)
    for (int k = 1; k <= d; ++k)
      for (int j = 1; j <= d; ++j)
        for (int l = 1; l <= d; ++l) {
          const AlgebraElement& a = A.at(pairi(i, k, d), pairi(j, l, d));
          if (a.is_zero()) continue;
          // a is the coefficient of e_ij (x) e_kl with A-part parity
          // |i|+|j|+|k|+|l| by evenness of the lift.
          int pa = (p(i) + p(j) + p(k) + p(l)) % 2;
          for (int q = 1; q <= d; ++q)
            for (int s = 1; s <= d; ++s) {
              const AlgebraElement& b = B.at(pairi(j, l, d), pairi(q, s, d));
              if (b.is_zero()) continue;
              int sgn = ((p(k) + p(l)) * (p(j) + p(q)) + pa * (p(j) + p(q) + p(l) + p(s))) % 2;
              if (sgn)
                out.at(pairi(i, k, d), pairi(q, s, d)) -= a * b;
              else
                out.at(pairi(i, k, d), pairi(q, s, d)) += a * b;
            }
        }
  return out;
}

CheckReport check_rtt_tensor_gl(const SpectralMatrix& L) {
  AlgebraElement sp = AlgebraElement::symbol(SymX) - AlgebraElement::symbol(SymY);
  return tensor_check(r_pure_gl(L.parity, sp), L, "gl");
}

CheckReport check_rtt_tensor_osp(const SpectralMatrix& L, const SuperSignature& sig) {
  AlgebraElement sp = AlgebraElement::symbol(SymX) - AlgebraElement::symbol(SymY);
  return tensor_check(r_pure_osp(sig, sp), L, "osp");
}

}  // namespace osplax
