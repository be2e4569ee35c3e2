#include "osplax/rtt.hpp"

#include <chrono>

namespace osplax {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string tuple_witness(int i, int j, int k, int l, const AlgebraElement& residual) {
  return "(i,j,k,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + "," + std::to_string(l) + "), " +
         std::to_string(residual.term_count()) + " residual terms";
}

}  // namespace

CheckReport check_rtt_gl(const SpectralMatrix& L) {
  Timer timer;
  CheckReport rep;
  rep.check = "rtt-componentwise";
  rep.family = L.desc.tag;
  rep.n = L.desc.n;
  rep.m = L.desc.m;
  rep.a = L.desc.a;
  int d = L.size();
  const auto& par = L.parity;
  auto p = [&par](int i) { return par[size_t(i - 1)]; };

  ElementMat Lx = L.m;
  ElementMat Ly = rename_symbol(L.m, SymX, SymY);
  AlgebraElement xy =
      AlgebraElement::symbol(SymX) - AlgebraElement::symbol(SymY);

  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          // (x-y) [L_ij(x), L_kl(y)]
          AlgebraElement comm = Lx.at(i, j) * Ly.at(k, l);
          if (((p(i) + p(j)) * (p(k) + p(l))) % 2)
            comm += Ly.at(k, l) * Lx.at(i, j);
          else
            comm -= Ly.at(k, l) * Lx.at(i, j);
          AlgebraElement residual = xy * comm;
          AlgebraElement rhs =
              Ly.at(k, j) * Lx.at(i, l) - Lx.at(k, j) * Ly.at(i, l);
          if ((p(i) * p(j) + p(i) * p(k) + p(j) * p(k)) % 2)
            residual += rhs;
          else
            residual -= rhs;
          if (!residual.is_zero()) {
            rep.verdict = "fail";
            rep.witness = tuple_witness(i, j, k, l, residual);
            rep.residual_terms = long(residual.term_count());
            rep.millis = timer.ms();
            return rep;
          }
        }
  rep.millis = timer.ms();
  return rep;
}

CheckReport check_rtt_osp(const SpectralMatrix& L, const SuperSignature& sig) {
  Timer timer;
  CheckReport rep;
  rep.check = "rtt-componentwise";
  rep.family = L.desc.tag;
  rep.n = L.desc.n;
  rep.m = L.desc.m;
  rep.odd = sig.odd;
  int d = L.size();
  if (d != sig.dim()) throw DimensionError("Lax matrix does not match signature dimension");
  auto p = [&sig](int i) { return sig.p(i); };

  ElementMat Lx = L.m;
  ElementMat Ly = rename_symbol(L.m, SymX, SymY);
  AlgebraElement x = AlgebraElement::symbol(SymX);
  AlgebraElement y = AlgebraElement::symbol(SymY);
  AlgebraElement xy = x - y;
  AlgebraElement xyk = xy + AlgebraElement::constant(sig.kappa);

  // Cached p-sums: T2[j][l] = sum_p (-1)^{|j||p|} theta_p L_pj(x) L_{p'l}(y)
  // (enters when k = i'), T3[k][i] = sum_p (-1)^{|p|(1+|i|)} theta_p
  // L_{kp'}(y) L_ip(x) (enters when l = j').
  std::vector<std::vector<AlgebraElement>> T2(size_t(d + 1),
                                              std::vector<AlgebraElement>(size_t(d + 1)));
  std::vector<std::vector<AlgebraElement>> T3 = T2;
  for (int jj = 1; jj <= d; ++jj)
    for (int ll = 1; ll <= d; ++ll) {
      AlgebraElement s2, s3;
      for (int q = 1; q <= d; ++q) {
        AlgebraElement f2 = Lx.at(q, jj) * Ly.at(sig.dual(q), ll);
        if ((p(jj) * p(q)) % 2 != 0) f2 *= rat(-1);
        if (sig.th(q) < 0) f2 *= rat(-1);
        s2 += f2;
        AlgebraElement f3 = Ly.at(jj, sig.dual(q)) * Lx.at(ll, q);
        if ((p(q) * (1 + p(ll))) % 2 != 0) f3 *= rat(-1);
        if (sig.th(q) < 0) f3 *= rat(-1);
        s3 += f3;
      }
      T2[size_t(jj)][size_t(ll)] = s2;   // indexed by (j, l)
      T3[size_t(jj)][size_t(ll)] = s3;   // indexed by (k, i)
    }

  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          AlgebraElement comm = Lx.at(i, j) * Ly.at(k, l);
          if (((p(i) + p(j)) * (p(k) + p(l))) % 2)
            comm += Ly.at(k, l) * Lx.at(i, j);
          else
            comm -= Ly.at(k, l) * Lx.at(i, j);
          AlgebraElement residual = xy * (xyk * comm);

          AlgebraElement rhs1 = Ly.at(k, j) * Lx.at(i, l) - Lx.at(k, j) * Ly.at(i, l);
          if ((p(i) * p(j) + p(i) * p(k) + p(j) * p(k)) % 2)
            residual += xyk * rhs1;
          else
            residual -= xyk * rhs1;

          if (k == sig.dual(i)) {
            AlgebraElement t = T2[size_t(j)][size_t(l)];
            int sign = ((p(i) + p(i) * p(j)) % 2 ? -1 : 1) * sig.th(i);
            if (sign < 0)
              residual += xy * t;
            else
              residual -= xy * t;
          }
          if (l == sig.dual(j)) {
            AlgebraElement t = T3[size_t(k)][size_t(i)];
            int sign = ((p(j) + p(i) * p(k) + p(j) * p(k)) % 2 ? -1 : 1) * sig.th(j);
            if (sign < 0)
              residual -= xy * t;
            else
              residual += xy * t;
          }
          if (!residual.is_zero()) {
            rep.verdict = "fail";
            rep.witness = tuple_witness(i, j, k, l, residual);
            rep.residual_terms = long(residual.term_count());
            rep.millis = timer.ms();
            return rep;
          }
        }
  rep.millis = timer.ms();
  return rep;
}

CheckReport check_rtt_componentwise(const SpectralMatrix& L, const SuperSignature* sig) {
  if (L.desc.tag.rfind("gl", 0) == 0) return check_rtt_gl(L);
  if (!sig) throw std::invalid_argument("osp RTT check needs a signature");
  return check_rtt_osp(L, *sig);
}

}  // namespace osplax
