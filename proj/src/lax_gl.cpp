#include "osplax/lax_gl.hpp"

namespace osplax {

GlContext GlContext::standard(int n, int m, int a) {
  GlContext c;
  c.n = n;
  c.m = m;
  c.a = a;
  for (int i = 0; i < n; ++i) c.parity.push_back(0);
  for (int i = 0; i < m; ++i) c.parity.push_back(1);
  if (a < 0 || a > n + m) throw std::invalid_argument("gl split out of range");
  return c;
}

GlContext GlContext::with_parity(int n, int m, int a, std::vector<int> parity) {
  GlContext c = standard(n, m, a);
  if (int(parity.size()) != n + m) throw std::invalid_argument("parity length mismatch");
  c.parity = std::move(parity);
  return c;
}

namespace {

AlgebraElement xi(const GlContext& ctx, int copy, int row, int col, Kind k) {
  int par = (ctx.p(row) + ctx.p(col)) % 2;
  return AlgebraElement::generator(Generator::make(Family::Xi, copy, row, col, k, par));
}

}  // namespace

ElementMat gl_Kbar(const GlContext& ctx, int copy) {
  ElementMat K(ctx.a, ctx.dim() - ctx.a);
  for (int r = 1; r <= ctx.a; ++r)
    for (int c = 1; c <= ctx.dim() - ctx.a; ++c)
      K.at(r, c) = xi(ctx, copy, r, ctx.a + c, Kind::Creation);
  return K;
}

ElementMat gl_K(const GlContext& ctx, int copy) {
  ElementMat K(ctx.dim() - ctx.a, ctx.a);
  for (int r = 1; r <= ctx.dim() - ctx.a; ++r)
    for (int c = 1; c <= ctx.a; ++c) {
      K.at(r, c) = xi(ctx, copy, ctx.a + r, c, Kind::Annihilation);
      if (ctx.p(c)) K.at(r, c) *= rat(-1);
    }
  return K;
}

SpectralMatrix build_gl_La(const GlContext& ctx, const AlgebraElement& spectral, int copy) {
  ElementMat Kbar = gl_Kbar(ctx, copy);
  ElementMat K = gl_K(ctx, copy);
  int a = ctx.a, b = ctx.dim() - ctx.a;
  ElementMat tl = sub(scale(element_identity(a), spectral), mul(Kbar, K));
  ElementMat bl = scale(K, AlgebraElement::constant(-1));
  SpectralMatrix L;
  L.m = assemble({{tl, Kbar}, {bl, element_identity(b)}});
  L.parity = ctx.parity;
  L.desc = {"gl-L_a", ctx.n, ctx.m, ctx.a, false};
  return L;
}

SpectralMatrix build_gl_Lbar(const GlContext& ctx, const AlgebraElement& spectral, int copy) {
  ElementMat Kbar = gl_Kbar(ctx, copy);
  ElementMat K = gl_K(ctx, copy);
  int a = ctx.a, b = ctx.dim() - ctx.a;
  ElementMat br = add(scale(element_identity(b), spectral), mul(K, Kbar));
  SpectralMatrix L;
  L.m = assemble({{element_identity(a), Kbar}, {K, br}});
  L.parity = ctx.parity;
  L.desc = {"gl-Lbar_a", ctx.n, ctx.m, ctx.a, false};
  return L;
}

SpectralMatrix build_gl_nondeg_from_blocks(const GlContext& ctx, const ElementMat& Kbar,
                                           const ElementMat& K, const AlgebraElement& spectral,
                                           const AlgebraElement& x1, const AlgebraElement& x2) {
  int a = ctx.a, b = ctx.dim() - ctx.a;
  ElementMat KbarK = mul(Kbar, K);
  ElementMat tl = sub(scale(element_identity(a), spectral + x1), KbarK);
  ElementMat tr = mul(add(scale(element_identity(a), x2 - x1), KbarK), Kbar);
  ElementMat bl = scale(K, AlgebraElement::constant(-1));
  ElementMat br = add(scale(element_identity(b), spectral + x2), mul(K, Kbar));
  SpectralMatrix L;
  L.m = assemble({{tl, tr}, {bl, br}});
  L.parity = ctx.parity;
  L.desc = {"gl-nondeg", ctx.n, ctx.m, ctx.a, false};
  return L;
}

SpectralMatrix build_gl_nondeg(const GlContext& ctx, const AlgebraElement& spectral,
                               const AlgebraElement& x1, const AlgebraElement& x2) {
  return build_gl_nondeg_from_blocks(ctx, gl_Kbar(ctx, 1), gl_K(ctx, 1), spectral, x1, x2);
}

GeneratorSubstitution gl_particle_hole(const GlContext& ctx, int copy) {
  // xibar_{i'j'} -> -(-1)^{|j'|} xi_{ij}, xi_{j'i'} -> (-1)^{|i'|} xibar_{ji}
  // for 1 <= j <= n+m-a < i <= n+m, with primes w.r.t. the split a of the
  // source matrix: the source generators are xibar_{k,l}, xi_{l,k} with
  // k <= a < l, where k = i', l = j'. Images live on the reversed parity
  // sequence, which assigns them the same Z2 degree.
  GeneratorSubstitution s;
  int d = ctx.dim();
  auto dual = [d](int i) { return d + 1 - i; };
  for (int k = 1; k <= ctx.a; ++k)
    for (int l = ctx.a + 1; l <= d; ++l) {
      int par = (ctx.p(k) + ctx.p(l)) % 2;
      Generator src_cre = Generator::make(Family::Xi, copy, k, l, Kind::Creation, par);
      Generator src_ann = Generator::make(Family::Xi, copy, l, k, Kind::Annihilation, par);
      Generator dst_ann = Generator::make(Family::Xi, copy, dual(k), dual(l),
                                          Kind::Annihilation, par);
      Generator dst_cre = Generator::make(Family::Xi, copy, dual(l), dual(k),
                                          Kind::Creation, par);
      // |j'| is the parity of l (primes are parity-preserving on the
      // reversed sequence); |i'| is the parity of k.
      s.set(src_cre, rat(ctx.p(l) ? 1 : -1), dst_ann);
      s.set(src_ann, rat(ctx.p(k) ? -1 : 1), dst_cre);
    }
  return s;
}

SpectralMatrix gl_hat_from_bar(const GlContext& ctx, const AlgebraElement& spectral) {
  SpectralMatrix Lbar = build_gl_Lbar(ctx, spectral);
  SpectralMatrix hat = conjugate(Lbar, antidiag(ctx.dim()));
  GeneratorSubstitution ph = gl_particle_hole(ctx);
  ph.verify_or_throw();
  for (auto& e : hat.m.a) e = ph.apply(e);
  std::vector<int> reversed(ctx.parity.rbegin(), ctx.parity.rend());
  hat.parity = reversed;
  hat.desc = {"gl-L_a", ctx.n, ctx.m, ctx.dim() - ctx.a, false};
  return hat;
}

AlgebraElement gl_fusion_exponent(const GlContext& ctx) {
  AlgebraElement T;
  for (int i = 1; i <= ctx.a; ++i)
    for (int j = ctx.a + 1; j <= ctx.dim(); ++j) {
      int par = (ctx.p(i) + ctx.p(j)) % 2;
      auto cre1 = AlgebraElement::generator(
          Generator::make(Family::Xi, 1, i, j, Kind::Creation, par));
      auto ann2 = AlgebraElement::generator(
          Generator::make(Family::Xi, 2, j, i, Kind::Annihilation, par));
      T += cre1 * ann2;
    }
  return T;
}

namespace {

ElementMat conjugate_entrywise(const AlgebraElement& T, const ElementMat& M, int max_depth = 64) {
  ElementMat out(M.rows, M.cols);
  for (size_t i = 0; i < M.a.size(); ++i)
    if (!M.a[i].is_zero()) out.a[i] = conjugate_by_exponential(T, M.a[i], max_depth);
  return out;
}

FusionReport fail(const std::string& what) { return {false, what}; }

}  // namespace

FusionReport check_gl_fusion(const GlContext& ctx) {
  auto x = AlgebraElement::symbol(SymX);
  auto x1 = AlgebraElement::symbol(SymX1);
  auto x2 = AlgebraElement::symbol(SymX2);

  SpectralMatrix L1 = build_gl_La(ctx, x + x1, 1);
  SpectralMatrix Lbar2 = build_gl_Lbar(ctx, x + x2, 2);
  ElementMat lhs = mul(L1.m, Lbar2.m);

  AlgebraElement T = gl_fusion_exponent(ctx);

  // Closed-form transforms of the oscillator blocks.
  ElementMat K1 = gl_K(ctx, 1), K2 = gl_K(ctx, 2);
  ElementMat Kbar1 = gl_Kbar(ctx, 1), Kbar2 = gl_Kbar(ctx, 2);
  if (!(conjugate_entrywise(T, K1) == sub(K1, K2)))
    return fail("K1' != K1 - K2 under the adjoint series");
  if (!(conjugate_entrywise(T, Kbar1) == Kbar1)) return fail("Kbar1' != Kbar1");
  if (!(conjugate_entrywise(T, Kbar2) == add(Kbar2, Kbar1)))
    return fail("Kbar2' != Kbar2 + Kbar1");
  if (!(conjugate_entrywise(T, K2) == K2)) return fail("K2' != K2");

  SpectralMatrix Lmid = build_gl_nondeg(ctx, x, x1, x2);
  int a = ctx.a, b = ctx.dim() - ctx.a;
  ElementMat U = assemble(
      {{element_identity(a), Kbar2}, {element_zero(b, a), element_identity(b)}});
  ElementMat rhs = conjugate_entrywise(T, mul(Lmid.m, U));
  if (!(lhs == rhs)) return fail("factorisation residual is nonzero");
  return {};
}

FusionReport check_gl_limits(const GlContext& ctx) {
  auto x = AlgebraElement::symbol(SymX);
  auto t = AlgebraElement::symbol(SymT);
  int a = ctx.a, d = ctx.dim();

  // Line 1: L_a(x) = lim_t L_{0,t}(x) diag(1^a; (1/t)^{n+m-a}).
  SpectralMatrix nd = build_gl_nondeg(ctx, x, AlgebraElement{}, t);
  std::vector<int> right(size_t(d), 0);
  for (int i = a; i < d; ++i) right[size_t(i)] = -1;
  SpectralMatrix lim1 = scaled_limit(nd, std::vector<int>(size_t(d), 0), right);
  if (!(lim1.m == build_gl_La(ctx, x, 1).m)) return {false, "limit line 1 mismatch"};

  // Line 2: Lbar_a(x) = lim_t diag((1/t)^a; 1^{n+m-a}) L_{t,0}(x) with all
  // oscillators negated.
  SpectralMatrix nd2 = build_gl_nondeg(ctx, x, t, AlgebraElement{});
  std::vector<int> left(size_t(d), 0);
  for (int i = 0; i < a; ++i) left[size_t(i)] = -1;
  SpectralMatrix lim2 = scaled_limit(nd2, left, std::vector<int>(size_t(d), 0));
  std::vector<Generator> gens;
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= d; ++j) {
      int par = (ctx.p(i) + ctx.p(j)) % 2;
      gens.push_back(Generator::make(Family::Xi, 1, i, j, Kind::Creation, par));
      gens.push_back(Generator::make(Family::Xi, 1, j, i, Kind::Annihilation, par));
    }
  GeneratorSubstitution neg = negation_substitution(gens);
  neg.verify_or_throw();
  for (auto& e : lim2.m.a) e = neg.apply(e);
  if (!(lim2.m == build_gl_Lbar(ctx, x, 1).m)) return {false, "limit line 2 mismatch"};
  return {};
}

}  // namespace osplax
