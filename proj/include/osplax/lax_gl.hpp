#pragma once

#include "osplax/matrix.hpp"
#include "osplax/rtt.hpp"
#include "osplax/substitution.hpp"

namespace osplax {

// The gl(n|m)-type superoscillator families. The parity sequence is an
// explicit argument (the constructions are parity-generic); the osp modules
// fix theirs.
struct GlContext {
  int n = 0, m = 0, a = 0;
  std::vector<int> parity;  // length n+m

  static GlContext standard(int n, int m, int a);
  static GlContext with_parity(int n, int m, int a, std::vector<int> parity);

  int dim() const { return n + m; }
  int p(int i) const { return parity[size_t(i - 1)]; }
};

// Oscillator blocks: Kbar is a x (n+m-a) of xibar_{i,a+j}; K is
// (n+m-a) x a of (-1)^{|j|} xi_{a+i,j}.
ElementMat gl_Kbar(const GlContext& ctx, int copy);
ElementMat gl_K(const GlContext& ctx, int copy);

// L_a(x) = [[x Id - Kbar K, Kbar], [-K, Id]].
SpectralMatrix build_gl_La(const GlContext& ctx, const AlgebraElement& spectral, int copy = 1);
// Lbar_a(y) = [[Id, Kbar], [K, y Id + K Kbar]].
SpectralMatrix build_gl_Lbar(const GlContext& ctx, const AlgebraElement& spectral,
                             int copy = 1);
// Nondegenerate family with formal shifts x1, x2 (copy-1 oscillators):
// [[(x+x1)Id - Kbar K, ((x2-x1)Id + Kbar K) Kbar], [-K, (x+x2)Id + K Kbar]].
SpectralMatrix build_gl_nondeg(const GlContext& ctx, const AlgebraElement& spectral,
                               const AlgebraElement& x1, const AlgebraElement& x2);
// Display assembly with externally supplied blocks (used by edge-case tests).
SpectralMatrix build_gl_nondeg_from_blocks(const GlContext& ctx, const ElementMat& Kbar,
                                           const ElementMat& K, const AlgebraElement& spectral,
                                           const AlgebraElement& x1, const AlgebraElement& x2);

// The particle-hole substitution relating J L_bar J^{-1} to L on the opposite
// parity sequence; verified homomorphism.
GeneratorSubstitution gl_particle_hole(const GlContext& ctx, int copy = 1);

// J_{n+m} Lbar_a(x) J_{n+m}^{-1} followed by the particle-hole substitution:
// equals build_gl_La on the reversed parity sequence with split n+m-a.
SpectralMatrix gl_hat_from_bar(const GlContext& ctx, const AlgebraElement& spectral);

// Exponent of the similarity transformation S_a = exp(sum xibar^[1] xi^[2]).
AlgebraElement gl_fusion_exponent(const GlContext& ctx);

struct FusionReport {
  bool ok = true;
  std::string detail;
};

// Verifies L_a^[1](x+x1) Lbar_a^[2](x+x2) = S_a L_{x1,x2}(x) U S_a^{-1} with
// U = [[Id, Kbar_2],[0, Id]] and the S_a-conjugation evaluated by the adjoint
// series; also checks the closed forms K1' = K1 - K2, Kbar2' = Kbar2 + Kbar1.
FusionReport check_gl_fusion(const GlContext& ctx);

// Renormalized limits: both lines reproduce the degenerate families exactly.
FusionReport check_gl_limits(const GlContext& ctx);

}  // namespace osplax
