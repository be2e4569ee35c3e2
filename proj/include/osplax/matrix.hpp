#pragma once

#include <string>
#include <vector>

#include "osplax/algebra.hpp"

namespace osplax {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense rectangular matrix over T; T is Rational for the scalar permutation
// and twist matrices and AlgebraElement for everything operator-valued.
// Zero-by-k blocks are legal so that edge ranks (n=0, m=0, a=0) assemble
// silently.
template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  T& at(int i, int j) { return a[size_t(i - 1) * cols + size_t(j - 1)]; }
  const T& at(int i, int j) const { return a[size_t(i - 1) * cols + size_t(j - 1)]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

using ScalarMat = Mat<Rational>;
using ElementMat = Mat<AlgebraElement>;

ScalarMat scalar_identity(int n);
ScalarMat antidiag(int n);  // J_n, "1" on the antidiagonal
ScalarMat scalar_zero(int r, int c);

ElementMat element_identity(int n);
ElementMat element_zero(int r, int c);
ElementMat to_elements(const ScalarMat& s);

ElementMat mul(const ElementMat& x, const ElementMat& y);
ElementMat mul(const ScalarMat& x, const ElementMat& y);
ElementMat mul(const ElementMat& x, const ScalarMat& y);
ScalarMat mul(const ScalarMat& x, const ScalarMat& y);
ElementMat add(const ElementMat& x, const ElementMat& y);
ElementMat sub(const ElementMat& x, const ElementMat& y);
ElementMat scale(const ElementMat& x, const AlgebraElement& c);  // c * entry
ScalarMat scale(const ScalarMat& x, const Rational& c);
ScalarMat sub(const ScalarMat& x, const ScalarMat& y);

// Standard (bosonic) transpose; entries are not reordered internally.
template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> r(x.cols, x.rows);
  for (int i = 1; i <= x.rows; ++i)
    for (int j = 1; j <= x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

// Exact inverse via Gauss-Jordan; throws SingularMatrixError.
ScalarMat inverse(const ScalarMat& x);

// Block assembly from a grid of rectangular blocks; row heights and column
// widths must be consistent (0-sized blocks allowed).
ElementMat assemble(const std::vector<std::vector<ElementMat>>& blocks);
ScalarMat assemble_scalar(const std::vector<std::vector<ScalarMat>>& blocks);

// Entrywise map of spectral argument: substitute the symbol `from` by `to`.
ElementMat rename_symbol(const ElementMat& x, Sym from, Sym to);
ElementMat eval_symbol(const ElementMat& x, Sym s, const Rational& v);

// ----------------------------------------------------------------------------
// Lax-family metadata.

struct LaxDescriptor {
  std::string tag = "plain";  // e.g. "osp-lin-deg", "gl-L_a", ...
  int n = 0, m = 0;
  int a = -1;  // gl split, -1 when not applicable
  bool odd = false;
  std::string str() const;
};

// A square operator-valued matrix together with the parity sequence of its
// auxiliary space. Entry (i,j) must have parity |i|+|j| or be zero.
struct SpectralMatrix {
  ElementMat m;
  std::vector<int> parity;  // length m.rows
  LaxDescriptor desc;

  int size() const { return m.rows; }
  const AlgebraElement& at(int i, int j) const { return m.at(i, j); }
  AlgebraElement& at(int i, int j) { return m.at(i, j); }
};

SpectralMatrix matmul(const SpectralMatrix& x, const SpectralMatrix& y);

// J * mat * J^{-1} for an invertible scalar J of matching size.
SpectralMatrix conjugate(const SpectralMatrix& mat, const ScalarMat& J);

struct EvennessReport {
  bool ok = true;
  int i = 0, j = 0;  // first violating entry
  std::string detail;
};
EvennessReport check_evenness(const SpectralMatrix& mat);

// Renormalized limit: forms diag(t^lp) * M * diag(t^rp) for integer power
// vectors, requires every entry to have t-degree <= 0, and returns the t^0
// coefficient matrix. Throws DivergenceError when a positive t-degree
// survives the scaling.
SpectralMatrix scaled_limit(const SpectralMatrix& mat, const std::vector<int>& left_powers,
                            const std::vector<int>& right_powers, Sym t = SymT);

}  // namespace osplax
