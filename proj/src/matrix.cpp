#include "osplax/matrix.hpp"

namespace osplax {

ScalarMat scalar_identity(int n) {
  ScalarMat r(n, n);
  for (int i = 1; i <= n; ++i) r.at(i, i) = rat(1);
  return r;
}

ScalarMat antidiag(int n) {
  ScalarMat r(n, n);
  for (int i = 1; i <= n; ++i) r.at(i, n + 1 - i) = rat(1);
  return r;
}

ScalarMat scalar_zero(int r, int c) { return ScalarMat(r, c); }

ElementMat element_identity(int n) {
  ElementMat r(n, n);
  for (int i = 1; i <= n; ++i) r.at(i, i) = AlgebraElement::constant(1);
  return r;
}

ElementMat element_zero(int r, int c) { return ElementMat(r, c); }

ElementMat to_elements(const ScalarMat& s) {
  ElementMat r(s.rows, s.cols);
  for (size_t i = 0; i < s.a.size(); ++i)
    if (!is_zero(s.a[i])) r.a[i] = AlgebraElement::constant(s.a[i]);
  return r;
}

ElementMat mul(const ElementMat& x, const ElementMat& y) {
  if (x.cols != y.rows) throw DimensionError("matrix product size mismatch");
  ElementMat r(x.rows, y.cols);
  for (int i = 1; i <= x.rows; ++i)
    for (int k = 1; k <= x.cols; ++k) {
      const AlgebraElement& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 1; j <= y.cols; ++j) {
        const AlgebraElement& ykj = y.at(k, j);
        if (ykj.is_zero()) continue;
        r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

ElementMat mul(const ScalarMat& x, const ElementMat& y) { return mul(to_elements(x), y); }
ElementMat mul(const ElementMat& x, const ScalarMat& y) { return mul(x, to_elements(y)); }

ScalarMat mul(const ScalarMat& x, const ScalarMat& y) {
  if (x.cols != y.rows) throw DimensionError("matrix product size mismatch");
  ScalarMat r(x.rows, y.cols);
  for (int i = 1; i <= x.rows; ++i)
    for (int k = 1; k <= x.cols; ++k) {
      if (is_zero(x.at(i, k))) continue;
      for (int j = 1; j <= y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

ElementMat add(const ElementMat& x, const ElementMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("matrix sum size mismatch");
  ElementMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

ElementMat sub(const ElementMat& x, const ElementMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("matrix sum size mismatch");
  ElementMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

ElementMat scale(const ElementMat& x, const AlgebraElement& c) {
  ElementMat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!x.a[i].is_zero()) r.a[i] = c * x.a[i];
  return r;
}

ScalarMat scale(const ScalarMat& x, const Rational& c) {
  ScalarMat r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

ScalarMat sub(const ScalarMat& x, const ScalarMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("matrix sum size mismatch");
  ScalarMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

ScalarMat inverse(const ScalarMat& x) {
  if (x.rows != x.cols) throw DimensionError("inverse of non-square matrix");
  int n = x.rows;
  ScalarMat a = x;
  ScalarMat inv = scalar_identity(n);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int r = col; r <= n; ++r)
      if (!is_zero(a.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot == 0) throw SingularMatrixError("singular scalar matrix");
    if (pivot != col)
      for (int j = 1; j <= n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational p = a.at(col, col);
    for (int j = 1; j <= n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 1; r <= n; ++r) {
      if (r == col || is_zero(a.at(r, col))) continue;
      Rational f = a.at(r, col);
      for (int j = 1; j <= n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

template <class T>
static Mat<T> assemble_impl(const std::vector<std::vector<Mat<T>>>& blocks) {
  size_t brows = blocks.size();
  size_t bcols = brows ? blocks[0].size() : 0;
  std::vector<int> heights(brows, 0), widths(bcols, 0);
  for (size_t i = 0; i < brows; ++i) {
    if (blocks[i].size() != bcols) throw DimensionError("ragged block grid");
    for (size_t j = 0; j < bcols; ++j) {
      heights[i] = std::max(heights[i], blocks[i][j].rows);
      widths[j] = std::max(widths[j], blocks[i][j].cols);
    }
  }
  for (size_t i = 0; i < brows; ++i)
    for (size_t j = 0; j < bcols; ++j) {
      const auto& b = blocks[i][j];
      if (b.rows != heights[i] || b.cols != widths[j])
        throw DimensionError("inconsistent block sizes");
    }
  int total_r = 0, total_c = 0;
  for (auto h : heights) total_r += h;
  for (auto w : widths) total_c += w;
  Mat<T> out(total_r, total_c);
  int roff = 0;
  for (size_t i = 0; i < brows; ++i) {
    int coff = 0;
    for (size_t j = 0; j < bcols; ++j) {
      const auto& b = blocks[i][j];
      for (int r = 1; r <= b.rows; ++r)
        for (int c = 1; c <= b.cols; ++c) out.at(roff + r, coff + c) = b.at(r, c);
      coff += widths[j];
    }
    roff += heights[i];
  }
  return out;
}

ElementMat assemble(const std::vector<std::vector<ElementMat>>& blocks) {
  return assemble_impl(blocks);
}
ScalarMat assemble_scalar(const std::vector<std::vector<ScalarMat>>& blocks) {
  return assemble_impl(blocks);
}

ElementMat rename_symbol(const ElementMat& x, Sym from, Sym to) {
  ElementMat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i].rename_symbol(from, to);
  return r;
}

ElementMat eval_symbol(const ElementMat& x, Sym s, const Rational& v) {
  ElementMat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i].eval_symbol(s, v);
  return r;
}

std::string LaxDescriptor::str() const {
  std::string s = tag + "(n=" + std::to_string(n) + ",m=" + std::to_string(m);
  if (a >= 0) s += ",a=" + std::to_string(a);
  if (odd) s += ",odd";
  return s + ")";
}

SpectralMatrix matmul(const SpectralMatrix& x, const SpectralMatrix& y) {
  if (x.size() != y.size()) throw DimensionError("spectral matrix size mismatch");
  SpectralMatrix r;
  r.m = mul(x.m, y.m);
  r.parity = x.parity;
  r.desc = LaxDescriptor{"plain", x.desc.n, x.desc.m, -1, x.desc.odd};
  return r;
}

SpectralMatrix conjugate(const SpectralMatrix& mat, const ScalarMat& J) {
  if (J.rows != mat.size() || J.cols != mat.size())
    throw DimensionError("conjugation size mismatch");
  ScalarMat Jinv = inverse(J);
  SpectralMatrix r = mat;
  r.m = mul(mul(J, mat.m), Jinv);
  return r;
}

EvennessReport check_evenness(const SpectralMatrix& mat) {
  for (int i = 1; i <= mat.size(); ++i)
    for (int j = 1; j <= mat.size(); ++j) {
      const auto& e = mat.at(i, j);
      if (e.is_zero()) continue;
      auto p = e.parity();
      int want = (mat.parity[size_t(i - 1)] + mat.parity[size_t(j - 1)]) & 1;
      if (!p || *p != want)
        return {false, i, j,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has parity " +
                    (p ? std::to_string(*p) : std::string("mixed")) + ", expected " +
                    std::to_string(want)};
    }
  return {};
}

SpectralMatrix scaled_limit(const SpectralMatrix& mat, const std::vector<int>& left_powers,
                            const std::vector<int>& right_powers, Sym t) {
  int d = mat.size();
  if (int(left_powers.size()) != d || int(right_powers.size()) != d)
    throw DimensionError("diagonal power vector size mismatch");
  SpectralMatrix r = mat;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      int shift = left_powers[size_t(i - 1)] + right_powers[size_t(j - 1)];
      AlgebraElement e = mat.at(i, j).shift_symbol_degree(t, shift);
      if (e.max_degree(t) > 0)
        throw DivergenceError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") keeps positive degree in " + sym_name(t));
      r.at(i, j) = e.coefficient_of(t, 0);
    }
  r.desc.tag = "limit:" + mat.desc.tag;
  return r;
}

}  // namespace osplax
