#include "fundom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fundom {

Mat identity(int n) {
  Mat m = zeros(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Fp(1);
  return m;
}

Mat zeros(int rows, int cols) {
  Mat m(rows, cols);
  m.setConstant(Fp(0));
  return m;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat m = zeros(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols() == 0) {
    Mat m = b;
    if (a.rows() > m.rows()) m = zeros(a.rows(), b.cols());
    return m;
  }
  Mat m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) {
    Mat m = b;
    if (a.cols() > m.cols()) m = zeros(b.rows(), a.cols());
    return m;
  }
  Mat m(a.rows() + b.rows(), a.cols());
  m.topRows(a.rows()) = a;
  m.bottomRows(b.rows()) = b;
  return m;
}

Rref rref(const Mat& a) {
  Rref r;
  r.m = a;
  int rows = static_cast<int>(a.rows());
  int cols = static_cast<int>(a.cols());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (!r.m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) r.m.row(row).swap(r.m.row(piv));
    Fp inv = r.m(row, col).inverse();
    for (int j = col; j < cols; ++j) r.m(row, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || r.m(i, col).is_zero()) continue;
      Fp c = r.m(i, col);
      for (int j = col; j < cols; ++j) r.m(i, j) -= c * r.m(row, j);
    }
    r.pivots.push_back(col);
    ++row;
  }
  return r;
}

int rank(const Mat& a) { return static_cast<int>(rref(a).pivots.size()); }

Mat kernel_basis(const Mat& a) {
  Rref r = rref(a);
  int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  int nfree = cols - static_cast<int>(r.pivots.size());
  Mat k = zeros(cols, nfree);
  int out = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    k(c, out) = Fp(1);
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
      k(r.pivots[pr], out) = -r.m(static_cast<int>(pr), c);
    ++out;
  }
  return k;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Mat aug = hstack(a, b);
  Rref r = rref(aug);
  int cols = static_cast<int>(a.cols());
  Vec x(cols);
  x.setConstant(Fp(0));
  for (std::size_t pr = 0; pr < r.pivots.size(); ++pr) {
    if (r.pivots[pr] == cols) return std::nullopt;  // pivot in b column
    x(r.pivots[pr]) = r.m(static_cast<int>(pr), cols);
  }
  return x;
}

Mat col_space_basis(const Mat& a) {
  Rref r = rref(a);
  Mat b(a.rows(), static_cast<int>(r.pivots.size()));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) b.col(i) = a.col(r.pivots[i]);
  return b;
}

bool in_col_span(const Mat& basis, const Vec& v) {
  if (basis.cols() == 0) {
    for (int i = 0; i < v.rows(); ++i)
      if (!v(i).is_zero()) return false;
    return true;
  }
  return solve(basis, v).has_value();
}

Mat coords_in_basis(const Mat& basis, const Mat& b) {
  Mat c(basis.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto x = solve(basis, b.col(j));
    if (!x) throw std::invalid_argument("coords_in_basis: vector outside span");
    if (basis.cols() > 0) c.col(j) = *x;
  }
  return c;
}

int quotient_dim(const Mat& u, const Mat& v) {
  if (u.rows() != v.rows() && v.cols() != 0 && u.cols() != 0)
    throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
  int ru = rank(u);
  if (rank(hstack(u, v)) != ru)
    throw std::invalid_argument("quotient_dim: V not contained in U");
  return ru - rank(v);
}

}  // namespace fundom
