#ifndef CURVEAUT_LINALG_HPP
#define CURVEAUT_LINALG_HPP

#include <sstream>
#include <string>
#include <vector>

#include "curveaut/error.hpp"

namespace curveaut {

template <class F>
class Mat {
 public:
  Mat() = default;
  Mat(size_t r, size_t c, const F& fill) : r_(r), c_(c), a_(r, std::vector<F>(c, fill)) {}
  static Mat identity(size_t n, const F& proto) {
    Mat m(n, n, zero_like(proto));
    for (size_t i = 0; i < n; ++i) m.a_[i][i] = one_like(proto);
    return m;
  }
  static Mat from_rows(std::vector<std::vector<F>> rows) {
    Mat m;
    m.r_ = rows.size();
    m.c_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows)
      require(row.size() == m.c_, Err::Shape, "ragged matrix rows");
    m.a_ = std::move(rows);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const F& at(size_t i, size_t j) const { return a_[i][j]; }
  F& at(size_t i, size_t j) { return a_[i][j]; }
  const std::vector<std::vector<F>>& data() const { return a_; }

  bool operator==(const Mat& o) const { return a_ == o.a_; }

  Mat operator*(const Mat& o) const {
    require(c_ == o.r_, Err::Shape, "matrix product shape mismatch");
    F z = zero_like(a_[0][0]);
    Mat m(r_, o.c_, z);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        if (a_[i][k].is_zero()) continue;
        for (size_t j = 0; j < o.c_; ++j) {
          if (o.a_[k][j].is_zero()) continue;
          m.a_[i][j] = m.a_[i][j] + a_[i][k] * o.a_[k][j];
        }
      }
    return m;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    require(v.size() == c_, Err::Shape, "matrix-vector shape mismatch");
    F z = zero_like(a_[0][0]);
    std::vector<F> out(r_, z);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j)
        if (!a_[i][j].is_zero() && !v[j].is_zero()) out[i] = out[i] + a_[i][j] * v[j];
    return out;
  }
  Mat operator*(const F& s) const {
    Mat m = *this;
    for (auto& row : m.a_)
      for (auto& x : row) x = x * s;
    return m;
  }
  Mat operator+(const Mat& o) const {
    require(r_ == o.r_ && c_ == o.c_, Err::Shape, "matrix sum shape mismatch");
    Mat m = *this;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.a_[i][j] = m.a_[i][j] + o.a_[i][j];
    return m;
  }
  Mat operator-(const Mat& o) const {
    require(r_ == o.r_ && c_ == o.c_, Err::Shape, "matrix diff shape mismatch");
    Mat m = *this;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.a_[i][j] = m.a_[i][j] - o.a_[i][j];
    return m;
  }
  Mat transpose() const {
    F z = zero_like(a_[0][0]);
    Mat m(c_, r_, z);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.a_[j][i] = a_[i][j];
    return m;
  }

  F det() const {
    require(r_ == c_, Err::Shape, "determinant of non-square matrix");
    auto a = a_;
    F d = one_like(a[0][0]);
    F z = zero_like(a[0][0]);
    for (size_t col = 0, row = 0; col < c_ && row < r_; ++col, ++row) {
      size_t piv = row;
      while (piv < r_ && a[piv][col].is_zero()) ++piv;
      if (piv == r_) return z;
      if (piv != row) {
        std::swap(a[piv], a[row]);
        d = -d;
      }
      d = d * a[row][col];
      F inv = a[row][col].inverse();
      for (size_t i = row + 1; i < r_; ++i) {
        if (a[i][col].is_zero()) continue;
        F factor = a[i][col] * inv;
        for (size_t j = col; j < c_; ++j) a[i][j] = a[i][j] - factor * a[row][j];
      }
    }
    return d;
  }

  // Reduced row echelon form in place; returns pivot column list.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
      size_t piv = row;
      while (piv < r_ && a_[piv][col].is_zero()) ++piv;
      if (piv == r_) continue;
      std::swap(a_[piv], a_[row]);
      F inv = a_[row][col].inverse();
      for (size_t j = col; j < c_; ++j) a_[row][j] = a_[row][j] * inv;
      for (size_t i = 0; i < r_; ++i) {
        if (i == row || a_[i][col].is_zero()) continue;
        F factor = a_[i][col];
        for (size_t j = col; j < c_; ++j) a_[i][j] = a_[i][j] - factor * a_[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Mat m = *this;
    return m.rref().size();
  }

  // Basis of the right kernel.
  std::vector<std::vector<F>> kernel() const {
    Mat m = *this;
    auto pivots = m.rref();
    F z = zero_like(a_[0][0]);
    F one = one_like(a_[0][0]);
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (size_t freec = 0; freec < c_; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<F> v(c_, z);
      v[freec] = one;
      for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m.a_[pi][freec];
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Mat inverse() const {
    require(r_ == c_, Err::Shape, "inverse of non-square matrix");
    F z = zero_like(a_[0][0]);
    Mat aug(r_, 2 * c_, z);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug.a_[i][j] = a_[i][j];
      aug.a_[i][c_ + i] = one_like(z);
    }
    auto pivots = aug.rref();
    require(pivots.size() == r_ && pivots.back() == r_ - 1, Err::Arithmetic,
            "matrix not invertible");
    Mat inv(r_, c_, z);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) inv.a_[i][j] = aug.a_[i][c_ + j];
    return inv;
  }

  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < r_; ++i) {
      os << "[";
      for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << a_[i][j].str();
      os << "]";
    }
    return os.str();
  }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<std::vector<F>> a_;
};

// Canonical reduced row space (RREF rows, zero rows dropped) as an exact key
// for subspace identity.
template <class F>
std::string row_space_key(Mat<F> m) {
  auto pivots = m.rref();
  std::ostringstream os;
  for (size_t i = 0; i < pivots.size(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) os << m.at(i, j).str() << '|';
    os << '/';
  }
  return os.str();
}

// Lagrange congruence diagonalization of a symmetric matrix: returns S with
// S^T A S diagonal. Stays inside the field (no square roots).
template <class F>
Mat<F> congruence_diagonalize(const Mat<F>& A) {
  size_t n = A.rows();
  require(A.cols() == n, Err::Shape, "congruence diagonalization needs square input");
  F z = zero_like(A.at(0, 0));
  F one = one_like(A.at(0, 0));
  Mat<F> S = Mat<F>::identity(n, z);
  Mat<F> M = A;
  for (size_t k = 0; k < n; ++k) {
    if (M.at(k, k).is_zero()) {
      // find a nonzero diagonal below, else create one from an off-diagonal
      size_t swap_with = n;
      for (size_t i = k + 1; i < n; ++i)
        if (!M.at(i, i).is_zero()) {
          swap_with = i;
          break;
        }
      if (swap_with < n) {
        // congruence swap of coordinates k <-> swap_with
        Mat<F> P = Mat<F>::identity(n, z);
        P.at(k, k) = z;
        P.at(swap_with, swap_with) = z;
        P.at(k, swap_with) = one;
        P.at(swap_with, k) = one;
        M = P.transpose() * M * P;
        S = S * P;
      } else {
        size_t j = n;
        for (size_t jj = k + 1; jj < n && j == n; ++jj)
          if (!M.at(k, jj).is_zero()) j = jj;
        if (j == n) continue;  // row/col k already zero
        // x_j += x_k creates a nonzero diagonal at (k, k)
        Mat<F> P = Mat<F>::identity(n, z);
        P.at(j, k) = one;  // column op: new e_k direction = e_k + e_j
        M = P.transpose() * M * P;
        S = S * P;
      }
    }
    if (M.at(k, k).is_zero()) continue;
    F inv = M.at(k, k).inverse();
    Mat<F> P = Mat<F>::identity(n, z);
    for (size_t j = k + 1; j < n; ++j) P.at(k, j) = -(M.at(k, j) * inv);
    M = P.transpose() * M * P;
    S = S * P;
  }
  return S;
}

}  // namespace curveaut

#endif
