#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "liecx/errors.hpp"
#include "liecx/rational.hpp"

namespace liecx {

// Coordinate vector; ops validate lengths at the call site.
using Vec = std::vector<Rational>;

// Dense row-major matrix over an exact or floating scalar.
template <typename S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, S(0)) {
    if (rows < 0 || cols < 0) throw InvalidInput("Matrix: negative dimension");
  }
  Matrix(int rows, int cols, std::initializer_list<S> entries) : Matrix(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
      throw InvalidInput("Matrix: entry count does not match shape");
    size_t p = 0;
    for (const S& v : entries) a_[p++] = v;
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<S>& data() const { return a_; }
  std::vector<S>& data() { return a_; }

  std::vector<S> column(int c) const {
    std::vector<S> v(rows_, S(0));
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix multiply: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero_scalar(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (is_zero_scalar(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& x) {
    if (a.cols_ != static_cast<int>(x.size())) throw DimensionMismatch("Matrix apply: shape mismatch");
    std::vector<S> out(a.rows_, S(0));
    for (int k = 0; k < a.cols_; ++k) {
      if (is_zero_scalar(x[k])) continue;
      for (int i = 0; i < a.rows_; ++i) out[i] += a(i, k) * x[k];
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("Matrix add: shape mismatch");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("Matrix sub: shape mismatch");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
  }

  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.a_) v = s * v;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
      throw IndexOutOfRange("Matrix block: out of range");
    Matrix out(nr, nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  // Gauss-Jordan with first-nonzero pivoting; exact over Rational.
  std::optional<Matrix> inverse() const {
    if (!is_square()) throw NotSquare("Matrix inverse: not square");
    const int n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!is_zero_scalar(a(r, col))) {
          piv = r;
          break;
        }
      if (piv < 0) return std::nullopt;
      if (piv != col) {
        for (int c = 0; c < n; ++c) {
          std::swap(a(piv, c), a(col, c));
          std::swap(inv(piv, c), inv(col, c));
        }
      }
      S d = a(col, col);
      for (int c = 0; c < n; ++c) {
        a(col, c) /= d;
        inv(col, c) /= d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || is_zero_scalar(a(r, col))) continue;
        S f = a(r, col);
        for (int c = 0; c < n; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

 private:
  static bool is_zero_scalar(const Rational& v) { return v.is_zero(); }
  static bool is_zero_scalar(double v) { return v == 0.0; }

  int rows_, cols_;
  std::vector<S> a_;
};

using MatQ = Matrix<Rational>;
using MatD = Matrix<double>;

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
  Vec out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: length mismatch");
  Vec out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

inline Vec vec_scale(const Rational& s, const Vec& a) {
  Vec out = a;
  for (auto& v : out) v = s * v;
  return out;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

inline Vec basis_vec(int dim, int i) {
  Vec v(dim, Rational(0));
  v[i] = Rational(1);
  return v;
}

}  // namespace liecx
