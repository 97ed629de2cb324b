#pragma once

#include <cassert>
#include <functional>
#include <vector>

#include "lamina/series.hpp"

namespace lamina {

// Dense row-major matrix over a field-like scalar (ValuedScalar, HybridScalar
// or a Complexified wrapper).  Entry precisions travel with the entries.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const S& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix zero(int rows, int cols, FieldPtr f) { return Matrix(rows, cols, S::zero(f)); }
  static Matrix identity(int n, FieldPtr f) {
    Matrix m = zero(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = S::one(f);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[r * cols_ + c];
  }
  const S& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[r * cols_ + c];
  }

  FieldPtr field() const {
    assert(!a_.empty());
    return a_.front().field();
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r = zero(rows_, o.cols_, field());
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& aik = at(i, k);
        if (!aik.known_nonzero()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }
  Matrix operator*(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, a_.empty() ? S() : a_.front());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix r(nr, nc, a_.front());
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
  }

  // columns of `left` followed by columns of `right`
  static Matrix hstack(const Matrix& left, const Matrix& right) {
    assert(left.rows_ == right.rows_);
    Matrix r(left.rows_, left.cols_ + right.cols_, left.a_.front());
    for (int i = 0; i < left.rows_; ++i) {
      for (int j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
      for (int j = 0; j < right.cols_; ++j) r.at(i, left.cols_ + j) = right.at(i, j);
    }
    return r;
  }
  static Matrix vstack(const Matrix& top, const Matrix& bottom) {
    assert(top.cols_ == bottom.cols_);
    Matrix r(top.rows_ + bottom.rows_, top.cols_, top.a_.front());
    for (int j = 0; j < top.cols_; ++j) {
      for (int i = 0; i < top.rows_; ++i) r.at(i, j) = top.at(i, j);
      for (int i = 0; i < bottom.rows_; ++i) r.at(top.rows_ + i, j) = bottom.at(i, j);
    }
    return r;
  }

  Matrix col(int j) const { return block(0, j, rows_, 1); }

  bool same_mod_precision(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!a_[i].same_mod_precision(o.a_[i])) return false;
    return true;
  }

  bool is_symmetric_mod_precision() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!at(i, j).same_mod_precision(at(j, i))) return false;
    return true;
  }

  S trace() const {
    assert(rows_ == cols_);
    S t = S::zero(field());
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Matrix map(const std::function<S(const S&)>& f) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = f(x);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<S> a_;
};

}  // namespace lamina
