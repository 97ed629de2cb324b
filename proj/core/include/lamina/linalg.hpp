#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lamina/matrix.hpp"

namespace lamina {

namespace detail {

// Pivot choice for exact elimination: among the candidate entries of column c
// in rows >= k, pick a known-nonzero one of minimal valuation.  Entries that
// are indistinguishable from zero poison the choice only when no usable pivot
// exists and they could still be nonzero.
template <class S>
std::optional<int> pick_pivot(const Matrix<S>& m, int k, int c) {
  std::optional<int> best;
  bool saw_indeterminate = false;
  for (int i = k; i < m.rows(); ++i) {
    const S& e = m.at(i, c);
    if (e.known_nonzero()) {
      if (!best) {
        best = i;
      } else {
        const auto& f = *m.at(i, c).field();
        if (f.lt(e.valuation(), m.at(*best, c).valuation())) best = i;
      }
    } else if (!e.is_exact()) {
      saw_indeterminate = true;
    }
  }
  if (!best && saw_indeterminate)
    throw PrecisionError("pivot indistinguishable from zero at current precision");
  return best;
}

}  // namespace detail

// Fraction-free Bareiss determinant; exact on finite-series entries.
template <class S>
S det(Matrix<S> m) {
  if (m.rows() != m.cols()) throw DomainError("det of non-square matrix");
  const int n = m.rows();
  if (n == 0) return S::one(m.field());
  FieldPtr f = m.field();
  S prev = S::one(f);
  int sign_swaps = 0;
  for (int k = 0; k < n - 1; ++k) {
    auto piv = detail::pick_pivot(m, k, k);
    if (!piv) return S::zero(f);  // exactly singular
    if (*piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(*piv, j));
      ++sign_swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        S num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = S::divide(num, prev);
      }
      m.at(i, k) = S::zero(f);
    }
    prev = m.at(k, k);
  }
  S d = m.at(n - 1, n - 1);
  return (sign_swaps % 2) ? -d : d;
}

// Exact linear solve A X = B by fraction-free elimination and back
// substitution.  Throws DomainError when A is exactly singular.
template <class S>
Matrix<S> solve(Matrix<S> a, Matrix<S> b) {
  if (a.rows() != a.cols()) throw DomainError("solve: non-square system");
  if (a.rows() != b.rows()) throw DomainError("solve: dimension mismatch");
  const int n = a.rows();
  const int m = b.cols();
  FieldPtr f = a.field();
  S prev = S::one(f);
  for (int k = 0; k < n - 1; ++k) {
    auto piv = detail::pick_pivot(a, k, k);
    if (!piv) throw DomainError("solve: singular matrix");
    if (*piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(*piv, j));
      for (int j = 0; j < m; ++j) std::swap(b.at(k, j), b.at(*piv, j));
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = S::divide(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      for (int j = 0; j < m; ++j)
        b.at(i, j) = S::divide(b.at(i, j) * a.at(k, k) - a.at(i, k) * b.at(k, j), prev);
      a.at(i, k) = S::zero(f);
    }
    prev = a.at(k, k);
  }
  if (!a.at(n - 1, n - 1).known_nonzero()) {
    if (a.at(n - 1, n - 1).is_exact()) throw DomainError("solve: singular matrix");
    throw PrecisionError("solve: pivot indistinguishable from zero");
  }
  Matrix<S> x = Matrix<S>::zero(n, m, f);
  for (int j = 0; j < m; ++j)
    for (int i = n - 1; i >= 0; --i) {
      S s = b.at(i, j);
      for (int k2 = i + 1; k2 < n; ++k2) s -= a.at(i, k2) * x.at(k2, j);
      x.at(i, j) = S::divide(s, a.at(i, i));
    }
  return x;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  return solve(a, Matrix<S>::identity(a.rows(), a.field()));
}

// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier; coefficients
// ascending in t, c[n] = 1.  Exact on finite-series entries.
template <class S>
std::vector<S> charpoly(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DomainError("charpoly of non-square matrix");
  const int n = m.rows();
  FieldPtr f = m.field();
  std::vector<S> c(n + 1, S::zero(f));
  c[n] = S::one(f);
  Matrix<S> mk = Matrix<S>::zero(n, n, f);
  for (int k = 1; k <= n; ++k) {
    Matrix<S> shift = Matrix<S>::identity(n, f) * c[n - k + 1];
    mk = m * (mk + shift);
    c[n - k] = -mk.trace().div_int(k);
  }
  return c;
}

// Evaluate a polynomial (ascending coefficients) at a square matrix.
template <class S>
Matrix<S> poly_at_matrix(const std::vector<S>& coeffs, const Matrix<S>& m) {
  const int n = m.rows();
  FieldPtr f = m.field();
  Matrix<S> acc = Matrix<S>::zero(n, n, f);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * m + Matrix<S>::identity(n, f) * (*it);
  return acc;
}

struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  int tau() const { return positives - negatives; }
  bool operator==(const Signature&) const = default;
};

// Signature of a symmetric matrix by fraction-free symmetric congruence with
// symmetric pivoting.  When every remaining diagonal entry vanishes but some
// off-diagonal entry does not, the 2x2 hyperbolic block contributes (+1,-1).
Signature signature(Matrix<ValuedScalar> s);

bool is_positive_definite(const Matrix<ValuedScalar>& s);
bool is_negative_definite(const Matrix<ValuedScalar>& s);

// X << Y: Y - X positive definite
inline bool chart_ll(const Matrix<ValuedScalar>& x, const Matrix<ValuedScalar>& y) {
  return is_positive_definite(y - x);
}

}  // namespace lamina
