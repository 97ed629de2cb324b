#include "lamina/linalg.hpp"

namespace lamina {

namespace {

Signature signature_rec(Matrix<ValuedScalar> m) {
  const int n = m.rows();
  if (n == 0) return Signature{};
  FieldPtr f = m.field();
  const FieldParams& F = *f;

  // best distinguishable-nonzero diagonal pivot, by minimal valuation
  int best = -1;
  for (int i = 0; i < n; ++i) {
    const ValuedScalar& e = m.at(i, i);
    if (e.known_nonzero() && (best < 0 || F.lt(e.valuation(), m.at(best, best).valuation())))
      best = i;
  }

  if (best >= 0) {
    if (best != 0) {
      for (int j = 0; j < n; ++j) std::swap(m.at(0, j), m.at(best, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, 0), m.at(i, best));
    }
    const ValuedScalar d = m.at(0, 0);
    const int s = d.sign();
    // fraction-free Schur complement scaled by d: sub(i,j) = d*m(i,j) - c_i*c_j
    Matrix<ValuedScalar> sub = Matrix<ValuedScalar>::zero(n - 1, n - 1, f);
    for (int i = 1; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ValuedScalar v = d * m.at(i, j) - m.at(i, 0) * m.at(0, j);
        sub.at(i - 1, j - 1) = v;
        if (i != j) sub.at(j - 1, i - 1) = v;
      }
    Signature rest = signature_rec(std::move(sub));
    if (s < 0) std::swap(rest.positives, rest.negatives);  // the d-scaling flips signs
    if (s > 0)
      ++rest.positives;
    else
      ++rest.negatives;
    return rest;
  }

  // no usable diagonal pivot: demand decidable diagonal (all exactly zero)
  for (int i = 0; i < n; ++i)
    if (!m.at(i, i).is_exact_zero())
      throw PrecisionError("signature: sign-indeterminate diagonal pivot");

  // hyperbolic 2x2 rule on a distinguishable off-diagonal entry
  int pi = -1, pj = -1;
  bool indeterminate_seen = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const ValuedScalar& e = m.at(i, j);
      if (e.known_nonzero()) {
        if (pi < 0 || F.lt(e.valuation(), m.at(pi, pj).valuation())) {
          pi = i;
          pj = j;
        }
      } else if (!e.is_exact()) {
        indeterminate_seen = true;
      }
    }
  if (pi < 0) {
    if (indeterminate_seen)
      throw PrecisionError("signature: off-diagonal entry indistinguishable from zero");
    return Signature{0, 0, n};  // exactly the zero form
  }

  const ValuedScalar d = m.at(pi, pj);
  const int s = d.sign();
  std::vector<int> rest_idx;
  for (int i = 0; i < n; ++i)
    if (i != pi && i != pj) rest_idx.push_back(i);
  const int r = static_cast<int>(rest_idx.size());
  Matrix<ValuedScalar> sub = Matrix<ValuedScalar>::zero(r, r, f);
  // row_r <- d*row_r - a_r*row_i - b_r*row_j with a_r = m(r,pj), b_r = m(r,pi)
  // gives sub(r,s) = d*m(r,s) - a_r*b_s - b_r*a_s, a 1/d scaling of the congruence
  for (int x = 0; x < r; ++x)
    for (int y = x; y < r; ++y) {
      const int i = rest_idx[x], j = rest_idx[y];
      ValuedScalar v = d * m.at(i, j) - m.at(i, pj) * m.at(j, pi) - m.at(i, pi) * m.at(j, pj);
      sub.at(x, y) = v;
      if (x != y) sub.at(y, x) = v;
    }
  Signature rest = signature_rec(std::move(sub));
  if (s < 0) std::swap(rest.positives, rest.negatives);
  ++rest.positives;
  ++rest.negatives;
  return rest;
}

}  // namespace

Signature signature(Matrix<ValuedScalar> s) {
  if (s.rows() != s.cols()) throw DomainError("signature of non-square matrix");
  if (!s.is_symmetric_mod_precision()) throw DomainError("signature of non-symmetric matrix");
  return signature_rec(std::move(s));
}

bool is_positive_definite(const Matrix<ValuedScalar>& s) {
  Signature sig = signature(s);
  return sig.positives == s.rows();
}

bool is_negative_definite(const Matrix<ValuedScalar>& s) {
  Signature sig = signature(s);
  return sig.negatives == s.rows();
}

}  // namespace lamina
