#include "lamina/symplectic.hpp"

namespace lamina {

Mat symplectic_form(int n, FieldPtr f) {
  Mat j = Mat::zero(2 * n, 2 * n, f);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = ValuedScalar::one(f);
    j.at(n + i, i) = -ValuedScalar::one(f);
  }
  return j;
}

Lagrangian Lagrangian::chart(Mat x) {
  if (x.rows() != x.cols()) throw DomainError("chart matrix must be square");
  if (!x.is_symmetric_mod_precision()) throw DomainError("chart matrix must be symmetric");
  Lagrangian l;
  l.n_ = x.rows();
  l.field_ = x.field();
  l.infinity_ = false;
  l.chart_ = std::move(x);
  return l;
}

Lagrangian Lagrangian::infinity(int n, FieldPtr f) {
  Lagrangian l;
  l.n_ = n;
  l.field_ = std::move(f);
  l.infinity_ = true;
  return l;
}

Lagrangian Lagrangian::frame(Mat b) {
  if (b.rows() != 2 * b.cols() || b.cols() == 0) throw DomainError("frame must be 2n x n");
  const int n = b.cols();
  FieldPtr f = b.field();
  // isotropy: B^T J B = 0
  Mat w = b.transpose() * symplectic_form(n, f) * b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w.at(i, j).known_nonzero()) throw DomainError("frame is not isotropic");
  Mat top = b.block(0, 0, n, n);
  Mat bot = b.block(n, 0, n, n);
  const ValuedScalar dbot = det(bot);
  if (dbot.known_nonzero()) {
    // transverse to ell_infinity: reduce to the chart X = top * bot^-1
    Mat x = solve(bot.transpose(), top.transpose()).transpose();
    return chart(std::move(x));
  }
  if (!dbot.is_exact()) throw PrecisionError("frame chart reduction undecidable");
  // bottom block singular: only ell_infinity itself is representable without
  // a chart in this model
  const ValuedScalar dtop = det(top);
  if (!dtop.known_nonzero()) throw DomainError("frame is not of full rank");
  Mat cross = top.transpose() * bot;  // must vanish for span == ell_infinity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cross.at(i, j).known_nonzero() || bot.at(i, j).known_nonzero())
        throw DomainError("frame is transverse to neither chart model nor ell_infinity");
  return infinity(n, f);
}

const Mat& Lagrangian::chart_matrix() const {
  if (infinity_) throw DomainError("ell_infinity has no chart");
  return chart_;
}

Mat Lagrangian::frame_matrix() const {
  FieldPtr f = field_;
  if (infinity_) {
    Mat b = Mat::zero(2 * n_, n_, f);
    for (int i = 0; i < n_; ++i) b.at(i, i) = ValuedScalar::one(f);
    return b;
  }
  return Mat::vstack(chart_, Mat::identity(n_, f));
}

bool Lagrangian::same_mod_precision(const Lagrangian& o) const {
  if (n_ != o.n_) return false;
  if (infinity_ != o.infinity_) return false;
  if (infinity_) return true;
  return chart_.same_mod_precision(o.chart_);
}

bool is_symplectic(const Mat& m) {
  const int n2 = m.rows();
  if (n2 % 2 != 0 || m.cols() != n2) return false;
  Mat j = symplectic_form(n2 / 2, m.field());
  Mat r = m.transpose() * j * m - j;
  for (int i = 0; i < n2; ++i)
    for (int k = 0; k < n2; ++k)
      if (r.at(i, k).known_nonzero()) return false;
  return true;
}

SpElement::SpElement(Mat m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw DomainError("Sp element must be 2n x 2n");
  if (!is_symplectic(m)) throw DomainError("matrix does not satisfy the symplectic relations");
  n_ = m.rows() / 2;
  m_ = std::move(m);
}

SpElement SpElement::identity(int n, FieldPtr f) { return SpElement(Mat::identity(2 * n, f)); }

SpElement SpElement::from_blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return SpElement(Mat::vstack(Mat::hstack(a, b), Mat::hstack(c, d)));
}

SpElement SpElement::translation(const Mat& s) {
  const int n = s.rows();
  FieldPtr f = s.field();
  return from_blocks(Mat::identity(n, f), s, Mat::zero(n, n, f), Mat::identity(n, f));
}

SpElement SpElement::gl_block(const Mat& u) {
  const int n = u.rows();
  FieldPtr f = u.field();
  Mat uinvt = lamina::inverse(u).transpose();
  return from_blocks(u, Mat::zero(n, n, f), Mat::zero(n, n, f), uinvt);
}

SpElement SpElement::j_involution(int n, FieldPtr f) {
  return SpElement(symplectic_form(n, f));
}

SpElement SpElement::operator*(const SpElement& o) const {
  SpElement r;
  r.n_ = n_;
  r.m_ = m_ * o.m_;
  return r;  // product of symplectic matrices, no recheck needed
}

SpElement SpElement::inverse() const {
  // g^-1 = [[D^T, -B^T], [-C^T, A^T]]
  SpElement r;
  r.n_ = n_;
  r.m_ = Mat::vstack(Mat::hstack(block_d().transpose(), -block_b().transpose()),
                     Mat::hstack(-block_c().transpose(), block_a().transpose()));
  return r;
}

Lagrangian SpElement::apply(const Lagrangian& l) const {
  return Lagrangian::frame(m_ * l.frame_matrix());
}

bool transverse(const Lagrangian& l1, const Lagrangian& l2) {
  Mat s = Mat::hstack(l1.frame_matrix(), l2.frame_matrix());
  ValuedScalar d = det(s);
  if (d.known_nonzero()) return true;
  if (d.is_exact()) return false;
  throw PrecisionError("transversality undecidable at current precision");
}

Mat maslov_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  const int n = l1.n();
  FieldPtr f = l1.field();
  const Mat f1 = l1.frame_matrix(), f2 = l2.frame_matrix(), f3 = l3.frame_matrix();
  // v = F2 s + F3 t, so v' := -F3 t is the l3 component with v + v' in l2.
  // Sign fixed so that Q_{(chart X, chart X', ell_inf)} comes out as X' - X:
  // Q(v) = <v, F3 t> = <v', v>.
  Mat sys = Mat::hstack(f2, f3);
  Mat sol = solve(sys, f1);  // 2n x n
  Mat t = sol.block(n, 0, n, n);
  Mat q = f1.transpose() * symplectic_form(n, f) * (f3 * t);
  // symmetrize: Q is symmetric up to precision; keep the average for safety
  Mat qs = (q + q.transpose()).map([](const ValuedScalar& x) { return x.div_int(2); });
  return qs;
}

Signature maslov(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return signature(maslov_form(l1, l2, l3));
}

int maslov_tau(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return maslov(l1, l2, l3).tau();
}

bool is_maximal(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return maslov_tau(l1, l2, l3) == l1.n();
}

bool is_minimal(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return maslov_tau(l1, l2, l3) == -l1.n();
}

bool is_maximal_quadruple(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                          const Lagrangian& l4) {
  return is_maximal(l1, l2, l3) && is_maximal(l2, l3, l4) && is_maximal(l3, l4, l1) &&
         is_maximal(l4, l1, l2);
}

Mat crossratio_matrix(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                      const Lagrangian& l4) {
  const int n = l1.n();
  const Mat f1 = l1.frame_matrix(), f2 = l2.frame_matrix(), f3 = l3.frame_matrix(),
            f4 = l4.frame_matrix();
  // p_{l4 || l3}: solve [F4 | F3] (s; t) = v, image F4 s
  Mat sol1 = solve(Mat::hstack(f4, f3), f1);
  Mat a = f4 * sol1.block(0, 0, n, n);
  // p_{l1 || l2}: solve [F1 | F2] (u; w) = a, coordinates u in the F1 basis
  Mat sol2 = solve(Mat::hstack(f1, f2), a);
  return sol2.block(0, 0, n, n);
}

Mat crossratio_matrix_chart(const Mat& x1, const Mat& x2, const Mat& x3, const Mat& x4) {
  Mat m1 = solve(x1 - x2, x2 - x4);
  Mat m2 = solve(x3 - x4, x1 - x3);
  return m1 * m2;
}

ValuedScalar det_crossratio(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                            const Lagrangian& l4) {
  const Mat f1 = l1.frame_matrix(), f2 = l2.frame_matrix(), f3 = l3.frame_matrix(),
            f4 = l4.frame_matrix();
  auto stacked = [&](const Mat& a, const Mat& b) { return det(Mat::hstack(a, b)); };
  ValuedScalar num = stacked(f2, f4) * stacked(f1, f3);
  ValuedScalar den = stacked(f1, f2) * stacked(f3, f4);
  return ValuedScalar::divide(num, den);
}

SpElement symplectic_basis(const Lagrangian& l1, const Lagrangian& l3) {
  const int n = l1.n();
  FieldPtr f = l1.field();
  const Mat f1 = l1.frame_matrix(), f3 = l3.frame_matrix();
  // columns [F3 | F1 G] with G = (F3^T J F1)^-1 so that the pairing is standard
  Mat pairing = f3.transpose() * symplectic_form(n, f) * f1;
  Mat g = inverse(pairing);
  Mat m = Mat::hstack(f3, f1 * g);
  return SpElement(std::move(m));
}

}  // namespace lamina
