#include "lamina/siegel.hpp"

#include "lamina/newton_polygon.hpp"

namespace lamina {

SiegelPoint::SiegelPoint(Mat x_, Mat y_) : x(std::move(x_)), y(std::move(y_)) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw DomainError("Siegel point blocks must be square of equal size");
  if (!x.is_symmetric_mod_precision() || !y.is_symmetric_mod_precision())
    throw DomainError("Siegel point blocks must be symmetric");
  if (!is_positive_definite(y)) throw DomainError("imaginary part must be positive definite");
}

SiegelPoint SiegelPoint::i_identity(int n, FieldPtr f) {
  return SiegelPoint(Mat::zero(n, n, f), Mat::identity(n, f));
}

SiegelPoint SiegelPoint::i_scalar(FieldPtr f, int n, const ValuedScalar& re,
                                  const ValuedScalar& im) {
  return SiegelPoint(Mat::identity(n, f) * re, Mat::identity(n, f) * im);
}

CMat SiegelPoint::complex_matrix() const {
  CMat z = CMat::zero(n(), n(), x.field());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) z.at(i, j) = ComplexScalar(x.at(i, j), y.at(i, j));
  return z;
}

CMat complexify(const Mat& m) {
  CMat z = CMat::zero(m.rows(), m.cols(), m.field());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) z.at(i, j) = ComplexScalar(m.at(i, j));
  return z;
}

CMat apply_flt(const SpElement& g, const CMat& z) {
  CMat num = complexify(g.block_a()) * z + complexify(g.block_b());
  CMat den = complexify(g.block_c()) * z + complexify(g.block_d());
  return solve(den.transpose(), num.transpose()).transpose();
}

SiegelPoint apply_flt(const SpElement& g, const SiegelPoint& z) {
  CMat w = apply_flt(g, z.complex_matrix());
  const int n = w.rows();
  Mat re = Mat::zero(n, n, z.x.field()), im = Mat::zero(n, n, z.x.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      re.at(i, j) = w.at(i, j).re;
      im.at(i, j) = w.at(i, j).im;
    }
  return SiegelPoint(std::move(re), std::move(im));
}

Exponent s1_distance(const SiegelPoint& z1, const SiegelPoint& z2) {
  if (z1.n() != 1 || z2.n() != 1) throw DomainError("s1_distance needs 1x1 points");
  const FieldParams& F = *z1.x.field();
  const ValuedScalar dx = z1.x.at(0, 0) - z2.x.at(0, 0);
  const Exponent vy1 = z1.y.at(0, 0).valuation();
  const Exponent vy2 = z2.y.at(0, 0).valuation();
  Exponent d = F.max(vy1 - vy2, vy2 - vy1);  // |v(y1) - v(y2)|
  if (dx.known_nonzero()) {
    Exponent t1 = -(dx.valuation() * 2L - vy1 - vy2);
    d = F.max(d, t1);
  } else if (!dx.is_exact()) {
    // the unseen term could only matter if it could beat d
    Exponent bound = -(*dx.precision() * 2L - vy1 - vy2);
    if (F.lt(d, bound)) throw PrecisionError("s1 distance undecidable at current precision");
  }
  return d;
}

namespace {

bool matrix_exactly_equal(const Mat& a, const Mat& b) {
  Mat d = a - b;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) {
      if (d.at(i, j).known_nonzero()) return false;
      if (!d.at(i, j).is_exact()) return false;  // equality not certifiable
    }
  return true;
}

bool is_scalar_matrix(const Mat& m, ValuedScalar& value) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m.at(i, j).known_nonzero()) return false;
  value = m.at(0, 0);
  for (int i = 1; i < m.rows(); ++i)
    if (!m.at(i, i).same_mod_precision(value)) return false;
  return true;
}

Exponent d1_equal_real_part(const SiegelPoint& z1, const SiegelPoint& z2) {
  if (!matrix_exactly_equal(z1.x, z2.x))
    throw DomainError("equal_real_part mode requires identical real parts");
  // roots of det(Y2 - t Y1) are the eigenvalues of Y1^-1 Y2
  Mat m = solve(z1.y, z2.y);
  NewtonPolygon np = newton_polygon(charpoly(m));
  const FieldParams& F = *z1.x.field();
  Exponent d;
  for (const auto& seg : np.segments) {
    Exponent s = seg.slope;
    if (F.sign(s) < 0) s = -s;
    d += s * static_cast<long>(seg.length);
  }
  return d;
}

Exponent d1_scalar_diagonal(const SiegelPoint& z1, const SiegelPoint& z2) {
  ValuedScalar x1, y1, x2, y2;
  if (!is_scalar_matrix(z1.x, x1) || !is_scalar_matrix(z1.y, y1) ||
      !is_scalar_matrix(z2.x, x2) || !is_scalar_matrix(z2.y, y2))
    throw DomainError("scalar_diagonal mode requires scalar matrices");
  FieldPtr f = z1.x.field();
  SiegelPoint w1(Mat(1, 1, x1), Mat(1, 1, y1));
  SiegelPoint w2(Mat(1, 1, x2), Mat(1, 1, y2));
  return s1_distance(w1, w2) * static_cast<long>(z1.n());
}

ComplexScalar det_stacked(const CMat& a, const CMat& b) { return det(CMat::hstack(a, b)); }

Exponent d1_general(const SiegelPoint& z1, const SiegelPoint& z2) {
  // -v(det R(Z1, conj Z1, conj Z2, Z2)); R has the normal form with diagonal
  // entries (1 + d_i)^2 / (4 d_i), so -v(det R) = -sum v(d_i)
  FieldPtr f = z1.x.field();
  const int n = z1.n();
  CMat id = CMat::identity(n, f);
  CMat f1 = CMat::vstack(z1.complex_matrix(), id);
  CMat zc1 = CMat::vstack(complexify(z1.x) - complexify(z1.y) * ComplexScalar::i_unit(f), id);
  CMat zc2 = CMat::vstack(complexify(z2.x) - complexify(z2.y) * ComplexScalar::i_unit(f), id);
  CMat f2 = CMat::vstack(z2.complex_matrix(), id);
  ComplexScalar num = det_stacked(zc1, f2) * det_stacked(f1, zc2);
  ComplexScalar den = det_stacked(f1, zc1) * det_stacked(zc2, f2);
  return -(num.valuation() - den.valuation());
}

}  // namespace

Exponent d1_distance(const SiegelPoint& z1, const SiegelPoint& z2, D1Mode mode) {
  switch (mode) {
    case D1Mode::equal_real_part: return d1_equal_real_part(z1, z2);
    case D1Mode::scalar_diagonal: return d1_scalar_diagonal(z1, z2);
    case D1Mode::hybrid_general: return d1_general(z1, z2);
  }
  throw DomainError("unknown d1 mode");
}

Tube make_tube(const Lagrangian& l, const Lagrangian& lp) {
  SpElement m = symplectic_basis(l, lp);
  Tube t{l, lp, m.inverse(), m};
  return t;
}

SiegelPoint tube_projection(const Tube& t, const Lagrangian& p) {
  Lagrangian q = t.normalizer.apply(p);
  if (!q.has_chart()) throw DomainError("projection argument not transverse to the tube ends");
  const Mat& y = q.chart_matrix();
  FieldPtr f = y.field();
  Signature sig = signature(y);
  Mat ypos = y;
  if (sig.negatives == y.rows()) {
    ypos = -y;
  } else if (sig.positives != y.rows()) {
    throw DomainError("projection argument lies in neither interval of the tube");
  }
  SiegelPoint normalized(Mat::zero(y.rows(), y.cols(), f), ypos);
  return apply_flt(t.denormalizer, normalized);
}

Exponent projected_distance(const Lagrangian& l, const Lagrangian& lp, const Lagrangian& l1,
                            const Lagrangian& l2) {
  if (!is_maximal_quadruple(l, l1, l2, lp)) throw DomainError("projected_distance: quadruple not maximal");
  // route one: the det ratio
  Exponent via_det = -det_crossratio(l, l1, l2, lp).valuation();
  // route two: project in normalized coordinates and take d^1 there
  Tube t = make_tube(l, lp);
  Lagrangian q1 = t.normalizer.apply(l1);
  Lagrangian q2 = t.normalizer.apply(l2);
  FieldPtr f = l.field();
  const int n = l.n();
  SiegelPoint p1(Mat::zero(n, n, f), q1.chart_matrix());
  SiegelPoint p2(Mat::zero(n, n, f), q2.chart_matrix());
  Exponent via_proj = d1_distance(p1, p2, D1Mode::equal_real_part);
  if (via_det != via_proj)
    throw DomainError("projected_distance: det-ratio and projection routes disagree");
  return via_det;
}

SiegelPoint barycenter(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  const int tau = maslov_tau(l1, l2, l3);
  if (tau != l1.n() && tau != -l1.n())
    throw DomainError("barycenter of a triple that is neither maximal nor minimal");
  return tube_projection(make_tube(l1, l3), l2);
}

bool tube_orthogonality_check(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                              const Lagrangian& l4) {
  if (!is_maximal_quadruple(l1, l2, l3, l4))
    throw DomainError("tube orthogonality needs a maximal quadruple");
  Mat r = crossratio_matrix(l1, l2, l3, l4);
  Mat two = Mat::identity(r.rows(), r.field()) * ValuedScalar::constant(r.field(), Rational(2));
  return matrix_exactly_equal(r, two);
}

}  // namespace lamina
