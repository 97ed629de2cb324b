#include "lamina/representation.hpp"

namespace lamina {

namespace {

bool matrix_known_zero(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j).known_nonzero()) return false;
  return true;
}

bool is_unipotent(const Mat& m) {
  const int n = m.rows();
  Mat d = m - Mat::identity(n, m.field());
  Mat p = d;
  for (int k = 1; k < n; ++k) p = p * d;
  return matrix_known_zero(p);
}

}  // namespace

Representation::Representation(int n, FieldPtr field, SpElement c1, SpElement c3, RepKind kind)
    : n_(n),
      field_(std::move(field)),
      c1_(std::move(c1)),
      c2_(SpElement::identity(n, field_)),
      c3_(std::move(c3)),
      kind_(kind) {
  c2_ = c3_.inverse() * c1_.inverse();
  // relation check: c3 c2 c1 = e
  Mat rel = (c3_ * c2_ * c1_).matrix() - Mat::identity(2 * n_, field_);
  if (!matrix_known_zero(rel)) throw DomainError("representation relation c3 c2 c1 = e violated");
}

SpElement Representation::evaluate(const GroupWord& w) const {
  SpElement acc = SpElement::identity(n_, field_);
  SpElement c1i = c1_.inverse(), c2i = c2_.inverse();
  for (char ch : w.letters()) {
    switch (ch) {
      case 'a': acc = acc * c1_; break;
      case 'A': acc = acc * c1i; break;
      case 'b': acc = acc * c2_; break;
      case 'B': acc = acc * c2i; break;
      default: throw std::invalid_argument("unreduced word letter");
    }
  }
  return acc;
}

Representation strubel_unipotent(FieldPtr field) {
  FieldPtr f = field;
  auto mono = [&](const Rational& c, const Rational& a, const Rational& b) {
    return ValuedScalar::monomial(f, c, Exponent(a, b));
  };
  auto rat = [&](long num, long den = 1) { return ValuedScalar::constant(f, Rational(num, den)); };

  // X1 = [[1, 4/x], [0, 1]]
  Mat x1 = Mat::zero(2, 2, f);
  x1.at(0, 0) = rat(1);
  x1.at(0, 1) = mono(4, -1, 0);
  x1.at(1, 1) = rat(1);
  // X2 = [[-3 + y, -x], [(y-2)^2/x, 1 - y]],  y = x^alpha
  Mat x2 = Mat::zero(2, 2, f);
  x2.at(0, 0) = rat(-3) + mono(1, 0, 1);
  x2.at(0, 1) = mono(-1, 1, 0);
  x2.at(1, 0) = mono(1, -1, 2) + mono(-4, -1, 1) + mono(4, -1, 0);  // (y^2 - 4y + 4)/x
  x2.at(1, 1) = rat(1) - mono(1, 0, 1);
  // X3 = [[1 + y, y^2/x], [-x, 1 - y]]
  Mat x3 = Mat::zero(2, 2, f);
  x3.at(0, 0) = rat(1) + mono(1, 0, 1);
  x3.at(0, 1) = mono(1, -1, 2);
  x3.at(1, 0) = mono(-1, 1, 0);
  x3.at(1, 1) = rat(1) - mono(1, 0, 1);

  if (!is_unipotent(x1) || !is_unipotent(-x2) || !is_unipotent(x3))
    throw DomainError("strubel triple is not unipotent");
  Mat witness = x3 * inverse(x2).transpose() * x1;
  if (!witness.same_mod_precision(Mat::identity(2, f)))
    throw DomainError("strubel triple fails X3 X2^-T X1 = Id");

  Mat zero2 = Mat::zero(2, 2, f);
  Mat c1 = Mat::vstack(Mat::hstack(x1, zero2),
                       Mat::hstack(x1 + inverse(x2) * x3.transpose(), inverse(x1).transpose()));
  Mat c3 = Mat::vstack(
      Mat::hstack(inverse(x3.transpose()), -inverse(x3.transpose()) - inverse(x1) * x2.transpose()),
      Mat::hstack(zero2, x3));
  return Representation(2, f, SpElement(std::move(c1)), SpElement(std::move(c3)),
                        RepKind::strubel_unipotent);
}

Representation sl2_standard(FieldPtr field) {
  FieldPtr f = field;
  const ValuedScalar x = ValuedScalar::variable(f);
  const ValuedScalar xinv = ValuedScalar::monomial(f, Rational(1), Exponent(Rational(-1)));
  const ValuedScalar one = ValuedScalar::one(f);
  // n = 1 coordinates (X1, X2, X3) = (x, -x, -x): X3 X2^-1 X1 = x > 0,
  // spectra inside the closed unit ball
  Mat c1 = Mat::zero(2, 2, f);
  c1.at(0, 0) = x;
  c1.at(1, 0) = x + one;  // X1 + X2^-1 X3 = x + 1
  c1.at(1, 1) = xinv;
  Mat c3 = Mat::zero(2, 2, f);
  c3.at(0, 0) = -xinv;
  c3.at(0, 1) = xinv + one;  // -X3^-1 - X1^-1 X2 = 1/x + 1
  c3.at(1, 1) = -x;
  return Representation(1, f, SpElement(std::move(c1)), SpElement(std::move(c3)), RepKind::sl2);
}

Representation explicit_representation(FieldPtr field, int n, Mat c1, Mat c3) {
  return Representation(n, std::move(field), SpElement(std::move(c1)), SpElement(std::move(c3)),
                        RepKind::explicit_matrices);
}

ValuedScalar trace_invariant_T(const SpElement& g) {
  if (g.n() != 2) throw DomainError("trace invariant T is defined for Sp(4)");
  ValuedScalar tr = g.matrix().trace();
  ValuedScalar tr2 = (g.matrix() * g.matrix()).trace();
  return tr * tr - tr2 - ValuedScalar::constant(g.field(), Rational(4));
}

LengthData length_function(const Representation& rho, const GroupWord& w) {
  SpElement g = rho.evaluate(w);
  NewtonPolygon np = newton_polygon(charpoly(g.matrix()));
  const FieldParams& F = *rho.field();
  Exponent len;
  bool regular = !np.segments.empty();
  if (np.zero_roots != 0) throw DomainError("singular image matrix");
  for (const auto& seg : np.segments) {
    const int s = F.sign(seg.slope);
    if (s == 0) regular = false;
    if (s > 0) len += seg.slope * (2L * seg.length);
  }
  return LengthData{len, regular, std::move(np)};
}

namespace {

// chart action of g: S -> (A S + B)(C S + D)^-1
Mat chart_apply(const SpElement& g, const Mat& s) {
  Mat num = g.block_a() * s + g.block_b();
  Mat den = g.block_c() * s + g.block_d();
  return solve(den.transpose(), num.transpose()).transpose();
}

// all root valuations of charpoly(m) strictly negative (+1), strictly
// positive (-1), or neither (0)
int valuation_side(const Mat& m) {
  NewtonPolygon np = newton_polygon(charpoly(m));
  const FieldParams& F = *m.field();
  if (np.zero_roots != 0) return 0;
  bool all_neg = true, all_pos = true;
  for (const auto& v : np.root_valuations(F)) {
    if (F.sign(v) >= 0) all_neg = false;
    if (F.sign(v) <= 0) all_pos = false;
  }
  return all_neg ? 1 : (all_pos ? -1 : 0);
}

Lagrangian fixed_chart_sl2(const SpElement& g, const Rational& precision_units, bool plus) {
  // fixed charts of (a t + b)/(c t + d) over F: c t^2 + (d - a) t - b = 0
  FieldPtr f = g.field();
  const FieldParams& F = *f;
  const ValuedScalar a = g.matrix().at(0, 0), b = g.matrix().at(0, 1), c = g.matrix().at(1, 0),
                     d = g.matrix().at(1, 1);
  const ValuedScalar tr = a + d;
  const ValuedScalar disc = tr * tr - ValuedScalar::constant(f, Rational(4));
  if (!disc.known_nonzero() || !c.known_nonzero())
    throw ShilovError("sl2 fixed-point data degenerate");
  Exponent target = disc.valuation() / 2 + Exponent(precision_units);
  ValuedScalar root = disc.sqrt(target);
  ValuedScalar t1 = ValuedScalar::divide((a - d) + root, c + c);
  ValuedScalar t2 = ValuedScalar::divide((a - d) - root, c + c);
  // the eigenvalue on the fixed chart (t; 1) is c t + d
  auto lam_val = [&](const ValuedScalar& t) { return (c * t + d).valuation(); };
  const bool t1_plus = F.sign(lam_val(t1)) < 0;  // |lambda| > 1
  const bool t2_plus = F.sign(lam_val(t2)) < 0;
  if (t1_plus == t2_plus) throw ShilovError("sl2 eigenvalues not separated by the unit circle");
  Mat x(1, 1, (plus == t1_plus) ? t1 : t2);
  return Lagrangian::chart(std::move(x));
}

// attracting Lagrangian of g by chart power iteration, in plain coordinates
std::optional<Lagrangian> plain_power_iteration(const SpElement& g,
                                                const Rational& precision_units, int max_iters) {
  FieldPtr f = g.field();
  const int n = g.n();
  const Exponent target{precision_units};
  for (int seed = 0; seed < 4; ++seed) {
    Mat s = Mat::identity(n, f);
    for (int i = 0; i < n; ++i)
      s.at(i, i) += ValuedScalar::constant(f, Rational(seed + i + 1, 7 + 3 * seed + i));
    try {
      Mat prev = s;
      for (int it = 0; it < max_iters; ++it) {
        Mat next =
            chart_apply(g, prev).map([&](const ValuedScalar& e) { return e.truncated(target); });
        const bool settled = it > 0 && next.same_mod_precision(prev);
        prev = next;
        if (settled) {
          Mat back = chart_apply(g, prev);  // invariance residual
          if (!back.same_mod_precision(prev)) break;
          return Lagrangian::chart(prev);
        }
      }
    } catch (const PrecisionError&) {
      // seed hit a non-generic locus; retry with the next one
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

// attracting Lagrangian of g (the "plus" side); exact triangular cases are
// resolved from block valuations, everything else by power iteration in
// plain or deterministically conjugated coordinates
Lagrangian attracting_lagrangian(const SpElement& g, const Rational& precision_units,
                                 int max_iters) {
  FieldPtr f = g.field();
  const int n = g.n();
  const bool c_zero = matrix_known_zero(g.block_c());
  const bool b_zero = matrix_known_zero(g.block_b());
  if (c_zero) {
    const int side = valuation_side(g.block_a());  // g acts on ell_inf by A
    if (side > 0) return Lagrangian::infinity(n, f);
    if (side < 0 && b_zero) return Lagrangian::zero_chart(n, f);
  }
  if (b_zero) {
    const int side = valuation_side(g.block_d());  // g acts on ell_0 by D
    if (side > 0) return Lagrangian::zero_chart(n, f);
  }
  if (n == 1 && g.matrix().at(1, 0).known_nonzero())
    return fixed_chart_sl2(g, precision_units, true);
  if (auto l = plain_power_iteration(g, precision_units, max_iters)) return *l;
  // conjugated retries: h = s^-1 g s, mapped back through s
  std::vector<Mat> shifts;
  shifts.push_back(Mat::identity(n, f));
  Mat s1 = Mat::identity(n, f);
  for (int i = 0; i < n; ++i) s1.at(i, i) = ValuedScalar::constant(f, Rational(i + 1, 2));
  shifts.push_back(s1);
  Mat s2 = Mat::identity(n, f) * ValuedScalar::constant(f, Rational(3));
  shifts.push_back(s2);
  for (const Mat& shift : shifts) {
    SpElement s = SpElement::translation(shift) * SpElement::j_involution(n, f);
    SpElement h = s.inverse() * g * s;
    if (auto l = plain_power_iteration(h, precision_units, max_iters)) {
      try {
        return s.apply(*l);
      } catch (const PrecisionError&) {
        // attracting Lagrangian indistinguishable from ell_infinity here
      }
    }
  }
  throw ShilovError("power iteration did not converge");
}

}  // namespace

ShilovData shilov_data(const Representation& rho, const GroupWord& w, Rational precision_units,
                       int max_iters) {
  SpElement g = rho.evaluate(w);
  NewtonPolygon np = newton_polygon(charpoly(g.matrix()));
  const FieldParams& F = *rho.field();
  std::vector<Exponent> vals = np.root_valuations(F);
  for (const auto& v : vals)
    if (F.sign(v) == 0)
      throw ShilovError("zero Newton slope: Shilov hyperbolicity not certifiable");
  ShilovData out;
  out.eigen_valuations = std::move(vals);
  out.ell_plus = attracting_lagrangian(g, precision_units, max_iters);
  out.ell_minus = attracting_lagrangian(g.inverse(), precision_units, max_iters);
  return out;
}

Framing::Framing(const Representation& rho, Rational precision_units)
    : rho_(rho), precision_units_(std::move(precision_units)) {}

const ShilovData& Framing::data_for(const GroupWord& w) {
  auto it = cache_.find(w.letters());
  if (it == cache_.end())
    it = cache_.emplace(w.letters(), shilov_data(rho_, w, precision_units_)).first;
  return it->second;
}

const Lagrangian& Framing::at_minus(const GroupWord& w) { return data_for(w).ell_minus; }
const Lagrangian& Framing::at_plus(const GroupWord& w) { return data_for(w).ell_plus; }

Exponent framing_crossratio(const Lagrangian& p1, const Lagrangian& p2, const Lagrangian& p3,
                            const Lagrangian& p4) {
  return -det_crossratio(p1, p2, p3, p4).valuation();
}

}  // namespace lamina
