#include <doctest.h>

#include "lamina/prng.hpp"
#include "lamina/representation.hpp"

using namespace lamina;

namespace {

FieldPtr field_at(const Rational& alpha) { return make_field(Alpha::rational(alpha)); }

ValuedScalar mono(FieldPtr f, long c, const Rational& a, const Rational& b = Rational(0)) {
  return ValuedScalar::monomial(f, Rational(c), Exponent(a, b));
}

bool matrix_is_zero(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j).known_nonzero()) return false;
  return true;
}

// diag(x^-1, x^-2, x, x^2) in Sp(4)
Representation diagonal_rep(FieldPtr f) {
  Mat c1 = Mat::zero(4, 4, f);
  c1.at(0, 0) = mono(f, 1, Rational(-1));
  c1.at(1, 1) = mono(f, 1, Rational(-2));
  c1.at(2, 2) = mono(f, 1, Rational(1));
  c1.at(3, 3) = mono(f, 1, Rational(2));
  return explicit_representation(f, 2, c1, Mat::identity(4, f));
}

}  // namespace

TEST_CASE("strubel images match the displayed matrices") {
  FieldPtr f = field_at(Rational(1, 4));
  Representation rho = strubel_unipotent(f);

  // rho(c1) has first row (1, 4/x, 0, 0), third row (2, 4/x, 1, 0), and
  // fourth row (-4/x, 2, -4/x, 1)
  const Mat& m = rho.c1().matrix();
  CHECK(m.at(0, 0) == ValuedScalar::one(f));
  CHECK(m.at(0, 1) == mono(f, 4, Rational(-1)));
  CHECK(m.at(2, 0) == ValuedScalar::constant(f, Rational(2)));
  CHECK(m.at(2, 1) == mono(f, 4, Rational(-1)));
  CHECK(m.at(3, 0) == mono(f, -4, Rational(-1)));
  CHECK(m.at(3, 2) == mono(f, -4, Rational(-1)));
  CHECK(m.at(3, 3) == ValuedScalar::one(f));
  CHECK(det(m) == ValuedScalar::one(f));
  CHECK(is_symplectic(m));

  // y-dependent entries of rho(c3)
  const Mat& m3 = rho.c3().matrix();
  CHECK(m3.at(0, 0) == ValuedScalar::one(f) - mono(f, 1, Rational(0), Rational(1)));
  CHECK(m3.at(2, 3) == mono(f, 1, Rational(-1), Rational(2)));
  CHECK(m3.at(3, 2) == mono(f, -1, Rational(1)));
  CHECK(is_symplectic(m3));
}

TEST_CASE("strubel images are unipotent") {
  FieldPtr f = field_at(Rational(1, 4));
  Representation rho = strubel_unipotent(f);
  for (const SpElement* g : {&rho.c1(), &rho.c2(), &rho.c3()}) {
    Mat d = g->matrix() - Mat::identity(4, f);
    Mat p = d * d * d * d;
    CHECK(matrix_is_zero(p));
  }
}

TEST_CASE("the defining relation holds exactly") {
  FieldPtr f = field_at(Rational(1, 2));
  Representation rho = strubel_unipotent(f);
  Mat rel = (rho.c3() * rho.c2() * rho.c1()).matrix();
  CHECK(rel.same_mod_precision(Mat::identity(4, f)));
  // c2 = c3^-1 c1^-1
  CHECK(rho.c2().matrix().same_mod_precision(
      (rho.c3().inverse() * rho.c1().inverse()).matrix()));
}

TEST_CASE("word evaluation") {
  FieldPtr f = field_at(Rational(0));
  Representation rho = strubel_unipotent(f);
  CHECK(rho.evaluate(GroupWord()).matrix().same_mod_precision(Mat::identity(4, f)));
  GroupWord w = GroupWord::parse("abA");
  Mat lhs = rho.evaluate(w.inverse()).matrix();
  Mat rhs = rho.evaluate(w).inverse().matrix();
  CHECK(lhs.same_mod_precision(rhs));
}

TEST_CASE("trace invariant against the published expansion") {
  // T(rho_alpha(c1^-1 c3)) = 4(4x^2 + 32x^{4a-4} + (18+8x^{2a}) + 4x^{-2}(16+12x^{2a}+x^{4a}))
  for (const Rational& alpha : {Rational(0), Rational(1, 4), Rational(1), Rational(-1)}) {
    FieldPtr f = field_at(alpha);
    Representation rho = strubel_unipotent(f);
    ValuedScalar t = trace_invariant_T(rho.evaluate(GroupWord::parse("Ac")));
    ValuedScalar expect =
        (mono(f, 4, Rational(2)) + mono(f, 32, Rational(-4), Rational(4)) +
         ValuedScalar::constant(f, Rational(18)) + mono(f, 8, Rational(0), Rational(2)) +
         mono(f, 64, Rational(-2)) + mono(f, 48, Rational(-2), Rational(2)) +
         mono(f, 4, Rational(-2), Rational(4)))
            .scaled(Rational(4));
    CHECK(t == expect);
  }
  // the surd case keeps the two exponent parameters separate
  FieldPtr fs = make_field(Alpha::surd(Rational(-1), Rational(1), 2));
  Representation rho = strubel_unipotent(fs);
  ValuedScalar t = trace_invariant_T(rho.evaluate(GroupWord::parse("Ac")));
  ValuedScalar expect =
      (mono(fs, 4, Rational(2)) + mono(fs, 32, Rational(-4), Rational(4)) +
       ValuedScalar::constant(fs, Rational(18)) + mono(fs, 8, Rational(0), Rational(2)) +
       mono(fs, 64, Rational(-2)) + mono(fs, 48, Rational(-2), Rational(2)) +
       mono(fs, 4, Rational(-2), Rational(4)))
          .scaled(Rational(4));
  CHECK(t == expect);
}

TEST_CASE("trace invariant of the identity") {
  FieldPtr f = field_at(Rational(0));
  // T(Id) = 16 - 4 - 4 = 8
  CHECK(trace_invariant_T(SpElement::identity(2, f)) ==
        ValuedScalar::constant(f, Rational(8)));
}

TEST_CASE("valuation of T for the second word") {
  for (const Rational& alpha : {Rational(0), Rational(1, 4), Rational(-1), Rational(2)}) {
    FieldPtr f = field_at(alpha);
    Representation rho = strubel_unipotent(f);
    ValuedScalar t = trace_invariant_T(rho.evaluate(GroupWord::parse("Ab")));
    Exponent e1 = f->exponent(Rational(-2));
    Exponent e2 = f->exponent(Rational(-2), Rational(4));
    Exponent e3 = f->exponent(Rational(-2), Rational(2));
    CHECK(t.valuation() == f->min(e1, f->min(e2, e3)));
  }
}

TEST_CASE("length of a monomial diagonal") {
  FieldPtr f = field_at(Rational(0));
  Representation rho = diagonal_rep(f);
  LengthData ld = length_function(rho, GroupWord::parse("a"));
  CHECK(ld.length == Exponent(Rational(6)));
  CHECK(ld.shilov_regular);
}

TEST_CASE("length of unipotent boundary words vanishes") {
  FieldPtr f = field_at(Rational(1, 4));
  Representation rho = strubel_unipotent(f);
  LengthData ld = length_function(rho, GroupWord::parse("a"));
  CHECK(ld.length == Exponent());
  CHECK(!ld.shilov_regular);
}

TEST_CASE("length equals minus twice the T valuation on Shilov-regular words") {
  FieldPtr f = field_at(Rational(0));
  Representation rho = strubel_unipotent(f);
  LengthData ld = length_function(rho, GroupWord::parse("Ac"));
  CHECK(ld.length == Exponent(Rational(8)));
  ValuedScalar t = trace_invariant_T(rho.evaluate(GroupWord::parse("Ac")));
  CHECK(ld.length == -(t.valuation() * 2L));

  FieldPtr f1 = field_at(Rational(1));
  Representation rho1 = strubel_unipotent(f1);
  CHECK(length_function(rho1, GroupWord::parse("Ac")).length == Exponent(Rational(4)));
}

TEST_CASE("shilov data for diagonal and triangular elements") {
  FieldPtr f = field_at(Rational(0));
  Representation rho = diagonal_rep(f);
  ShilovData sd = shilov_data(rho, GroupWord::parse("a"));
  // ell_plus = ell_infinity, ell_minus = ell_0
  CHECK(sd.ell_plus.is_infinity());
  CHECK(sd.ell_minus.has_chart());
  CHECK(matrix_is_zero(sd.ell_minus.chart_matrix()));
  REQUIRE(sd.eigen_valuations.size() == 4);
  CHECK(sd.eigen_valuations.front() == Exponent(Rational(-2)));
  CHECK(sd.eigen_valuations.back() == Exponent(Rational(2)));
}

TEST_CASE("shilov data for sl2 words solves the fixed quadratic") {
  FieldPtr f = field_at(Rational(0));
  Representation rho = sl2_standard(f);
  GroupWord w = GroupWord::parse("aB");
  SpElement g = rho.evaluate(w);
  ShilovData sd = shilov_data(rho, w);
  // the fixed chart t satisfies c t^2 + (d - a) t - b = 0
  const Mat& m = g.matrix();
  for (const Lagrangian* l : {&sd.ell_plus, &sd.ell_minus}) {
    REQUIRE(l->has_chart());
    ValuedScalar t = l->chart_matrix().at(0, 0);
    ValuedScalar res = m.at(1, 0) * t * t + (m.at(1, 1) - m.at(0, 0)) * t - m.at(0, 1);
    CHECK(res.same_mod_precision(ValuedScalar::zero(f)));
  }
}

TEST_CASE("shilov invariance residual for a strubel word") {
  FieldPtr f = field_at(Rational(0));
  Representation rho = strubel_unipotent(f);
  GroupWord w = GroupWord::parse("Ac");
  SpElement g = rho.evaluate(w);
  ShilovData sd = shilov_data(rho, w);
  Lagrangian moved = g.apply(sd.ell_plus);
  CHECK(moved.same_mod_precision(sd.ell_plus));
  Lagrangian movedm = g.inverse().apply(sd.ell_minus);
  CHECK(movedm.same_mod_precision(sd.ell_minus));
  CHECK_THROWS_AS(shilov_data(rho, GroupWord::parse("a")), ShilovError);
}

TEST_CASE("length is conjugation invariant and homogeneous") {
  FieldPtr f = field_at(Rational(1, 4));
  Representation rho = strubel_unipotent(f);
  Prng rng(61);
  auto words = enumerate_words(3, true);
  int done = 0;
  for (const auto& w : words) {
    LengthData ld = length_function(rho, w);
    if (!ld.shilov_regular) continue;
    GroupWord u = words[rng.below(words.size())];
    CHECK(length_function(rho, w.conjugated_by(u)).length == ld.length);
    CHECK(length_function(rho, w.power(2)).length == ld.length * 2L);
    CHECK(length_function(rho, w.power(3)).length == ld.length * 3L);
    if (++done >= 6) break;
  }
  CHECK(done >= 3);
}

TEST_CASE("framing crossratio flip symmetry and degenerate rejection") {
  FieldPtr f = field_at(Rational(0));
  // four chart points 0 < x < 1 < 1/x on the line
  auto pt = [&](ValuedScalar v) { return Lagrangian::chart(Mat(1, 1, v)); };
  Lagrangian p1 = pt(ValuedScalar::zero(f));
  Lagrangian p2 = pt(ValuedScalar::variable(f));
  Lagrangian p3 = pt(ValuedScalar::one(f));
  Lagrangian p4 = pt(ValuedScalar::monomial(f, Rational(1), Exponent(Rational(-1))));
  Exponent v = framing_crossratio(p1, p2, p3, p4);
  CHECK(v == Exponent(Rational(1)));
  CHECK(framing_crossratio(p3, p4, p1, p2) == v);
  CHECK_THROWS(framing_crossratio(p1, p2, p2, p4));
}

TEST_CASE("length valuations live in the expected value group") {
  // for alpha = p/q the eigenvalue valuations lie in (1/q) Z
  FieldPtr f = field_at(Rational(1, 4));
  Representation rho = strubel_unipotent(f);
  for (const auto& w : enumerate_words(3, true)) {
    LengthData ld = length_function(rho, w);
    CHECK(sgn(ld.length.b) == 0);
    CHECK(is_integer(Rational(ld.length.a * 4)));
  }
}
