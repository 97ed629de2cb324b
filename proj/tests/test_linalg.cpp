#include <doctest.h>

#include "lamina/linalg.hpp"
#include "lamina/newton_polygon.hpp"
#include "lamina/prng.hpp"

using namespace lamina;

namespace {

FieldPtr F0() { return make_field(Alpha::rational(Rational(0))); }

ValuedScalar rat(FieldPtr f, long n, long d = 1) {
  return ValuedScalar::constant(f, Rational(n, d));
}
ValuedScalar mono(FieldPtr f, long c, const Rational& e) {
  return ValuedScalar::monomial(f, Rational(c), Exponent(e));
}

Mat random_rational_matrix(FieldPtr f, int n, Prng& rng) {
  Mat m = Mat::zero(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = ValuedScalar::constant(f, rng.small_rational(9, 3));
  return m;
}

Mat random_series_matrix(FieldPtr f, int n, Prng& rng) {
  Mat m = Mat::zero(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = ValuedScalar::monomial(f, rng.small_rational(5, 2),
                                          Exponent(Rational(rng.range(-2, 2)))) +
                   ValuedScalar::constant(f, rng.small_rational(5, 2));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  FieldPtr f = F0();
  Mat m = Mat::zero(2, 2, f);
  m.at(0, 0) = rat(f, 1);
  m.at(0, 1) = rat(f, 2);
  m.at(1, 0) = rat(f, 3);
  m.at(1, 1) = rat(f, 4);
  CHECK(det(m) == rat(f, -2));

  Mat d = Mat::zero(2, 2, f);
  d.at(0, 0) = mono(f, 1, Rational(1));
  d.at(1, 1) = mono(f, 1, Rational(-1));
  CHECK(det(d) == ValuedScalar::one(f));
}

TEST_CASE("det multiplicativity on random series matrices") {
  FieldPtr f = F0();
  Prng rng(7);
  for (int i = 0; i < 12; ++i) {
    Mat a = random_series_matrix(f, 4, rng);
    Mat b = random_series_matrix(f, 4, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("signature basics") {
  FieldPtr f = F0();
  Mat d = Mat::zero(2, 2, f);
  d.at(0, 0) = rat(f, 1);
  d.at(1, 1) = rat(f, -1);
  CHECK(signature(d) == Signature{1, 1, 0});

  Mat h = Mat::zero(2, 2, f);
  h.at(0, 1) = rat(f, 1);
  h.at(1, 0) = rat(f, 1);
  CHECK(signature(h) == Signature{1, 1, 0});

  // X' - X for X = 0, X' = diag(x, x^3): positive infinitesimals are positive
  Mat p = Mat::zero(2, 2, f);
  p.at(0, 0) = mono(f, 1, Rational(1));
  p.at(1, 1) = mono(f, 1, Rational(3));
  CHECK(signature(p) == Signature{2, 0, 0});
  CHECK(is_positive_definite(p));

  CHECK(is_positive_definite(Mat::identity(3, f)));
  Mat mixed = Mat::zero(2, 2, f);
  mixed.at(0, 0) = mono(f, 1, Rational(1));
  mixed.at(1, 1) = mono(f, -1, Rational(1));
  CHECK(!is_positive_definite(mixed));
}

TEST_CASE("Sylvester law of inertia under random congruence") {
  FieldPtr f = F0();
  Prng rng(11);
  for (int i = 0; i < 15; ++i) {
    const int n = 3;
    Mat s = Mat::zero(n, n, f);
    std::vector<long> diag = {1, -1, 0};
    for (int k = 0; k < n; ++k) s.at(k, k) = rat(f, diag[rng.below(3)]);
    Signature expected = signature(s);
    Mat p = random_rational_matrix(f, n, rng);
    if (!det(p).known_nonzero()) continue;
    Mat c = p.transpose() * s * p;
    CHECK(signature(c) == expected);
  }
}

TEST_CASE("charpoly basics") {
  FieldPtr f = F0();
  Mat d = Mat::zero(2, 2, f);
  d.at(0, 0) = rat(f, 3);
  d.at(1, 1) = rat(f, 5);
  auto c = charpoly(d);  // t^2 - 8 t + 15
  CHECK(c[2] == rat(f, 1));
  CHECK(c[1] == rat(f, -8));
  CHECK(c[0] == rat(f, 15));

  // companion matrix of t^2 - 3t + 2
  Mat comp = Mat::zero(2, 2, f);
  comp.at(0, 1) = rat(f, -2);
  comp.at(1, 0) = rat(f, 1);
  comp.at(1, 1) = rat(f, 3);
  auto cc = charpoly(comp);
  CHECK(cc[0] == rat(f, 2));
  CHECK(cc[1] == rat(f, -3));
  CHECK(cc[2] == rat(f, 1));
}

TEST_CASE("charpoly of a monomial diagonal and its Newton polygon") {
  FieldPtr f = F0();
  Mat d = Mat::zero(4, 4, f);
  d.at(0, 0) = mono(f, 1, Rational(-1));
  d.at(1, 1) = mono(f, 1, Rational(-2));
  d.at(2, 2) = mono(f, 1, Rational(1));
  d.at(3, 3) = mono(f, 1, Rational(2));
  auto c = charpoly(d);
  // coefficient valuations 0, -2, -3, -2, 0
  std::vector<long> expected = {0, -2, -3, -2, 0};
  for (int k = 0; k <= 4; ++k) CHECK(c[k].valuation() == Exponent(Rational(expected[k])));

  NewtonPolygon np = newton_polygon(c);
  auto roots = np.root_valuations(*f);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == Exponent(Rational(-2)));
  CHECK(roots[1] == Exponent(Rational(-1)));
  CHECK(roots[2] == Exponent(Rational(1)));
  CHECK(roots[3] == Exponent(Rational(2)));
}

TEST_CASE("newton polygon basics") {
  FieldPtr f = F0();
  // t - x: root valuation 1
  std::vector<ValuedScalar> p = {mono(f, -1, Rational(1)), rat(f, 1)};
  NewtonPolygon np = newton_polygon(p);
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0].slope == Exponent(Rational(-1)));
  CHECK(np.root_valuations(*f)[0] == Exponent(Rational(1)));

  // t^2 - (x + 1/x) t + 1: root valuations {-1, +1}
  std::vector<ValuedScalar> q = {rat(f, 1), -(mono(f, 1, Rational(1)) + mono(f, 1, Rational(-1))),
                                 rat(f, 1)};
  auto roots = newton_polygon(q).root_valuations(*f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Exponent(Rational(-1)));
  CHECK(roots[1] == Exponent(Rational(1)));
}

TEST_CASE("newton polygon flags unknown boundary coefficients") {
  FieldPtr f = F0();
  ValuedScalar unknown = ValuedScalar::variable(f).truncated(Exponent(Rational(-5)));
  std::vector<ValuedScalar> p = {unknown, rat(f, 1)};
  CHECK_THROWS_AS(newton_polygon(p), PrecisionError);
}

TEST_CASE("newton polygon against a conjugated monomial oracle") {
  FieldPtr f = F0();
  Prng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long> exps;
    const int n = 3;
    Mat d = Mat::zero(n, n, f);
    for (int i = 0; i < n; ++i) {
      long e = rng.range(-3, 3);
      exps.push_back(e);
      d.at(i, i) = mono(f, 1, Rational(e));
    }
    Mat p = random_rational_matrix(f, n, rng);
    if (!det(p).known_nonzero()) continue;
    Mat m = p * d * inverse(p);
    auto roots = newton_polygon(charpoly(m)).root_valuations(*f);
    std::sort(exps.begin(), exps.end());
    REQUIRE(roots.size() == exps.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(roots[i] == Exponent(Rational(exps[i])));
  }
}

TEST_CASE("solve basics and residuals") {
  FieldPtr f = F0();
  Mat id = Mat::identity(3, f);
  Prng rng(17);
  Mat b = random_rational_matrix(f, 3, rng);
  CHECK(solve(id, b).same_mod_precision(b));

  Mat u = Mat::identity(2, f);
  u.at(0, 1) = ValuedScalar::variable(f);
  Mat rhs = Mat::zero(2, 1, f);
  rhs.at(0, 0) = rat(f, 1);
  Mat z = solve(u, rhs);
  CHECK(z.at(0, 0) == rat(f, 1));
  CHECK(z.at(1, 0).is_exact_zero());

  for (int i = 0; i < 10; ++i) {
    Mat a = random_rational_matrix(f, 3, rng);
    if (!det(a).known_nonzero()) continue;
    Mat rhs2 = random_rational_matrix(f, 3, rng);
    Mat x = solve(a, rhs2);
    CHECK((a * x).same_mod_precision(rhs2));
  }

  Mat sing = Mat::zero(2, 2, f);
  sing.at(0, 0) = rat(f, 1);
  CHECK_THROWS_AS(solve(sing, Mat::identity(2, f)), DomainError);
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  FieldPtr f = F0();
  Prng rng(19);
  for (int i = 0; i < 8; ++i) {
    Mat m = random_series_matrix(f, 3, rng);
    Mat z = poly_at_matrix(charpoly(m), m);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(z.at(r, c).is_exact_zero());
  }
}
