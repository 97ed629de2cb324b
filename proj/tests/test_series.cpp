#include <doctest.h>

#include "lamina/prng.hpp"
#include "lamina/serialization.hpp"
#include "lamina/series.hpp"

using namespace lamina;

namespace {

FieldPtr rational_field(long num = 0, long den = 1) {
  return make_field(Alpha::rational(Rational(num, den)));
}

ValuedScalar random_poly(FieldPtr f, Prng& rng, int terms = 4) {
  ValuedScalar x = ValuedScalar::zero(f);
  for (int i = 0; i < terms; ++i)
    x += ValuedScalar::monomial(f, rng.small_rational(9, 4),
                                Exponent(Rational(rng.range(-6, 6), rng.range(1, 3))));
  return x;
}

}  // namespace

TEST_CASE("product of binomials") {
  FieldPtr f = rational_field();
  ValuedScalar one = ValuedScalar::one(f);
  ValuedScalar x = ValuedScalar::variable(f);
  ValuedScalar p = (one + x) * (one - x);
  CHECK(p == one - x * x);
}

TEST_CASE("monomial exponents add") {
  FieldPtr f = make_field(Alpha::surd(Rational(0), Rational(1), 2));  // alpha = sqrt(2)
  ValuedScalar xa = ValuedScalar::variable_alpha(f);
  ValuedScalar x = ValuedScalar::variable(f);
  ValuedScalar p = xa * x;
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].exp == Exponent(Rational(1), Rational(1)));
}

TEST_CASE("valuation of a fixed sum") {
  // 4x^2 + 32x^-4 + 18 + 64x^-2 has valuation -4
  FieldPtr f = rational_field();
  auto mono = [&](long c, long e) {
    return ValuedScalar::monomial(f, Rational(c), Exponent(Rational(e)));
  };
  ValuedScalar s = mono(4, 2) + mono(32, -4) + mono(18, 0) + mono(64, -2);
  CHECK(s.valuation() == Exponent(Rational(-4)));
  CHECK(s.sign() == 1);
}

TEST_CASE("inverse by geometric expansion") {
  FieldPtr f = rational_field();
  ValuedScalar one = ValuedScalar::one(f);
  ValuedScalar x = ValuedScalar::variable(f);

  ValuedScalar inv = (one + x).inverse(Exponent(Rational(3)));
  ValuedScalar expect = one - x + x * x;
  CHECK(inv.same_mod_precision(expect));
  REQUIRE(inv.precision().has_value());
  CHECK(*inv.precision() == Exponent(Rational(3)));

  CHECK(x.inverse() == ValuedScalar::monomial(f, Rational(1), Exponent(Rational(-1))));

  // invert(x^2 (1+x)) to O(x^0): x^-2 - x^-1, and multiplying back gives 1 mod O(x)
  ValuedScalar v = x * x * (one + x);
  ValuedScalar w = v.inverse(Exponent(Rational(0)));
  ValuedScalar back = v * w;
  CHECK(w.same_mod_precision(ValuedScalar::monomial(f, Rational(1), Exponent(Rational(-2))) -
                             ValuedScalar::monomial(f, Rational(1), Exponent(Rational(-1)))));
  CHECK((back - one).truncated(Exponent(Rational(1))).same_mod_precision(ValuedScalar::zero(f)));
}

TEST_CASE("valuation sign compare basics") {
  FieldPtr f = rational_field();
  ValuedScalar h = ValuedScalar::monomial(f, Rational(1), Exponent(Rational(1, 2)));
  ValuedScalar x = ValuedScalar::variable(f);
  CHECK((h + x).valuation() == Exponent(Rational(1, 2)));

  ValuedScalar s = ValuedScalar::monomial(f, Rational(-3), Exponent(Rational(-2))) +
                   ValuedScalar::constant(f, Rational(7));
  CHECK(s.sign() == -1);

  // alpha = sqrt(2) - 1 < 1, so x^alpha > x
  FieldPtr fs = make_field(Alpha::surd(Rational(-1), Rational(1), 2));
  ValuedScalar xa = ValuedScalar::variable_alpha(fs);
  ValuedScalar xs = ValuedScalar::variable(fs);
  CHECK(xa.compare(xs) > 0);
}

TEST_CASE("sqrt expansions") {
  FieldPtr f = rational_field();
  ValuedScalar one = ValuedScalar::one(f);
  ValuedScalar x = ValuedScalar::variable(f);

  // sqrt(x^2 (1 + x)) = x (1 + x/2 - x^2/8 + ...)
  ValuedScalar v = x * x * (one + x);
  ValuedScalar r = v.sqrt(Exponent(Rational(4)));
  ValuedScalar expect = x + (x * x).scaled(Rational(1, 2)) - (x * x * x).scaled(Rational(1, 8));
  CHECK(r.same_mod_precision(expect));
  CHECK((r * r - v).same_mod_precision(ValuedScalar::zero(f)));

  CHECK(ValuedScalar::constant(f, Rational(4)).sqrt() == ValuedScalar::constant(f, Rational(2)));
  CHECK_THROWS_AS(ValuedScalar::constant(f, Rational(2)).sqrt(), DomainError);

  // the hybrid backend accepts non-square leading coefficients
  FieldPtr hf = make_field(Alpha::rational(Rational(0)), Rational(48), Backend::hybrid);
  HybridScalar two = HybridScalar::constant(hf, Rational(2));
  HybridScalar root = two.sqrt();
  CHECK(root.leading_coeff() == doctest::Approx(1.4142135623).epsilon(1e-9));
}

TEST_CASE("field axioms on random polynomial elements") {
  FieldPtr f = rational_field();
  Prng rng(41);
  for (int i = 0; i < 40; ++i) {
    ValuedScalar a = random_poly(f, rng), b = random_poly(f, rng), c = random_poly(f, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("ultrametric inequality and order compatibility") {
  FieldPtr f = rational_field();
  Prng rng(42);
  const FieldParams& F = *f;
  for (int i = 0; i < 60; ++i) {
    ValuedScalar a = random_poly(f, rng), b = random_poly(f, rng);
    if (!a.known_nonzero() || !b.known_nonzero()) continue;
    ValuedScalar s = a + b;
    Exponent m = F.min(a.valuation(), b.valuation());
    if (s.known_nonzero()) {
      CHECK(F.cmp(s.valuation(), m) >= 0);
      if (F.cmp(a.valuation(), b.valuation()) != 0) CHECK(s.valuation() == m);
    }
    // order compatibility: |x| <= |y| implies v(x) >= v(y)
    ValuedScalar xa = a.abs(), yb = b.abs();
    if (xa.compare(yb) <= 0)
      CHECK(F.cmp(xa.valuation(), yb.valuation()) >= 0);
    else
      CHECK(F.cmp(yb.valuation(), xa.valuation()) >= 0);
  }
}

TEST_CASE("inverse and sqrt round trips at precision") {
  FieldPtr f = rational_field();
  Prng rng(43);
  for (int i = 0; i < 25; ++i) {
    ValuedScalar a = random_poly(f, rng);
    if (!a.known_nonzero()) continue;
    ValuedScalar inv = a.inverse();
    CHECK((a * inv - ValuedScalar::one(f)).same_mod_precision(ValuedScalar::zero(f)));
    ValuedScalar sq = a * a;
    ValuedScalar r = sq.sqrt();
    CHECK((r * r - sq).same_mod_precision(ValuedScalar::zero(f)));
  }
}

TEST_CASE("the valuation is trivial on the prime field") {
  FieldPtr f = rational_field();
  for (long n : {1L, -1L, 2L, -7L, 360L})
    CHECK(ValuedScalar::constant(f, Rational(n)).valuation() == Exponent());
}

TEST_CASE("indistinguishable-from-zero raises") {
  FieldPtr f = rational_field();
  ValuedScalar x = ValuedScalar::variable(f);
  ValuedScalar tiny = x.truncated(Exponent(Rational(1)));  // all terms dropped
  CHECK(!tiny.known_nonzero());
  CHECK(!tiny.is_exact());
  CHECK_THROWS_AS(tiny.sign(), PrecisionError);
  CHECK_THROWS_AS(tiny.valuation(), PrecisionError);
  CHECK_THROWS_AS((void)ValuedScalar::divide(ValuedScalar::one(f), tiny), PrecisionError);
}

TEST_CASE("exponent overflow guard") {
  FieldPtr f = rational_field();
  CHECK_THROWS_AS(ValuedScalar::monomial(f, Rational(1), Exponent(Rational(2000000))),
                  FieldError);
}

TEST_CASE("precision propagation through multiplication") {
  FieldPtr f = rational_field();
  ValuedScalar x = ValuedScalar::variable(f);
  ValuedScalar a = (ValuedScalar::one(f) + x).truncated(Exponent(Rational(5)));
  ValuedScalar b = ValuedScalar::monomial(f, Rational(1), Exponent(Rational(2)));
  ValuedScalar p = a * b;
  REQUIRE(p.precision().has_value());
  CHECK(*p.precision() == Exponent(Rational(7)));
}

TEST_CASE("json round trip") {
  FieldPtr f = make_field(Alpha::rational(Rational(1, 4)));
  ValuedScalar s = ValuedScalar::monomial(f, Rational(32), Exponent(Rational(-4), Rational(4))) +
                   ValuedScalar::constant(f, Rational(18));
  s = s.truncated(Exponent(Rational(10)));
  nlohmann::json j = to_json(s);
  ValuedScalar back = scalar_from_json(j, f);
  CHECK(back == s);
  CHECK(j.at("terms").size() == 2);
  CHECK(!j.at("precision").is_null());
}

TEST_CASE("rational alpha merges exponent collisions") {
  // at alpha = 1/2 the exponents -4 + 4 alpha and -2 collide and the
  // coefficients add
  FieldPtr f = make_field(Alpha::rational(Rational(1, 2)));
  ValuedScalar a = ValuedScalar::monomial(f, Rational(32), Exponent(Rational(-4), Rational(4)));
  ValuedScalar b = ValuedScalar::monomial(f, Rational(64), Exponent(Rational(-2)));
  ValuedScalar s = a + b;
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].coeff == Rational(96));
  CHECK(s.valuation() == Exponent(Rational(-2)));
}
