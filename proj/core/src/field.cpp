#include "lamina/field.hpp"

#include <cmath>

namespace lamina {

Alpha Alpha::rational(Rational r) {
  Alpha a;
  a.rational_ = true;
  a.r_ = std::move(r);
  return a;
}

Alpha Alpha::surd(Rational u, Rational w, unsigned long d) {
  Integer dz(d);
  if (d == 0 || mpz_perfect_square_p(dz.get_mpz_t())) {
    // sqrt(d) rational: fold into the rational case
    Integer rd;
    mpz_sqrt(rd.get_mpz_t(), dz.get_mpz_t());
    return rational(u + w * Rational(rd));
  }
  if (sgn(w) == 0) return rational(u);
  Alpha a;
  a.rational_ = false;
  a.u_ = std::move(u);
  a.w_ = std::move(w);
  a.d_ = d;
  return a;
}

const Rational& Alpha::rational_value() const {
  if (!rational_) throw FieldError("alpha is a quadratic surd, not a rational");
  return r_;
}

namespace {
// sign of A + B*sqrt(d), d > 0 not a perfect square
int surd_sign(const Rational& A, const Rational& B, unsigned long d) {
  const int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare A^2 against B^2 d; equality impossible (d not a square)
  const Rational lhs = A * A, rhs = B * B * Rational(static_cast<long>(d));
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : sb;
}
}  // namespace

int Alpha::sign_of_affine(const Rational& p, const Rational& q) const {
  if (rational_) return sgn(Rational(p + q * r_));
  // p + q(u + w sqrt(d)) = (p + q u) + (q w) sqrt(d)
  return surd_sign(p + q * u_, q * w_, d_);
}

double Alpha::to_double() const {
  if (rational_) return r_.get_d();
  return u_.get_d() + w_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Alpha::to_string() const {
  if (rational_) return lamina::to_string(r_);
  std::string s;
  if (sgn(u_) != 0) s = lamina::to_string(u_) + "+";
  s += "(" + lamina::to_string(w_) + ")*sqrt(" + std::to_string(d_) + ")";
  return s;
}

bool Alpha::operator==(const Alpha& o) const {
  if (rational_ != o.rational_) return false;
  if (rational_) return r_ == o.r_;
  return u_ == o.u_ && w_ == o.w_ && d_ == o.d_;
}

FieldParams::FieldParams(Alpha alpha, Rational default_precision_units, Backend backend)
    : alpha_(std::move(alpha)),
      default_precision_units_(std::move(default_precision_units)),
      backend_(backend),
      overflow_bound_(1000000) {
  if (sgn(default_precision_units_) <= 0) throw FieldError("default precision must be positive");
}

Exponent FieldParams::exponent(Rational a, Rational b) const {
  if (alpha_.is_rational() && sgn(b) != 0) {
    a += b * alpha_.rational_value();
    b = 0;
  }
  if (abs(a) > overflow_bound_ || abs(b) > overflow_bound_)
    throw FieldError("exponent overflow beyond configured bound");
  return Exponent(std::move(a), std::move(b));
}

int FieldParams::cmp(const Exponent& x, const Exponent& y) const {
  if (x.a == y.a && x.b == y.b) return 0;
  return alpha_.sign_of_affine(x.a - y.a, x.b - y.b);
}

double FieldParams::to_double(const Exponent& x) const {
  return x.a.get_d() + x.b.get_d() * alpha_.to_double();
}

std::string FieldParams::render(const Exponent& x) const {
  if (sgn(x.b) == 0) return to_string(x.a);
  std::string s;
  if (sgn(x.a) != 0) s = to_string(x.a);
  if (!s.empty() && sgn(x.b) > 0) s += "+";
  s += to_string(x.b) + "*alpha";
  return s;
}

bool FieldParams::operator==(const FieldParams& o) const {
  return alpha_ == o.alpha_ && backend_ == o.backend_;
}

FieldPtr make_field(Alpha alpha, Rational default_precision_units, Backend backend) {
  return std::make_shared<const FieldParams>(std::move(alpha), std::move(default_precision_units),
                                             backend);
}

FieldPtr make_rational_field(const Rational& alpha, Backend backend) {
  return make_field(Alpha::rational(alpha), Rational(48), backend);
}

bool same_field(const FieldPtr& f, const FieldPtr& g) {
  if (f == g) return true;
  if (!f || !g) return false;
  return *f == *g;
}

void require_same_field(const FieldPtr& f, const FieldPtr& g) {
  if (!same_field(f, g)) throw FieldError("incompatible field parameters");
}

}  // namespace lamina
