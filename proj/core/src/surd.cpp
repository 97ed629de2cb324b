#include "lamina/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace lamina {

QuadraticSurd::QuadraticSurd(Rational p, Rational q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw std::invalid_argument("negative radicand");
  if (sgn(q_) == 0) {
    d_ = 0;
    return;
  }
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), d_.get_mpz_t());
    p_ += q_ * Rational(r);
    q_ = 0;
    d_ = 0;
  }
}

int QuadraticSurd::sign() const {
  const int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  const Rational lhs = p_ * p_, rhs = q_ * q_ * Rational(d_);
  const int c = ::cmp(lhs, rhs);  // equality impossible: d is not a square here
  return c > 0 ? sp : sq;
}

int QuadraticSurd::cmp(const QuadraticSurd& o) const {
  // sign of (p1-p2) + q1 sqrt(d1) - q2 sqrt(d2)
  const Rational A = p_ - o.p_;
  if (sgn(q_) == 0 && sgn(o.q_) == 0) return sgn(A);
  if (sgn(o.q_) == 0 || d_ == o.d_)
    return QuadraticSurd(A, q_ - (d_ == o.d_ ? o.q_ : Rational(0)), d_).sign();
  if (sgn(q_) == 0) return -QuadraticSurd(-A, o.q_, o.d_).sign();
  // t = A + q1 sqrt(d1), u = q2 sqrt(d2); compare t with u
  const QuadraticSurd t(A, q_, d_);
  const int st = t.sign();
  const int su = sgn(o.q_);
  if (st == 0) return -su;
  if (st != su) return st;
  // same sign: compare t^2 and u^2 = q2^2 d2 (t^2 is a surd in sqrt(d1))
  const QuadraticSurd t2(A * A + q_ * q_ * Rational(d_), A * q_ * 2, d_);
  const QuadraticSurd diff(t2.p() - o.q_ * o.q_ * Rational(o.d_), t2.q(), t2.d());
  const int c2 = diff.sign();
  return st > 0 ? c2 : -c2;
}

namespace {
void require_same_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (!a.is_rational() && !b.is_rational() && a.d() != b.d())
    throw std::invalid_argument("mixed radicands in surd arithmetic");
}
Integer common_d(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a.is_rational() ? b.d() : a.d();
}
}  // namespace

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  require_same_radicand(*this, o);
  return QuadraticSurd(p_ + o.p_, q_ + o.q_, common_d(*this, o));
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
  require_same_radicand(*this, o);
  return QuadraticSurd(p_ - o.p_, q_ - o.q_, common_d(*this, o));
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  require_same_radicand(*this, o);
  const Integer d = common_d(*this, o);
  return QuadraticSurd(p_ * o.p_ + q_ * o.q_ * Rational(d), p_ * o.q_ + q_ * o.p_, d);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
  require_same_radicand(*this, o);
  const Integer d = common_d(*this, o);
  const Rational n = o.p_ * o.p_ - o.q_ * o.q_ * Rational(d);
  if (sgn(n) == 0) throw std::invalid_argument("surd division by zero");
  QuadraticSurd num = *this * o.conjugate();
  return QuadraticSurd(num.p_ / n, num.q_ / n, d);
}

double QuadraticSurd::to_double() const {
  return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return lamina::to_string(p_);
  std::string s;
  if (sgn(p_) != 0) s = lamina::to_string(p_);
  if (!s.empty() && sgn(q_) > 0) s += "+";
  s += "(" + lamina::to_string(q_) + ")*sqrt(" + d_.get_str() + ")";
  return s;
}

}  // namespace lamina
