#pragma once

#include "lamina/series.hpp"

namespace lamina {

// F(i) for the ordered field of a BasicSeries.  norm(z) = re^2 + im^2, and
// v(z) = v(norm)/2 is always exact even when |z| itself needs a square root.
template <class S>
struct Complexified {
  S re, im;

  Complexified() = default;
  Complexified(S r, S i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complexified(S r) : re(std::move(r)), im(S::zero(r.field())) {}

  static Complexified zero(FieldPtr f) { return {S::zero(f), S::zero(f)}; }
  static Complexified one(FieldPtr f) { return {S::one(f), S::zero(f)}; }
  static Complexified i_unit(FieldPtr f) { return {S::zero(f), S::one(f)}; }

  const FieldPtr& field() const { return re.field(); }

  Complexified operator+(const Complexified& o) const { return {re + o.re, im + o.im}; }
  Complexified operator-(const Complexified& o) const { return {re - o.re, im - o.im}; }
  Complexified operator-() const { return {-re, -im}; }
  Complexified operator*(const Complexified& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complexified& operator+=(const Complexified& o) { return *this = *this + o; }
  Complexified& operator-=(const Complexified& o) { return *this = *this - o; }
  Complexified& operator*=(const Complexified& o) { return *this = *this * o; }

  Complexified conj() const { return {re, -im}; }
  S norm() const { return re * re + im * im; }
  Complexified div_int(long k) const { return {re.div_int(k), im.div_int(k)}; }

  bool known_nonzero() const { return re.known_nonzero() || im.known_nonzero(); }
  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool is_exact_zero() const { return re.is_exact_zero() && im.is_exact_zero(); }

  // valuation of z in the unique extension of v to F(i): v(norm)/2
  Exponent valuation() const {
    if (!known_nonzero()) {
      if (is_exact()) throw DomainError("valuation of exact zero is +infinity");
      throw PrecisionError("complex valuation indistinguishable at current precision");
    }
    return norm().valuation() / 2;
  }

  static Complexified divide(const Complexified& a, const Complexified& b,
                             std::optional<Exponent> target = std::nullopt) {
    S n = b.norm();
    Complexified num = a * b.conj();
    return {S::divide(num.re, n, target), S::divide(num.im, n, target)};
  }

  bool same_mod_precision(const Complexified& o) const {
    return re.same_mod_precision(o.re) && im.same_mod_precision(o.im);
  }
  bool operator==(const Complexified& o) const { return re == o.re && im == o.im; }
};

using ComplexScalar = Complexified<ValuedScalar>;

}  // namespace lamina
