#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "lamina/rational.hpp"

namespace lamina {

// Element of the exponent group Q + alpha*Q, stored as the pair (a, b) with
// value a + b*alpha.  Addition, subtraction and division by integers are
// alpha-free; the total order lives on FieldParams, which knows alpha.
struct Exponent {
  Rational a;
  Rational b;

  Exponent() : a(0), b(0) {}
  explicit Exponent(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}

  Exponent operator+(const Exponent& o) const { return Exponent(a + o.a, b + o.b); }
  Exponent operator-(const Exponent& o) const { return Exponent(a - o.a, b - o.b); }
  Exponent operator-() const { return Exponent(-a, -b); }
  Exponent& operator+=(const Exponent& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Exponent& operator-=(const Exponent& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Exponent operator*(long k) const { return Exponent(a * k, b * k); }
  Exponent operator*(const Rational& k) const { return Exponent(a * k, b * k); }
  Exponent operator/(long k) const {
    if (k == 0) throw std::invalid_argument("Exponent division by zero");
    return Exponent(a / k, b / k);
  }
  bool operator==(const Exponent& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Exponent& o) const { return !(*this == o); }
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The field parameter alpha: either an exact rational or a quadratic surd
// u + w*sqrt(d) with d > 1 not a perfect square and w != 0.
class Alpha {
 public:
  static Alpha rational(Rational r);
  static Alpha surd(Rational u, Rational w, unsigned long d);

  bool is_rational() const { return rational_; }
  const Rational& rational_value() const;

  // sign of p + q*alpha, exact
  int sign_of_affine(const Rational& p, const Rational& q) const;

  double to_double() const;
  std::string to_string() const;

  bool operator==(const Alpha& o) const;

  const Rational& surd_u() const { return u_; }
  const Rational& surd_w() const { return w_; }
  unsigned long surd_d() const { return d_; }

 private:
  Alpha() = default;
  bool rational_ = true;
  Rational r_;           // rational case
  Rational u_, w_;       // surd case: u + w*sqrt(d)
  unsigned long d_ = 0;
};

enum class Backend { exact, hybrid };

class FieldParams;
using FieldPtr = std::shared_ptr<const FieldParams>;

// Shared description of the valued field: the exponent group Q + alpha*Q with
// its exact order, the truncation default, and the coefficient backend.
class FieldParams {
 public:
  explicit FieldParams(Alpha alpha, Rational default_precision_units = Rational(48),
                       Backend backend = Backend::exact);

  const Alpha& alpha() const { return alpha_; }
  Backend backend() const { return backend_; }
  const Rational& default_precision_units() const { return default_precision_units_; }

  // Normalized exponent a + b*alpha.  For rational alpha, folds b into a so
  // that Exponent::operator== is value equality.  Checks the overflow bound.
  Exponent exponent(Rational a, Rational b = Rational(0)) const;

  int cmp(const Exponent& x, const Exponent& y) const;
  bool lt(const Exponent& x, const Exponent& y) const { return cmp(x, y) < 0; }
  bool le(const Exponent& x, const Exponent& y) const { return cmp(x, y) <= 0; }
  bool eq(const Exponent& x, const Exponent& y) const { return cmp(x, y) == 0; }
  int sign(const Exponent& x) const { return alpha_.sign_of_affine(x.a, x.b); }
  bool is_zero(const Exponent& x) const { return x.a == 0 && x.b == 0; }
  const Exponent& min(const Exponent& x, const Exponent& y) const { return le(x, y) ? x : y; }
  const Exponent& max(const Exponent& x, const Exponent& y) const { return le(x, y) ? y : x; }

  double to_double(const Exponent& x) const;
  // "a", "a+b*alpha", "-b*alpha", ... exact rendering
  std::string render(const Exponent& x) const;

  bool operator==(const FieldParams& o) const;

 private:
  Alpha alpha_;
  Rational default_precision_units_;
  Backend backend_;
  Rational overflow_bound_;
};

FieldPtr make_field(Alpha alpha, Rational default_precision_units = Rational(48),
                    Backend backend = Backend::exact);
FieldPtr make_rational_field(const Rational& alpha, Backend backend = Backend::exact);

bool same_field(const FieldPtr& f, const FieldPtr& g);
void require_same_field(const FieldPtr& f, const FieldPtr& g);

}  // namespace lamina
