#pragma once

#include <optional>
#include <string>

#include "lamina/rational.hpp"

namespace lamina {

// Exact real quadratic surd p + q*sqrt(d), d a nonnegative integer.  d is
// reduced to 0 when sqrt(d) is rational, so q != 0 implies irrational.
// Comparisons across different d are exact (two sign-preserving squarings);
// ring arithmetic is only defined within a common sqrt(d).
class QuadraticSurd {
 public:
  QuadraticSurd() : p_(0), q_(0), d_(0) {}
  QuadraticSurd(Rational p, Rational q, Integer d);
  static QuadraticSurd rational(Rational p) { return QuadraticSurd(std::move(p), 0, 0); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return sgn(q_) == 0; }

  int sign() const;
  int cmp(const QuadraticSurd& o) const;
  bool operator==(const QuadraticSurd& o) const { return cmp(o) == 0; }
  bool operator!=(const QuadraticSurd& o) const { return cmp(o) != 0; }
  bool operator<(const QuadraticSurd& o) const { return cmp(o) < 0; }

  // conjugate p - q*sqrt(d)
  QuadraticSurd conjugate() const { return QuadraticSurd(p_, -q_, d_); }

  // arithmetic within Q(sqrt(d)); throws on mixed radicands
  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator/(const QuadraticSurd& o) const;
  QuadraticSurd operator-() const { return QuadraticSurd(-p_, -q_, d_); }

  double to_double() const;
  std::string to_string() const;

 private:
  Rational p_, q_;
  Integer d_;
};

}  // namespace lamina
