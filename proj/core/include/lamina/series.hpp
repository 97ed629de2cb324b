#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lamina/field.hpp"

namespace lamina {

// Raised when a value cannot be decided at the current truncation precision
// (indistinguishable-from-zero signs, unknown valuations, lost pivots).
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on genuine domain violations: division by exact zero, sqrt of a
// negative element, non-square leading coefficient in the exact backend, ...
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactCoeffModel {
  using value_type = Rational;
  static constexpr bool exact = true;
  static bool is_zero(const value_type& c, double /*scale*/) { return sgn(c) == 0; }
  static int sign(const value_type& c) { return sgn(c); }
  static double to_double(const value_type& c) { return c.get_d(); }
  static double magnitude(const value_type& c) { return std::abs(c.get_d()); }
  static value_type from_rational(const Rational& q) { return q; }
  static std::optional<value_type> sqrt(const value_type& c) { return exact_sqrt(c); }
};

// Float coefficients with exact exponents; a relative guard treats
// coefficients that could have been cancelled away as zero.
struct FloatCoeffModel {
  using value_type = double;
  static constexpr bool exact = false;
  static constexpr double rel_guard = 1e-9;
  static bool is_zero(value_type c, double scale) {
    return c == 0.0 || std::abs(c) <= rel_guard * scale;
  }
  static int sign(value_type c) { return c > 0 ? 1 : (c < 0 ? -1 : 0); }
  static double to_double(value_type c) { return c; }
  static double magnitude(value_type c) { return std::abs(c); }
  static value_type from_rational(const Rational& q) { return q.get_d(); }
  static std::optional<value_type> sqrt(value_type c) {
    if (c < 0) return std::nullopt;
    return std::sqrt(c);
  }
};

// Truncated generalized power series over the exponent group Q + alpha*Q.
// Terms are strictly increasing in the field order and all lie below
// `precision` when that is finite; no stored coefficient is zero.  The formal
// variable is a positive infinitesimal: v(X) = 1, X > 0, and the leading
// (lowest-exponent) coefficient decides the sign.  precision == nullopt means
// the element is exact.
template <class CM>
class BasicSeries {
 public:
  using Coeff = typename CM::value_type;
  struct Term {
    Exponent exp;
    Coeff coeff;
  };

  BasicSeries() = default;

  static BasicSeries zero(FieldPtr f) { return BasicSeries(std::move(f)); }
  static BasicSeries one(FieldPtr f) { return constant(std::move(f), Rational(1)); }
  static BasicSeries constant(FieldPtr f, const Rational& q) {
    return monomial(std::move(f), q, Exponent());
  }
  static BasicSeries monomial(FieldPtr f, const Rational& c, const Exponent& e) {
    BasicSeries s(std::move(f));
    if (sgn(c) != 0) {
      Coeff cc = CM::from_rational(c);
      s.scale_ = CM::magnitude(cc);
      s.terms_.push_back(Term{s.field_->exponent(e.a, e.b), std::move(cc)});
    }
    return s;
  }
  // the formal variable X (exponent 1)
  static BasicSeries variable(FieldPtr f) {
    return monomial(std::move(f), Rational(1), Exponent(Rational(1)));
  }
  // X^alpha
  static BasicSeries variable_alpha(FieldPtr f) {
    return monomial(std::move(f), Rational(1), Exponent(Rational(0), Rational(1)));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Exponent>& precision() const { return prec_; }
  bool is_exact() const { return !prec_.has_value(); }
  double guard_scale() const { return scale_; }

  bool is_exact_zero() const { return terms_.empty() && is_exact(); }
  bool known_nonzero() const { return !terms_.empty(); }
  // the element is provably zero or provably nonzero
  bool decidable() const { return known_nonzero() || is_exact(); }

  Exponent valuation() const {
    if (!terms_.empty()) return terms_.front().exp;
    if (is_exact()) throw DomainError("valuation of exact zero is +infinity");
    throw PrecisionError("valuation indistinguishable from +infinity at current precision");
  }
  std::optional<Exponent> try_valuation() const {
    if (!terms_.empty()) return terms_.front().exp;
    return std::nullopt;
  }

  int sign() const {
    if (!terms_.empty()) return CM::sign(guarded_leading());
    if (is_exact()) return 0;
    throw PrecisionError("sign indistinguishable from zero at current precision");
  }

  const Coeff& leading_coeff() const {
    if (terms_.empty()) throw PrecisionError("no leading term");
    return terms_.front().coeff;
  }

  BasicSeries operator-() const {
    BasicSeries r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  BasicSeries operator+(const BasicSeries& o) const {
    require_same_field(field_, o.field_);
    BasicSeries r(field_);
    r.prec_ = min_prec(prec_, o.prec_);
    r.scale_ = std::max(scale_, o.scale_);
    r.terms_ = merge_terms(*field_, terms_, o.terms_, r.scale_);
    r.drop_beyond_precision();
    return r;
  }

  BasicSeries operator-(const BasicSeries& o) const { return *this + (-o); }

  BasicSeries operator*(const BasicSeries& o) const {
    require_same_field(field_, o.field_);
    BasicSeries r(field_);
    r.prec_ = mul_prec(*this, o);
    r.scale_ = std::max({scale_, o.scale_, scale_ * o.scale_});
    std::vector<Term> acc;
    for (const auto& ta : terms_) {
      std::vector<Term> row;
      row.reserve(o.terms_.size());
      for (const auto& tb : o.terms_) {
        Exponent e = ta.exp + tb.exp;
        if (r.prec_ && !field_->lt(e, *r.prec_)) break;  // o sorted: the rest is larger
        row.push_back(Term{field_->exponent(e.a, e.b), ta.coeff * tb.coeff});
      }
      acc = merge_terms(*field_, acc, row, r.scale_);
    }
    r.terms_ = std::move(acc);
    r.drop_beyond_precision();
    return r;
  }

  BasicSeries& operator+=(const BasicSeries& o) { return *this = *this + o; }
  BasicSeries& operator-=(const BasicSeries& o) { return *this = *this - o; }
  BasicSeries& operator*=(const BasicSeries& o) { return *this = *this * o; }

  BasicSeries scaled(const Rational& q) const {
    if (sgn(q) == 0) return zero(field_);
    BasicSeries r(field_);
    r.prec_ = prec_;
    r.scale_ = scale_;
    Coeff c = CM::from_rational(q);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.exp, t.coeff * c});
    return r;
  }

  // divide by a nonzero integer, exact
  BasicSeries div_int(long k) const {
    if (k == 0) throw DomainError("division by zero integer");
    return scaled(Rational(1, k));
  }

  // multiply by the monomial X^e
  BasicSeries shifted(const Exponent& e) const {
    BasicSeries r(field_);
    r.scale_ = scale_;
    if (prec_) {
      Exponent p = *prec_ + e;
      r.prec_ = field_->exponent(p.a, p.b);
    }
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponent ne = t.exp + e;
      r.terms_.push_back(Term{field_->exponent(ne.a, ne.b), t.coeff});
    }
    return r;
  }

  BasicSeries truncated(const Exponent& p) const {
    BasicSeries r(*this);
    Exponent pn = field_->exponent(p.a, p.b);
    r.prec_ = r.prec_ ? field_->min(*r.prec_, pn) : pn;
    r.drop_beyond_precision();
    return r;
  }

  // Quotient a/b.  The result is exact when both inputs are exact and the
  // leading-term long division terminates; otherwise it carries the precision
  // implied by the inputs, the optional absolute `target`, and the field's
  // default truncation budget.
  static BasicSeries divide(const BasicSeries& a, const BasicSeries& b,
                            std::optional<Exponent> target = std::nullopt) {
    require_same_field(a.field_, b.field_);
    const FieldParams& F = *a.field_;
    if (b.terms_.empty()) {
      if (b.is_exact()) throw DomainError("division by exact zero");
      throw PrecisionError("divisor indistinguishable from zero at current precision");
    }
    if (a.terms_.empty() && a.is_exact()) return zero(a.field_);
    const Exponent vb = b.terms_.front().exp;

    std::optional<Exponent> limit;  // certified precision bound from the inputs
    auto consider = [&](const Exponent& e) {
      Exponent en = F.exponent(e.a, e.b);
      limit = limit ? F.min(*limit, en) : en;
    };
    if (a.prec_) consider(*a.prec_ - vb);
    if (b.prec_ && !a.terms_.empty())
      consider(a.terms_.front().exp + *b.prec_ - vb - vb);
    if (target) consider(*target);

    const bool exact_inputs = a.is_exact() && b.is_exact();
    // working bound: where we stop producing terms even in the exact case
    Exponent wlimit = limit ? *limit
                            : F.exponent((a.terms_.front().exp - vb).a +
                                             F.default_precision_units(),
                                         (a.terms_.front().exp - vb).b);

    BasicSeries rem = a;
    BasicSeries q = zero(a.field_);
    q.scale_ = std::max(a.scale_, b.scale_);
    long safety = 200000;
    while (!rem.terms_.empty()) {
      Exponent e = rem.terms_.front().exp - vb;
      if (!F.lt(e, wlimit)) break;
      if (--safety < 0) throw PrecisionError("series division exceeded step budget");
      BasicSeries t(a.field_);
      Coeff c = rem.terms_.front().coeff / b.terms_.front().coeff;
      t.scale_ = CM::magnitude(c);
      t.terms_.push_back(Term{F.exponent(e.a, e.b), std::move(c)});
      q = q + t;
      rem = rem - t * b;
    }
    if (rem.terms_.empty() && exact_inputs) {
      q.prec_ = std::nullopt;  // the division is exact
    } else {
      q.prec_ = limit ? *limit : wlimit;
      q.drop_beyond_precision();
    }
    return q;
  }

  BasicSeries inverse(std::optional<Exponent> target = std::nullopt) const {
    return divide(one(field_), *this, std::move(target));
  }

  // Square root of a positive element; result^2 = *this + O(X^target).  The
  // exponent v(x)/2 always lies in Q + alpha*Q; in the exact backend the
  // leading coefficient must be a rational square.
  BasicSeries sqrt(std::optional<Exponent> target = std::nullopt) const {
    const FieldParams& F = *field_;
    if (terms_.empty()) {
      if (is_exact()) return zero(field_);
      throw PrecisionError("sqrt of element indistinguishable from zero");
    }
    if (CM::sign(terms_.front().coeff) < 0) throw DomainError("sqrt of negative element");
    const Exponent v = terms_.front().exp;
    const Exponent vhalf = v / 2;
    auto c0 = CM::sqrt(terms_.front().coeff);
    if (!c0)
      throw DomainError("non-square leading coefficient in exact backend (use the hybrid backend)");

    std::optional<Exponent> lim;  // absolute precision of the result
    if (prec_) {
      Exponent e = *prec_ - vhalf;
      lim = F.exponent(e.a, e.b);
    }
    if (target) {
      Exponent tn = F.exponent(target->a, target->b);
      lim = lim ? F.min(*lim, tn) : tn;
    }
    if (!lim) lim = F.exponent(vhalf.a + F.default_precision_units(), vhalf.b);
    Exponent rel = *lim - vhalf;  // required precision of sqrt(1 + tail)
    if (F.sign(rel) <= 0) throw PrecisionError("sqrt target precision below leading term");

    // u = x / (c X^v) = 1 + t with v(t) > 0, known modulo O(X^rel)
    BasicSeries lead(field_);
    lead.terms_.push_back(Term{F.exponent(v.a, v.b), terms_.front().coeff});
    lead.scale_ = scale_;
    BasicSeries u = divide(*this, lead, F.exponent(rel.a, rel.b));

    // Newton iteration for z = 1/sqrt(u): z <- z(3 - u z^2)/2, quadratically
    // convergent in valuation; stop at a fixpoint modulo the working precision.
    BasicSeries z = one(field_);
    const BasicSeries three = constant(field_, Rational(3));
    for (int it = 0; it < 64; ++it) {
      BasicSeries nz = (z * (three - u * z * z)).div_int(2).truncated(rel);
      if (nz.same_mod_precision(z)) {
        z = nz;
        break;
      }
      z = nz;
      if (it == 63) throw PrecisionError("sqrt Newton iteration did not stabilize");
    }
    BasicSeries y = (u * z).truncated(rel);  // sqrt(u)
    BasicSeries head(field_);
    head.terms_.push_back(Term{F.exponent(vhalf.a, vhalf.b), *c0});
    head.scale_ = CM::magnitude(*c0);
    BasicSeries r = (head * y).truncated(*lim);
    if ((r * r - *this).known_nonzero())
      throw PrecisionError("sqrt validation failed at requested precision");
    if (is_exact()) {
      BasicSeries check = r;
      check.prec_ = std::nullopt;
      if ((check * check - *this).is_exact_zero()) return check;  // exact square
    }
    return r;
  }

  BasicSeries pow(long k) const {
    if (k == 0) return one(field_);
    if (k < 0) return inverse().pow(-k);
    BasicSeries base = *this, acc = one(field_);
    while (k > 0) {
      if (k & 1) acc = acc * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return acc;
  }

  int compare(const BasicSeries& o) const { return (*this - o).sign(); }
  bool less_than(const BasicSeries& o) const { return compare(o) < 0; }
  BasicSeries abs() const { return sign() < 0 ? -*this : *this; }

  // structural equality (terms and precision marker)
  bool operator==(const BasicSeries& o) const {
    if (!same_field(field_, o.field_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].exp != o.terms_[i].exp || !(terms_[i].coeff == o.terms_[i].coeff))
        return false;
    if (prec_.has_value() != o.prec_.has_value()) return false;
    if (prec_ && *prec_ != *o.prec_) return false;
    return true;
  }
  bool operator!=(const BasicSeries& o) const { return !(*this == o); }

  // no distinguishable difference at the joint precision
  bool same_mod_precision(const BasicSeries& o) const { return !(*this - o).known_nonzero(); }

 private:
  explicit BasicSeries(FieldPtr f) : field_(std::move(f)) {}

  std::optional<Exponent> min_prec(const std::optional<Exponent>& p,
                                   const std::optional<Exponent>& q) const {
    if (!p) return q;
    if (!q) return p;
    return field_->min(*p, *q);
  }

  static std::optional<Exponent> mul_prec(const BasicSeries& x, const BasicSeries& y) {
    const FieldParams& F = *x.field_;
    std::optional<Exponent> p;
    auto consider = [&](const Exponent& e) {
      Exponent en = F.exponent(e.a, e.b);
      p = p ? F.min(*p, en) : en;
    };
    if (x.prec_) {
      if (!y.terms_.empty()) consider(*x.prec_ + y.terms_.front().exp);
      if (y.prec_) consider(*x.prec_ + *y.prec_);
    }
    if (y.prec_ && !x.terms_.empty()) consider(*y.prec_ + x.terms_.front().exp);
    return p;
  }

  static std::vector<Term> merge_terms(const FieldParams& F, const std::vector<Term>& x,
                                       const std::vector<Term>& y, double scale) {
    for (const auto& t : x) scale = std::max(scale, CM::magnitude(t.coeff));
    for (const auto& t : y) scale = std::max(scale, CM::magnitude(t.coeff));
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      int which;
      if (i == x.size())
        which = 1;
      else if (j == y.size())
        which = -1;
      else
        which = F.cmp(x[i].exp, y[j].exp);
      if (which < 0) {
        out.push_back(x[i++]);
      } else if (which > 0) {
        out.push_back(y[j++]);
      } else {
        Coeff c = x[i].coeff + y[j].coeff;
        if (!CM::is_zero(c, scale)) out.push_back(Term{x[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    if (out.size() > 200000) throw PrecisionError("series term count exceeded budget");
    return out;
  }

  const Coeff& guarded_leading() const {
    if constexpr (!CM::exact) {
      if (CM::is_zero(terms_.front().coeff, scale_))
        throw PrecisionError("hybrid cancellation guard tripped on leading coefficient");
    }
    return terms_.front().coeff;
  }

  void drop_beyond_precision() {
    if (!prec_) return;
    while (!terms_.empty() && !field_->lt(terms_.back().exp, *prec_)) terms_.pop_back();
  }

  FieldPtr field_;
  std::vector<Term> terms_;
  std::optional<Exponent> prec_;
  double scale_ = 0.0;
};

using ValuedScalar = BasicSeries<ExactCoeffModel>;
using HybridScalar = BasicSeries<FloatCoeffModel>;

inline HybridScalar to_hybrid(const ValuedScalar& x) {
  FieldPtr hf = std::make_shared<const FieldParams>(x.field()->alpha(),
                                                    x.field()->default_precision_units(),
                                                    Backend::hybrid);
  HybridScalar r = HybridScalar::zero(hf);
  for (const auto& t : x.terms())
    r += HybridScalar::monomial(hf, t.coeff, t.exp);
  if (x.precision()) r = r.truncated(*x.precision());
  return r;
}

}  // namespace lamina
