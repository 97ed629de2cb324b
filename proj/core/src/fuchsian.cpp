#include "lamina/fuchsian.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamina {

namespace {

bool inverse_letters(char x, char y) {
  return x != y && std::toupper(static_cast<unsigned char>(x)) ==
                       std::toupper(static_cast<unsigned char>(y));
}

void reduce_append(std::string& out, char ch) {
  if (!out.empty() && inverse_letters(out.back(), ch))
    out.pop_back();
  else
    out.push_back(ch);
}

}  // namespace

GroupWord GroupWord::parse(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case 'a':
      case 'A':
      case 'b':
      case 'B':
        reduce_append(out, ch);
        break;
      case 'c':  // c3 = c1^-1 c2^-1
        reduce_append(out, 'A');
        reduce_append(out, 'B');
        break;
      case 'C':  // c3^-1 = c2 c1
        reduce_append(out, 'b');
        reduce_append(out, 'a');
        break;
      case ' ':
        break;
      default:
        throw std::invalid_argument(std::string("bad word letter: ") + ch);
    }
  }
  GroupWord w;
  w.letters_ = std::move(out);
  return w;
}

GroupWord GroupWord::from_reduced(std::string letters) {
  GroupWord w;
  w.letters_ = std::move(letters);
  return w;
}

GroupWord GroupWord::inverse() const {
  std::string out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(std::isupper(static_cast<unsigned char>(*it))
                      ? std::tolower(static_cast<unsigned char>(*it))
                      : std::toupper(static_cast<unsigned char>(*it)));
  return from_reduced(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::string out = letters_;
  for (char ch : o.letters_) reduce_append(out, ch);
  return from_reduced(std::move(out));
}

GroupWord GroupWord::power(int k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  int n = k < 0 ? -k : k;
  GroupWord acc;
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

GroupWord GroupWord::conjugated_by(const GroupWord& u) const { return u * *this * u.inverse(); }

GroupWord GroupWord::cyclically_reduced() const {
  std::string s = letters_;
  while (s.size() >= 2 && inverse_letters(s.front(), s.back())) {
    s.erase(s.begin());
    s.pop_back();
  }
  return from_reduced(std::move(s));
}

GroupWord GroupWord::conjugacy_representative() const {
  GroupWord cyc = cyclically_reduced();
  const std::string& s = cyc.letters_;
  if (s.empty()) return cyc;
  auto best = s;
  auto consider = [&](const std::string& t) {
    for (std::size_t r = 0; r < t.size(); ++r) {
      std::string rot = t.substr(r) + t.substr(0, r);
      if (rot < best) best = rot;
    }
  };
  consider(s);
  consider(cyc.inverse().letters_);
  return from_reduced(best);
}

MobiusElement MobiusElement::operator*(const MobiusElement& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool MobiusElement::is_identity_up_to_scale() const { return b == 0 && c == 0 && a == d; }

MobiusElement evaluate_mobius(const GroupWord& w) {
  static const MobiusElement g1{1, 2, 0, 1};
  static const MobiusElement g2{1, 0, -2, 1};
  MobiusElement m = MobiusElement::identity();
  for (char ch : w.letters()) {
    switch (ch) {
      case 'a': m = m * g1; break;
      case 'A': m = m * g1.inverse(); break;
      case 'b': m = m * g2; break;
      case 'B': m = m * g2.inverse(); break;
      default: throw std::invalid_argument("unreduced word letter");
    }
  }
  return m;
}

MobiusClass classify(const MobiusElement& m) {
  const Rational dt = m.det();
  if (sgn(dt) <= 0) throw std::invalid_argument("orientation-reversing Mobius element");
  if (m.is_identity_up_to_scale()) return MobiusClass::identity;
  const Rational t2 = m.trace() * m.trace();
  const int c = cmp(t2, 4 * dt);
  if (c > 0) return MobiusClass::hyperbolic;
  if (c == 0) return MobiusClass::parabolic;
  return MobiusClass::elliptic;
}

const QuadraticSurd& BoundaryPoint::value() const {
  if (infinite_) throw std::logic_error("value() of the point at infinity");
  return v_;
}

bool BoundaryPoint::operator==(const BoundaryPoint& o) const {
  if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
  return v_ == o.v_;
}

namespace {

// clear denominators and divide by the content: same Mobius action, integer
// entries, det > 0
struct IntMobius {
  Integer a, b, c, d;
};

IntMobius normalize(const MobiusElement& m) {
  Integer l = 1;
  for (const Rational* q : {&m.a, &m.b, &m.c, &m.d})
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
  Integer A = m.a.get_num() * (l / m.a.get_den());
  Integer B = m.b.get_num() * (l / m.b.get_den());
  Integer C = m.c.get_num() * (l / m.c.get_den());
  Integer D = m.d.get_num() * (l / m.d.get_den());
  Integer g = 0;
  for (const Integer* z : {&A, &B, &C, &D}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z->get_mpz_t());
  if (g > 1) {
    A /= g;
    B /= g;
    C /= g;
    D /= g;
  }
  return {A, B, C, D};
}

Rational make_rat(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MobiusElement& m) {
  if (classify(m) != MobiusClass::hyperbolic)
    throw std::invalid_argument("fixed points of a non-hyperbolic element");
  const IntMobius n = normalize(m);
  const Integer det = n.a * n.d - n.b * n.c;
  if (n.c == 0) {
    // infinity is fixed; the finite fixed point solves (d-a)t = b
    BoundaryPoint finite = BoundaryPoint(QuadraticSurd::rational(make_rat(n.b, n.d - n.a)));
    // the derivative at infinity wins when a^2 > d^2
    if (n.a * n.a > n.d * n.d) return {finite, BoundaryPoint::infinity()};
    return {BoundaryPoint::infinity(), finite};
  }
  // roots of c t^2 + (d-a) t - b
  const Integer disc = (n.d - n.a) * (n.d - n.a) + 4 * n.b * n.c;  // = tr^2 - 4 det
  const Rational half_sum = make_rat(n.a - n.d, 2 * n.c);
  const Rational half_coef = make_rat(1, 2 * n.c);
  QuadraticSurd r1(half_sum, half_coef, disc);
  QuadraticSurd r2(half_sum, -half_coef, disc);
  // attracting root: |f'(t)| = det/(c t + d)^2 < 1
  auto attracting = [&](const QuadraticSurd& t) {
    QuadraticSurd u = QuadraticSurd::rational(Rational(n.c)) * t + QuadraticSurd::rational(Rational(n.d));
    return (u * u - QuadraticSurd::rational(Rational(det))).sign() > 0;
  };
  const bool r1_attracting = attracting(r1);
  if (r1_attracting == attracting(r2))
    throw std::logic_error("fixed point derivative test degenerate");
  if (r1_attracting) return {BoundaryPoint(r2), BoundaryPoint(r1)};
  return {BoundaryPoint(r1), BoundaryPoint(r2)};
}

BoundaryPoint mobius_apply(const MobiusElement& m, const BoundaryPoint& p) {
  if (sgn(m.det()) == 0) throw std::invalid_argument("singular Mobius element");
  if (p.is_infinity()) {
    if (sgn(m.c) == 0) return BoundaryPoint::infinity();
    return BoundaryPoint(QuadraticSurd::rational(m.a / m.c));
  }
  const QuadraticSurd& t = p.value();
  QuadraticSurd den = QuadraticSurd::rational(m.c) * t + QuadraticSurd::rational(m.d);
  if (den.sign() == 0) return BoundaryPoint::infinity();
  QuadraticSurd num = QuadraticSurd::rational(m.a) * t + QuadraticSurd::rational(m.b);
  return BoundaryPoint(num / den);
}

int orientation(const BoundaryPoint& a, const BoundaryPoint& x, const BoundaryPoint& b) {
  if (a == x || x == b || a == b) throw std::invalid_argument("orientation of coincident points");
  if (a.is_infinity()) return x.value() < b.value() ? 1 : -1;
  if (x.is_infinity()) return b.value() < a.value() ? 1 : -1;
  if (b.is_infinity()) return a.value() < x.value() ? 1 : -1;
  const bool ax = a.value() < x.value(), xb = x.value() < b.value(), ab = a.value() < b.value();
  // positive iff (a,x,b) is a cyclic rotation of a strictly increasing triple
  if (ax == xb) return ax ? 1 : -1;
  return ab ? -1 : 1;
}

bool positively_oriented(const std::vector<BoundaryPoint>& pts) {
  if (pts.size() < 3) return true;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i)
    if (orientation(pts[i], pts[i + 1], pts[i + 2]) < 0) return false;
  // wrap-around triples
  const std::size_t n = pts.size();
  if (orientation(pts[n - 2], pts[n - 1], pts[0]) < 0) return false;
  if (orientation(pts[n - 1], pts[0], pts[1]) < 0) return false;
  return true;
}

bool axes_link(const MobiusElement& m1, const MobiusElement& m2) {
  auto [p1, q1] = fixed_points(m1);
  auto [p2, q2] = fixed_points(m2);
  if (p1 == p2 || p1 == q2 || q1 == p2 || q1 == q2) return false;  // shared endpoint
  const bool inside1 = in_interval(p1, p2, q1);
  const bool inside2 = in_interval(p1, q2, q1);
  return inside1 != inside2;
}

std::vector<GroupWord> enumerate_words(int max_len, bool conjugacy_classes) {
  static const char alphabet[4] = {'A', 'B', 'a', 'b'};
  std::vector<GroupWord> out;
  std::vector<std::string> layer = {""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char ch : alphabet) {
        if (!w.empty() && inverse_letters(w.back(), ch)) continue;
        next.push_back(w + ch);
      }
    layer = std::move(next);
    for (const auto& w : layer) out.push_back(GroupWord::from_reduced(w));
  }
  std::sort(out.begin(), out.end());
  if (conjugacy_classes) {
    std::vector<GroupWord> reps;
    for (const auto& w : out) {
      GroupWord r = w.conjugacy_representative();
      if (!r.empty() && r == w) reps.push_back(w);
    }
    out = std::move(reps);
  }
  return out;
}

}  // namespace lamina
