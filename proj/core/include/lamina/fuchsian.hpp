#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/surd.hpp"

namespace lamina {

// Freely reduced word in the free basis {c1, c2} of the thrice-punctured
// sphere group (relation c3 c2 c1 = e, so c3 = c1^-1 c2^-1).  Letters:
// 'a' = c1, 'b' = c2, uppercase = inverse; input may also use 'c'/'C' for
// c3^{+-1}, which is substituted and reduced away.  Product reads left to
// right.
class GroupWord {
 public:
  GroupWord() = default;
  static GroupWord parse(const std::string& s);
  static GroupWord from_reduced(std::string letters);  // trusted, already over {a,A,b,B}

  const std::string& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;  // freely reduced concatenation
  GroupWord power(int k) const;
  GroupWord conjugated_by(const GroupWord& u) const;  // u * w * u^-1
  GroupWord cyclically_reduced() const;
  // minimal representative of the conjugacy class of w and w^-1
  GroupWord conjugacy_representative() const;

  bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
  bool operator<(const GroupWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

 private:
  std::string letters_;
};

// Reference hyperbolization: the level-2 principal congruence subgroup with
// c1 = [[1,2],[0,1]], c2 = [[1,0],[-2,1]].  Fixed points of hyperbolic
// elements are then quadratic surds, so the circle order is exact.  Entries
// are exact rationals, det > 0, considered up to scale (PGL+).
struct MobiusElement {
  Rational a, b, c, d;

  static MobiusElement identity() { return {1, 0, 0, 1}; }
  MobiusElement operator*(const MobiusElement& o) const;
  MobiusElement inverse() const { return {d, -b, -c, a}; }
  Rational trace() const { return a + d; }
  Rational det() const { return a * d - b * c; }
  bool is_identity_up_to_scale() const;
};

enum class MobiusClass { identity, parabolic, hyperbolic, elliptic };

MobiusElement evaluate_mobius(const GroupWord& w);
MobiusClass classify(const MobiusElement& m);

// Point of the boundary circle R union {infinity}; finite values are exact
// quadratic surds.
class BoundaryPoint {
 public:
  BoundaryPoint() : infinite_(true) {}
  explicit BoundaryPoint(QuadraticSurd v) : infinite_(false), v_(std::move(v)) {}
  static BoundaryPoint infinity() { return BoundaryPoint(); }
  static BoundaryPoint rational(Rational q) {
    return BoundaryPoint(QuadraticSurd::rational(std::move(q)));
  }

  bool is_infinity() const { return infinite_; }
  const QuadraticSurd& value() const;

  bool operator==(const BoundaryPoint& o) const;
  bool operator!=(const BoundaryPoint& o) const { return !(*this == o); }

  double to_double() const { return infinite_ ? 0.0 : v_.to_double(); }
  std::string to_string() const { return infinite_ ? "inf" : v_.to_string(); }

 private:
  bool infinite_;
  QuadraticSurd v_;
};

// repelling and attracting fixed points (gamma_-, gamma_+); requires
// hyperbolic input
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MobiusElement& m);

// Mobius action on the boundary, exact
BoundaryPoint mobius_apply(const MobiusElement& m, const BoundaryPoint& p);

// +1 when (a, x, b) is counterclockwise (increasing through R, wrapping at
// infinity), -1 otherwise; throws on coincident points.
int orientation(const BoundaryPoint& a, const BoundaryPoint& x, const BoundaryPoint& b);

bool positively_oriented(const std::vector<BoundaryPoint>& pts);

// x in the open interval from a to b (counterclockwise)
inline bool in_interval(const BoundaryPoint& a, const BoundaryPoint& x, const BoundaryPoint& b) {
  return orientation(a, x, b) > 0;
}

// do the axes of two hyperbolic elements cross (endpoints strictly interleave)?
bool axes_link(const MobiusElement& m1, const MobiusElement& m2);

// All freely reduced words of length in [1, max_len]; when conjugacy_classes
// is set, only cyclically reduced conjugacy-and-inversion representatives.
// Deterministic order (length, then lexicographic).
std::vector<GroupWord> enumerate_words(int max_len, bool conjugacy_classes = false);

}  // namespace lamina
