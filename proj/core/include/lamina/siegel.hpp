#pragma once

#include "lamina/symplectic.hpp"

namespace lamina {

// Z = X + iY with Y positive definite (checked on construction)
struct SiegelPoint {
  Mat x;
  Mat y;

  SiegelPoint(Mat x_, Mat y_);
  static SiegelPoint i_identity(int n, FieldPtr f);
  static SiegelPoint i_scalar(FieldPtr f, int n, const ValuedScalar& re, const ValuedScalar& im);

  int n() const { return x.rows(); }
  CMat complex_matrix() const;
};

CMat complexify(const Mat& m);

// fractional linear action (A Z + B)(C Z + D)^-1 over F(i)
CMat apply_flt(const SpElement& g, const CMat& z);
SiegelPoint apply_flt(const SpElement& g, const SiegelPoint& z);

// distance in S_1^F: max{-v((x1-x2)^2/(y1 y2)), -v(y1/y2), -v(y2/y1)};
// the first term drops when x1 = x2
Exponent s1_distance(const SiegelPoint& z1, const SiegelPoint& z2);

enum class D1Mode { equal_real_part, scalar_diagonal, hybrid_general };

// pseudo-distance d^1(Z1, Z2) = -sum v(d_i) of the congruence normal form.
//  equal_real_part: X1 = X2; sum of |root valuations| of det(Y2 - t Y1)
//  scalar_diagonal: both points scalar multiples of i-rescaled Id
//  hybrid_general:  any pair, via -v(det R(Z1, conj Z1, conj Z2, Z2))
Exponent d1_distance(const SiegelPoint& z1, const SiegelPoint& z2, D1Mode mode);

// F-tube between two transverse Lagrangians, with the normalizer sending
// (l, lp) to (ell_0, ell_infinity)
struct Tube {
  Lagrangian l, lp;
  SpElement normalizer;       // N l = ell_0, N lp = ell_infinity
  SpElement denormalizer;     // N^-1
};

Tube make_tube(const Lagrangian& l, const Lagrangian& lp);

// orthogonal projection of p in (l, lp) or (lp, l) onto the tube
SiegelPoint tube_projection(const Tube& t, const Lagrangian& p);

// -v(det R(l, l1, l2, lp)) for a maximal quadruple, computed both through
// the det ratio and through projections + d^1; the two must agree exactly
Exponent projected_distance(const Lagrangian& l, const Lagrangian& lp, const Lagrangian& l1,
                            const Lagrangian& l2);

// barycenter b(l1, l2, l3) = pr_{Y_{l1,l3}}(l2) for a maximal or minimal triple
SiegelPoint barycenter(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

// tubes Y_{l1,l3} and Y_{l2,l4} orthogonal: R(l1,l2,l3,l4) = 2 Id exactly
bool tube_orthogonality_check(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                              const Lagrangian& l4);

}  // namespace lamina
