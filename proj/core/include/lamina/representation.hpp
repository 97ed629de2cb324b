#pragma once

#include <map>
#include <string>

#include "lamina/fuchsian.hpp"
#include "lamina/newton_polygon.hpp"
#include "lamina/symplectic.hpp"

namespace lamina {

enum class RepKind { strubel_unipotent, sl2, explicit_matrices };

// Representation of the thrice-punctured-sphere group into Sp(2n, F); the
// images of c1 and c3 determine c2 = c3^-1 c1^-1 through the relation
// c3 c2 c1 = e.  All images are verified symplectic, the relation exact.
class Representation {
 public:
  Representation(int n, FieldPtr field, SpElement c1, SpElement c3, RepKind kind);

  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  RepKind kind() const { return kind_; }
  const SpElement& c1() const { return c1_; }
  const SpElement& c2() const { return c2_; }
  const SpElement& c3() const { return c3_; }

  SpElement evaluate(const GroupWord& w) const;

 private:
  int n_;
  FieldPtr field_;
  SpElement c1_, c2_, c3_;
  RepKind kind_;
};

// The unipotent-boundary family of maximal representations into Sp(4):
// X1 = [[1, 4/x],[0,1]], X2 = [[-3+y, -x],[(y-2)^2/x, 1-y]],
// X3 = [[1+y, y^2/x],[-x, 1-y]] with y = x^alpha, alpha from the field.
// Construction validates unipotency of X1, -X2, X3, the identity
// X3 X2^-T X1 = Id, and the symplectic relations.
Representation strubel_unipotent(FieldPtr field);

// Maximal representation into SL(2, F) from the n = 1 coordinates
// (x, -x, -x); its boundary images are hyperbolic over F.
Representation sl2_standard(FieldPtr field);

Representation explicit_representation(FieldPtr field, int n, Mat c1, Mat c3);

// T(g) = (tr g)^2 - tr(g^2) - 4 for g in Sp(4)
ValuedScalar trace_invariant_T(const SpElement& g);

struct LengthData {
  Exponent length;        // -2 sum of negative root valuations of charpoly
  bool shilov_regular;    // no zero slope in the Newton polygon
  NewtonPolygon polygon;
};

LengthData length_function(const Representation& rho, const GroupWord& w);

struct ShilovData {
  Lagrangian ell_plus;
  Lagrangian ell_minus;
  std::vector<Exponent> eigen_valuations;  // all 2n root valuations, ascending
};

class ShilovError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invariant Lagrangian splitting of rho(w).  n = 1 solves the fixed-chart
// quadratic in the field; n >= 2 runs a power iteration of the chart action
// from a deterministic perturbed seed until the chart stabilizes modulo the
// requested precision.  Throws ShilovError on zero Newton slopes (moduli on
// the unit circle cannot be certified from valuations) and on
// non-convergence.
ShilovData shilov_data(const Representation& rho, const GroupWord& w,
                       Rational precision_units = Rational(32), int max_iters = 128);

// Equivariant framing phi on fixed points of hyperbolic words, built from
// shilov_data and cached per representation.
class Framing {
 public:
  explicit Framing(const Representation& rho, Rational precision_units = Rational(32));

  // phi at the repelling/attracting fixed point of the hyperbolic word w
  const Lagrangian& at_minus(const GroupWord& w);
  const Lagrangian& at_plus(const GroupWord& w);

  const Representation& representation() const { return rho_; }

 private:
  const ShilovData& data_for(const GroupWord& w);
  const Representation& rho_;
  Rational precision_units_;
  std::map<std::string, ShilovData> cache_;
};

// [x1,x2,x3,x4]_rho = -v(det R(phi(x1), .., phi(x4))) for a positively
// oriented quadruple of framed Lagrangians.
Exponent framing_crossratio(const Lagrangian& p1, const Lagrangian& p2, const Lagrangian& p3,
                            const Lagrangian& p4);

}  // namespace lamina
