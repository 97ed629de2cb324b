#pragma once

#include <functional>
#include <optional>

#include "lamina/report.hpp"
#include "lamina/representation.hpp"

namespace lamina {

// A boundary point of the reference hyperbolization together with a
// hyperbolic word realizing it as the repelling fixed point; the word is the
// handle through which framings are built.
struct FramedPoint {
  BoundaryPoint point;
  GroupWord witness;  // hyperbolic; point == fixed_points(witness).first
};

// Positive-crossratio oracle: evaluable boundary points plus an evaluator on
// positively oriented quadruples.  Values live in the exponent group.
class CrossratioOracle {
 public:
  using Evaluator = std::function<Exponent(const FramedPoint&, const FramedPoint&,
                                           const FramedPoint&, const FramedPoint&)>;

  CrossratioOracle(FieldPtr field, std::vector<FramedPoint> domain, Evaluator eval,
                   std::string name);

  const FieldPtr& field() const { return field_; }
  const std::vector<FramedPoint>& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  // evaluator on a positively oriented quadruple (checked)
  Exponent operator()(const FramedPoint& a, const FramedPoint& b, const FramedPoint& c,
                      const FramedPoint& d) const;

  // translate a framed point by a group element (point by the Mobius action,
  // witness by conjugation)
  static FramedPoint translate(const GroupWord& g, const FramedPoint& p);

 private:
  FieldPtr field_;
  std::vector<FramedPoint> domain_;
  Evaluator eval_;
  std::string name_;
};

// The oracle of a maximal framed representation:
// [x1,..,x4] = -v(det R(phi(x1),..,phi(x4))).  The framing cache lives inside.
CrossratioOracle representation_oracle(const Representation& rho, int word_pool_len,
                                       Rational framing_precision = Rational(32));

// Deterministic pool of framed points: repelling fixed points of hyperbolic
// corpus words up to the given length, deduplicated, in circle order.
std::vector<FramedPoint> framed_point_pool(int max_word_len);

// sorts four distinct points into positive cyclic order starting at pts[0]
std::vector<FramedPoint> order_positively(std::vector<FramedPoint> pts);

// CR1-CR4, monotonicity, and the informational CRU flag, on `samples`
// deterministic samples
SuiteReport axiom_suite(const CrossratioOracle& oracle, int samples, std::uint64_t seed);

// period per(gamma) = [gamma-, x, gamma x, gamma+], checked independent of
// the basepoint across `basepoints` choices drawn from the oracle's domain
struct PeriodResult {
  Exponent value;
  int basepoints_used = 0;
};
PeriodResult period(const CrossratioOracle& oracle, const GroupWord& gamma, int basepoints = 3);

// rectangle mass cR(R) = [a,b,c,d] and the finite-additivity check over
// sampled splits
struct RectangleMass {
  FramedPoint a, b, c, d;
  Exponent mass;
};
RectangleMass rectangle_mass(const CrossratioOracle& oracle, const FramedPoint& a,
                             const FramedPoint& b, const FramedPoint& c, const FramedPoint& d);
SuiteReport additivity_check(const CrossratioOracle& oracle, int samples, std::uint64_t seed);

// nested-rectangle atom scan around candidate axes; requires the sampled
// values to lie in a discrete subgroup (unit detected by rational gcd)
struct AtomReport {
  GroupWord candidate;
  std::vector<Exponent> nested_masses;  // one per refinement level
  std::optional<Rational> stabilized_weight;  // in multiples of the unit
};
struct AtomScanResult {
  Rational unit;  // detected generator of the value group
  std::vector<AtomReport> atoms;
};
class DiscretenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
AtomScanResult atom_scan(const CrossratioOracle& oracle, const std::vector<GroupWord>& candidates,
                         int depth);

// min([a,b,c,d], [b,c,d,a]) == 0 on sampled quadruples (the 4-point
// lamination certificate); reports the fraction that satisfies it
struct LaminationCheckResult {
  long samples = 0;
  long zero_minima = 0;
  bool all_zero() const { return samples == zero_minima; }
};
LaminationCheckResult lamination_4point_check(const CrossratioOracle& oracle, int samples,
                                              std::uint64_t seed);

// [a,b,c,d] = d^1(beta(a,b,d), beta(a,c,d)) on sampled quadruples, with the
// barycenter computed in the Siegel model; also spot-checks S3-invariance
SuiteReport barycenter_compatibility_check(const CrossratioOracle& oracle,
                                           const Representation& rho, int samples,
                                           std::uint64_t seed,
                                           Rational framing_precision = Rational(32));

}  // namespace lamina
