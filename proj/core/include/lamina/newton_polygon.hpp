#pragma once

#include <utility>
#include <vector>

#include "lamina/series.hpp"

namespace lamina {

// Lower convex hull of the points (k, v(a_k)) of a polynomial sum a_k t^k.
// Sign convention, fixed by the example t - X: the single segment has slope
// -1 and the root t = X has valuation 1 = -slope.
struct NewtonPolygon {
  struct Segment {
    Exponent slope;
    int length;  // horizontal extent = number of roots with valuation -slope
  };
  std::vector<std::pair<int, Exponent>> points;  // finite (index, valuation) pairs
  std::vector<std::pair<int, Exponent>> hull;    // lower hull vertices, left to right
  std::vector<Segment> segments;
  int zero_roots = 0;  // roots at t = 0 (low-end coefficients exactly zero)

  // valuations of the nonzero roots, with multiplicity, ascending
  std::vector<Exponent> root_valuations(const FieldParams& f) const {
    std::vector<Exponent> out;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it)
      for (int i = 0; i < it->length; ++i) out.push_back(-it->slope);
    (void)f;
    return out;
  }
};

// Throws PrecisionError when an undetermined coefficient could dent the hull,
// DomainError on the zero polynomial.
NewtonPolygon newton_polygon(const std::vector<ValuedScalar>& coeffs);

}  // namespace lamina
