#include "lamina/newton_polygon.hpp"

namespace lamina {

namespace {

// is p2 strictly below the segment p1 -> p3 at its abscissa?
bool strictly_below(const FieldParams& F, const std::pair<int, Exponent>& p1,
                    const std::pair<int, Exponent>& p2, const std::pair<int, Exponent>& p3) {
  // (y2-y1)*(x3-x1) < (y3-y1)*(x2-x1)
  Exponent lhs = (p2.second - p1.second) * static_cast<long>(p3.first - p1.first);
  Exponent rhs = (p3.second - p1.second) * static_cast<long>(p2.first - p1.first);
  return F.cmp(lhs, rhs) < 0;
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<ValuedScalar>& coeffs) {
  if (coeffs.empty()) throw DomainError("newton polygon of empty coefficient list");
  const FieldParams& F = *coeffs.front().field();

  NewtonPolygon np;
  std::vector<std::pair<int, Exponent>> unknown;  // (index, precision bound)
  int low = 0;
  while (low < static_cast<int>(coeffs.size()) && coeffs[low].is_exact_zero()) ++low;
  np.zero_roots = low;

  for (int k = low; k < static_cast<int>(coeffs.size()); ++k) {
    const ValuedScalar& c = coeffs[k];
    if (c.known_nonzero()) {
      np.points.emplace_back(k - low, c.valuation());
    } else if (!c.is_exact()) {
      unknown.emplace_back(k - low, *c.precision());
    }
  }
  if (np.points.empty()) {
    if (unknown.empty()) throw DomainError("newton polygon of the zero polynomial");
    throw PrecisionError("newton polygon: no coefficient with known valuation");
  }
  if (!unknown.empty() && unknown.back().first > np.points.back().first)
    throw PrecisionError("newton polygon: top coefficient valuation unknown");

  // monotone chain lower hull
  for (const auto& p : np.points) {
    while (np.hull.size() >= 2 &&
           !strictly_below(F, np.hull[np.hull.size() - 2], np.hull.back(), p))
      np.hull.pop_back();
    np.hull.push_back(p);
  }

  // an undetermined coefficient is harmless iff its precision bound lies on
  // or above the hull
  for (const auto& u : unknown) {
    if (u.first < np.hull.front().first || u.first > np.hull.back().first)
      throw PrecisionError("newton polygon: boundary coefficient valuation unknown");
    bool safe = false;
    for (std::size_t s = 0; s + 1 < np.hull.size(); ++s) {
      if (np.hull[s].first <= u.first && u.first <= np.hull[s + 1].first) {
        safe = !strictly_below(F, np.hull[s], u, np.hull[s + 1]);
        break;
      }
    }
    if (!safe) throw PrecisionError("newton polygon: coefficient valuation unknown at precision");
  }

  for (std::size_t s = 0; s + 1 < np.hull.size(); ++s) {
    const int dx = np.hull[s + 1].first - np.hull[s].first;
    Exponent dy = np.hull[s + 1].second - np.hull[s].second;
    np.segments.push_back(NewtonPolygon::Segment{dy / dx, dx});
  }
  return np;
}

}  // namespace lamina
