#include "lamina/oracle.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "lamina/prng.hpp"
#include "lamina/siegel.hpp"

namespace lamina {

namespace {

std::string points_string(std::initializer_list<const FramedPoint*> pts) {
  std::ostringstream os;
  bool first = true;
  for (const auto* p : pts) {
    if (!first) os << ", ";
    os << p->point.to_string();
    first = false;
  }
  return os.str();
}

}  // namespace

CrossratioOracle::CrossratioOracle(FieldPtr field, std::vector<FramedPoint> domain, Evaluator eval,
                                   std::string name)
    : field_(std::move(field)),
      domain_(std::move(domain)),
      eval_(std::move(eval)),
      name_(std::move(name)) {}

Exponent CrossratioOracle::operator()(const FramedPoint& a, const FramedPoint& b,
                                      const FramedPoint& c, const FramedPoint& d) const {
  if (!positively_oriented({a.point, b.point, c.point, d.point}))
    throw DomainError("crossratio oracle: quadruple not positively oriented");
  return eval_(a, b, c, d);
}

FramedPoint CrossratioOracle::translate(const GroupWord& g, const FramedPoint& p) {
  return FramedPoint{mobius_apply(evaluate_mobius(g), p.point), p.witness.conjugated_by(g)};
}

CrossratioOracle representation_oracle(const Representation& rho, int word_pool_len,
                                       Rational framing_precision) {
  auto framing = std::make_shared<Framing>(rho, framing_precision);
  auto eval = [framing](const FramedPoint& a, const FramedPoint& b, const FramedPoint& c,
                        const FramedPoint& d) {
    const Lagrangian& p1 = framing->at_minus(a.witness);
    const Lagrangian& p2 = framing->at_minus(b.witness);
    const Lagrangian& p3 = framing->at_minus(c.witness);
    const Lagrangian& p4 = framing->at_minus(d.witness);
    return framing_crossratio(p1, p2, p3, p4);
  };
  // keep only points whose witness is valuation-Shilov-regular for rho; the
  // framing at other fixed points cannot be certified and is skipped
  std::vector<FramedPoint> domain;
  for (const auto& p : framed_point_pool(word_pool_len)) {
    try {
      framing->at_minus(p.witness);
      domain.push_back(p);
    } catch (const ShilovError&) {
    }
  }
  std::string name = rho.n() == 1 ? "sl2_framed_oracle" : "sp4_framed_oracle";
  return CrossratioOracle(rho.field(), std::move(domain), std::move(eval), std::move(name));
}

std::vector<FramedPoint> framed_point_pool(int max_word_len) {
  std::vector<FramedPoint> pool;
  for (const GroupWord& w : enumerate_words(max_word_len, /*conjugacy_classes=*/true)) {
    MobiusElement m = evaluate_mobius(w);
    if (classify(m) != MobiusClass::hyperbolic) continue;
    for (const GroupWord& u : {w, w.inverse()}) {
      BoundaryPoint p = fixed_points(evaluate_mobius(u)).first;
      bool seen = false;
      for (const auto& q : pool)
        if (q.point == p) {
          seen = true;
          break;
        }
      if (!seen) pool.push_back(FramedPoint{p, u});
    }
  }
  if (pool.size() > 2) pool = order_positively(std::move(pool));
  return pool;
}

std::vector<FramedPoint> order_positively(std::vector<FramedPoint> pts) {
  if (pts.size() < 3) return pts;
  const BoundaryPoint anchor = pts.front().point;
  std::sort(pts.begin() + 1, pts.end(), [&](const FramedPoint& u, const FramedPoint& v) {
    return orientation(anchor, u.point, v.point) > 0;
  });
  return pts;
}

namespace {

// distinct random indices into the pool, returned in positive cyclic order
std::vector<FramedPoint> sample_tuple(const std::vector<FramedPoint>& pool, std::size_t k,
                                      Prng& rng) {
  if (pool.size() < k) throw DomainError("insufficient evaluable points in the oracle domain");
  std::vector<std::size_t> idx;
  while (idx.size() < k) {
    std::size_t i = rng.below(pool.size());
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());  // pool is already in circle order
  std::vector<FramedPoint> out;
  for (std::size_t i : idx) out.push_back(pool[i]);
  return out;
}

const char* kGenerators[4] = {"a", "A", "b", "B"};

}  // namespace

SuiteReport axiom_suite(const CrossratioOracle& oracle, int samples, std::uint64_t seed) {
  const FieldParams& F = *oracle.field();
  Prng rng(seed);
  const auto& pool = oracle.domain();

  CheckReport cr1{"CR1_gamma_invariance"}, cr2{"CR2_flip"}, cr3{"CR3_additivity"},
      cr4{"CR4_positivity"}, mono{"monotonicity"}, cru{"CRU_ultrametric"};
  cru.note = "informational";

  for (int s = 0; s < samples; ++s) {
    // CR2 + CR4 + CR1 + CRU on a common quadruple
    auto q = sample_tuple(pool, 4, rng);
    Exponent v = oracle(q[0], q[1], q[2], q[3]);
    ++cr4.samples;
    if (F.sign(v) < 0)
      cr4.violations.push_back({points_string({&q[0], &q[1], &q[2], &q[3]}), F.render(v), ">= 0"});

    ++cr2.samples;
    Exponent vflip = oracle(q[2], q[3], q[0], q[1]);
    if (v != vflip)
      cr2.violations.push_back(
          {points_string({&q[0], &q[1], &q[2], &q[3]}), F.render(v), F.render(vflip)});

    ++cr1.samples;
    GroupWord g = GroupWord::parse(kGenerators[rng.below(4)]);
    std::vector<FramedPoint> t;
    for (const auto& p : q) t.push_back(CrossratioOracle::translate(g, p));
    // the Mobius action preserves orientation, so (g q0, .., g q3) is again
    // positively oriented
    Exponent vt = oracle(t[0], t[1], t[2], t[3]);
    if (v != vt)
      cr1.violations.push_back(
          {points_string({&q[0], &q[1], &q[2], &q[3]}) + " ~ " + g.letters(), F.render(v),
           F.render(vt)});

    ++cru.samples;
    Exponent vrot = oracle(q[1], q[2], q[3], q[0]);
    if (F.sign(v) != 0 && F.sign(vrot) != 0)
      cru.violations.push_back(
          {points_string({&q[0], &q[1], &q[2], &q[3]}), F.render(v), F.render(vrot)});

    // CR3 on five points
    ++cr3.samples;
    auto q5 = sample_tuple(pool, 5, rng);
    Exponent lhs = oracle(q5[0], q5[1], q5[2], q5[4]) + oracle(q5[0], q5[2], q5[3], q5[4]);
    Exponent rhs = oracle(q5[0], q5[1], q5[3], q5[4]);
    if (lhs != rhs)
      cr3.violations.push_back({points_string({&q5[0], &q5[1], &q5[2], &q5[3], &q5[4]}),
                                F.render(lhs), F.render(rhs)});

    // monotonicity on eight points: inner (p1,p4,p5,p8) inside outer (p2,p3,p6,p7)
    ++mono.samples;
    auto q8 = sample_tuple(pool, 8, rng);
    Exponent inner = oracle(q8[0], q8[3], q8[4], q8[7]);
    Exponent outer = oracle(q8[1], q8[2], q8[5], q8[6]);
    if (F.cmp(inner, outer) > 0)
      mono.violations.push_back({points_string({&q8[0], &q8[3], &q8[4], &q8[7]}), F.render(inner),
                                 "<= " + F.render(outer)});
  }

  SuiteReport report;
  report.checks = {cr1, cr2, cr3, cr4, mono, cru};
  return report;
}

PeriodResult period(const CrossratioOracle& oracle, const GroupWord& gamma, int basepoints) {
  MobiusElement m = evaluate_mobius(gamma);
  if (classify(m) != MobiusClass::hyperbolic)
    throw DomainError("period of a non-hyperbolic element");
  auto [gm, gp] = fixed_points(m);
  FramedPoint pm{gm, gamma};
  FramedPoint pp{gp, gamma.inverse()};

  std::optional<Exponent> value;
  int used = 0;
  for (const auto& x : oracle.domain()) {
    if (used >= basepoints) break;
    if (x.point == gm || x.point == gp) continue;
    if (!in_interval(gm, x.point, gp)) continue;
    FramedPoint gx = CrossratioOracle::translate(gamma, x);
    if (!positively_oriented({gm, x.point, gx.point, gp})) continue;
    Exponent v = oracle(pm, x, gx, pp);
    if (value && *value != v)
      throw DomainError("period depends on the basepoint: " + oracle.field()->render(*value) +
                        " vs " + oracle.field()->render(v));
    value = v;
    ++used;
  }
  if (!value) throw DomainError("no usable basepoint for the period of " + gamma.letters());
  return PeriodResult{*value, used};
}

RectangleMass rectangle_mass(const CrossratioOracle& oracle, const FramedPoint& a,
                             const FramedPoint& b, const FramedPoint& c, const FramedPoint& d) {
  return RectangleMass{a, b, c, d, oracle(a, b, c, d)};
}

SuiteReport additivity_check(const CrossratioOracle& oracle, int samples, std::uint64_t seed) {
  const FieldParams& F = *oracle.field();
  Prng rng(seed);
  const auto& pool = oracle.domain();
  CheckReport second{"split_second_factor"}, first{"split_first_factor"},
      nested{"nested_monotone"};
  for (int s = 0; s < samples; ++s) {
    // (a, b, m, c, d) positively oriented: split J = (b, c) at m
    auto q = sample_tuple(pool, 5, rng);
    const FramedPoint &a = q[0], &b = q[1], &mid = q[2], &c = q[3], &d = q[4];
    ++second.samples;
    Exponent lhs = oracle(a, b, mid, d) + oracle(a, mid, c, d);
    Exponent rhs = oracle(a, b, c, d);
    if (lhs != rhs)
      second.violations.push_back(
          {points_string({&a, &b, &mid, &c, &d}), F.render(lhs), F.render(rhs)});

    // split I = (d, a) at m': tuple (a, b, c, m', d) reading m' in (d, a)...
    // sample as (a', b', c', d', m') with m' between d' and a'
    ++first.samples;
    auto q2 = sample_tuple(pool, 5, rng);
    const FramedPoint &a2 = q2[1], &b2 = q2[2], &c2 = q2[3], &d2 = q2[4], &m2 = q2[0];
    // circle order: (m2, a2, b2, c2, d2): m' = m2 lies in (d2, a2)
    Exponent l2 = oracle(m2, b2, c2, d2) + oracle(a2, b2, c2, m2);
    Exponent r2 = oracle(a2, b2, c2, d2);
    if (l2 != r2)
      first.violations.push_back(
          {points_string({&a2, &b2, &c2, &d2, &m2}), F.render(l2), F.render(r2)});

    // nested rectangle mass <= enclosing mass
    ++nested.samples;
    auto q8 = sample_tuple(pool, 8, rng);
    Exponent inner = oracle(q8[0], q8[3], q8[4], q8[7]);
    Exponent outer = oracle(q8[1], q8[2], q8[5], q8[6]);
    if (F.cmp(inner, outer) > 0)
      nested.violations.push_back({points_string({&q8[0], &q8[3], &q8[4], &q8[7]}),
                                   F.render(inner), "<= " + F.render(outer)});
  }
  SuiteReport report;
  report.checks = {second, first, nested};
  return report;
}

namespace {

Rational rational_value_or_throw(const FieldParams& F, const Exponent& v) {
  if (sgn(v.b) != 0)
    throw DiscretenessError("crossratio value " + F.render(v) +
                            " has an irrational exponent component; value group is dense");
  return v.a;
}

}  // namespace

AtomScanResult atom_scan(const CrossratioOracle& oracle, const std::vector<GroupWord>& candidates,
                         int depth) {
  const FieldParams& F = *oracle.field();
  const auto& pool = oracle.domain();
  if (pool.size() < 8) throw DomainError("atom scan needs a larger framed-point pool");

  // discreteness precheck on a deterministic sweep of rectangle masses
  std::vector<Rational> values;
  for (std::size_t i = 0; i + 3 < pool.size(); i += 4) {
    Exponent v = oracle(pool[i], pool[i + 1], pool[i + 2], pool[i + 3]);
    values.push_back(rational_value_or_throw(F, v));
  }
  Rational unit(0);
  for (const auto& v : values) unit = rational_gcd(unit, v);

  AtomScanResult result;
  const int levels = depth + 2;
  for (const auto& cand : candidates) {
    MobiusElement m = evaluate_mobius(cand);
    if (classify(m) != MobiusClass::hyperbolic) continue;
    auto [gm, gp] = fixed_points(m);
    // pool points strictly inside each side interval, ordered by closeness
    std::vector<const FramedPoint*> side_a, side_d, side_b, side_c;
    for (const auto& p : pool) {
      if (p.point == gm || p.point == gp) continue;
      if (in_interval(gm, p.point, gp))
        side_a.push_back(&p);  // candidates for a (near gm) and b (near gp)
      else
        side_c.push_back(&p);  // candidates for c (near gp) and d (near gm)
    }
    // order by circle position: side_a runs gm -> gp, side_c runs gp -> gm
    std::sort(side_a.begin(), side_a.end(), [&](const FramedPoint* u, const FramedPoint* v) {
      return orientation(gm, u->point, v->point) > 0;
    });
    std::sort(side_c.begin(), side_c.end(), [&](const FramedPoint* u, const FramedPoint* v) {
      return orientation(gp, u->point, v->point) > 0;
    });
    if (static_cast<int>(side_a.size()) < 2 * levels + 1 ||
        static_cast<int>(side_c.size()) < 2 * levels + 1)
      continue;  // not enough corner material around this axis

    AtomReport rep;
    rep.candidate = cand;
    for (int lev = 0; lev < levels; ++lev) {
      const int off = levels - 1 - lev;  // shrink toward the axis as lev grows
      const FramedPoint* a = side_a[off];
      const FramedPoint* b = side_a[side_a.size() - 1 - off];
      const FramedPoint* c = side_c[off];
      const FramedPoint* d = side_c[side_c.size() - 1 - off];
      Exponent mass = oracle(*a, *b, *c, *d);
      rational_value_or_throw(F, mass);
      rep.nested_masses.push_back(mass);
    }
    // non-increasing by monotonicity; stabilized when the last `depth` agree
    bool stable = true;
    for (int i = levels - depth; i < levels; ++i)
      if (rep.nested_masses[i] != rep.nested_masses[levels - depth]) stable = false;
    if (stable) {
      Rational w = rep.nested_masses.back().a;
      if (sgn(unit) != 0) {
        Rational ratio = w / unit;
        if (!is_integer(ratio))
          throw DiscretenessError("stabilized mass is not an integer multiple of the unit");
        rep.stabilized_weight = ratio;
      } else {
        rep.stabilized_weight = Rational(0);
      }
    }
    result.atoms.push_back(std::move(rep));
  }
  result.unit = sgn(unit) == 0 ? Rational(1) : unit;
  return result;
}

LaminationCheckResult lamination_4point_check(const CrossratioOracle& oracle, int samples,
                                              std::uint64_t seed) {
  const FieldParams& F = *oracle.field();
  Prng rng(seed);
  LaminationCheckResult out;
  for (int s = 0; s < samples; ++s) {
    auto q = sample_tuple(oracle.domain(), 4, rng);
    Exponent v1 = oracle(q[0], q[1], q[2], q[3]);
    Exponent v2 = oracle(q[1], q[2], q[3], q[0]);
    ++out.samples;
    if (F.sign(v1) == 0 || F.sign(v2) == 0) ++out.zero_minima;
  }
  return out;
}

SuiteReport barycenter_compatibility_check(const CrossratioOracle& oracle,
                                           const Representation& rho, int samples,
                                           std::uint64_t seed, Rational framing_precision) {
  const FieldParams& F = *oracle.field();
  Prng rng(seed);
  Framing framing(rho, framing_precision);
  CheckReport compat{"crossratio_equals_barycenter_distance"}, s3{"barycenter_S3_invariance"};
  for (int s = 0; s < samples; ++s) {
    auto q = sample_tuple(oracle.domain(), 4, rng);
    const Lagrangian& la = framing.at_minus(q[0].witness);
    const Lagrangian& lb = framing.at_minus(q[1].witness);
    const Lagrangian& lc = framing.at_minus(q[2].witness);
    const Lagrangian& ld = framing.at_minus(q[3].witness);
    ++compat.samples;
    Exponent lhs = oracle(q[0], q[1], q[2], q[3]);
    SiegelPoint b1 = barycenter(la, lb, ld);
    SiegelPoint b2 = barycenter(la, lc, ld);
    Exponent rhs = d1_distance(b1, b2, D1Mode::hybrid_general);
    if (lhs != rhs)
      compat.violations.push_back(
          {points_string({&q[0], &q[1], &q[2], &q[3]}), F.render(lhs), F.render(rhs)});

    ++s3.samples;
    SiegelPoint b1p = barycenter(ld, lb, la);  // permuted arguments
    Exponent dz = d1_distance(b1, b1p, D1Mode::hybrid_general);
    if (F.sign(dz) != 0)
      s3.violations.push_back(
          {points_string({&q[0], &q[1], &q[3]}), F.render(dz), "0"});
  }
  SuiteReport report;
  report.checks = {compat, s3};
  return report;
}

}  // namespace lamina
