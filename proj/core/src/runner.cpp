#include "lamina/runner.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "lamina/serialization.hpp"

namespace lamina {

namespace {

std::string decimal(const FieldParams& f, const Exponent& e) {
  std::ostringstream os;
  os << std::setprecision(9) << f.to_double(e);
  return os.str();
}

Exponent closed_form_c13(const FieldParams& f) {
  // min(-2, -4 + 4 alpha, -2 + 2 alpha)
  Exponent e1 = f.exponent(Rational(-2));
  Exponent e2 = f.exponent(Rational(-4), Rational(4));
  Exponent e3 = f.exponent(Rational(-2), Rational(2));
  return f.min(e1, f.min(e2, e3));
}

Exponent closed_form_c12(const FieldParams& f) {
  // min(-2, -2 + 4 alpha, -2 + 2 alpha)
  Exponent e1 = f.exponent(Rational(-2));
  Exponent e2 = f.exponent(Rational(-2), Rational(4));
  Exponent e3 = f.exponent(Rational(-2), Rational(2));
  return f.min(e1, f.min(e2, e3));
}

}  // namespace

Representation build_representation(const RunConfig& cfg) {
  if (cfg.representation.kind == "strubel_unipotent") return strubel_unipotent(cfg.field);
  if (cfg.representation.kind == "sl2") return sl2_standard(cfg.field);
  const auto& rj = cfg.representation.raw;
  if (!rj.contains("n") || !rj.contains("c1") || !rj.contains("c3"))
    throw ConfigError("explicit representation needs n, c1, c3");
  const int n = rj.at("n").get<int>();
  return explicit_representation(cfg.field, n, matrix_from_json(rj.at("c1"), cfg.field),
                                 matrix_from_json(rj.at("c3"), cfg.field));
}

std::vector<GroupWord> collect_words(const RunConfig& cfg) {
  std::vector<GroupWord> out;
  for (const auto& s : cfg.words) out.push_back(GroupWord::parse(s));
  if (cfg.enumerate_max_len)
    for (const auto& w : enumerate_words(*cfg.enumerate_max_len, /*conjugacy_classes=*/true))
      out.push_back(w);
  return out;
}

std::vector<StrubelRow> reproduce_strubel(const std::vector<Alpha>& alphas) {
  std::vector<StrubelRow> rows;
  static const GroupWord w13 = GroupWord::parse("Ac");  // c1^-1 c3
  static const GroupWord w12 = GroupWord::parse("Ab");  // c1^-1 c2
  for (const Alpha& alpha : alphas) {
    FieldPtr f = make_field(alpha);
    Representation rho = strubel_unipotent(f);
    StrubelRow row;
    row.alpha = alpha.to_string();
    const Exponent c13 = trace_invariant_T(rho.evaluate(w13)).valuation();
    const Exponent c12 = trace_invariant_T(rho.evaluate(w12)).valuation();
    const Exponent e13 = closed_form_c13(*f);
    const Exponent e12 = closed_form_c12(*f);
    row.computed_c1inv_c3 = f->render(c13);
    row.expected_c1inv_c3 = f->render(e13);
    row.computed_c1inv_c2 = f->render(c12);
    row.expected_c1inv_c2 = f->render(e12);
    row.match = c13 == e13 && c12 == e12;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_strubel_rows(const std::vector<StrubelRow>& rows) {
  std::ostringstream os;
  os << "alpha,vT_c1inv_c3,vT_c1inv_c3_expected,vT_c1inv_c2,vT_c1inv_c2_expected,match\n";
  for (const auto& r : rows)
    os << r.alpha << "," << r.computed_c1inv_c3 << "," << r.expected_c1inv_c3 << ","
       << r.computed_c1inv_c2 << "," << r.expected_c1inv_c2 << "," << (r.match ? "yes" : "no")
       << "\n";
  return os.str();
}

namespace {

int run_lengths(const RunConfig& cfg, const Representation& rho, std::ostringstream& os) {
  const FieldParams& F = *cfg.field;
  os << "word,L,L_decimal,shilov_regular,T_valuation,T_valuation_decimal,agree\n";
  int code = 0;
  for (const GroupWord& w : collect_words(cfg)) {
    try {
      LengthData ld = length_function(rho, w);
      os << w.letters() << "," << F.render(ld.length) << "," << decimal(F, ld.length) << ","
         << (ld.shilov_regular ? "yes" : "no") << ",";
      if (rho.n() == 2) {
        ValuedScalar t = trace_invariant_T(rho.evaluate(w));
        if (t.known_nonzero()) {
          Exponent vt = t.valuation();
          // length agreement with the T invariant: L = -2 v(T)
          const bool agree = !ld.shilov_regular || ld.length == -(vt * 2L);
          os << F.render(vt) << "," << decimal(F, vt) << "," << (agree ? "yes" : "no") << "\n";
        } else {
          os << "zero,," << (ld.shilov_regular ? "no" : "yes") << "\n";
        }
      } else {
        os << ",,\n";
      }
    } catch (const std::exception& e) {
      os << w.letters() << ",error: " << e.what() << ",,,,,\n";
      code = 2;
    }
  }
  return code;
}

int run_periods(const RunConfig& cfg, const Representation& rho, std::ostringstream& os) {
  const FieldParams& F = *cfg.field;
  CrossratioOracle oracle = representation_oracle(rho, 4);
  os << "word,period,period_decimal,basepoints,equals_length\n";
  int code = 0;
  for (const GroupWord& w : collect_words(cfg)) {
    if (classify(evaluate_mobius(w)) != MobiusClass::hyperbolic) continue;
    try {
      PeriodResult p = period(oracle, w, cfg.basepoints);
      LengthData ld = length_function(rho, w);
      const bool eq = p.value == ld.length;
      os << w.letters() << "," << F.render(p.value) << "," << decimal(F, p.value) << ","
         << p.basepoints_used << "," << (eq ? "yes" : "no") << "\n";
      if (!eq) code = std::max(code, 1);
    } catch (const ShilovError& e) {
      os << w.letters() << ",skipped: " << e.what() << ",,,\n";
    } catch (const std::exception& e) {
      os << w.letters() << ",error: " << e.what() << ",,,\n";
      code = 2;
    }
  }
  return code;
}

int run_cr_axioms(const RunConfig& cfg, const Representation& rho, std::ostringstream& os) {
  CrossratioOracle oracle = representation_oracle(rho, 4);
  SuiteReport report = axiom_suite(oracle, cfg.samples, *cfg.seed);
  os << (cfg.output.format == "json" ? to_json_string(report) : to_csv_string(report));
  long counted = 0;
  for (const auto& c : report.checks)
    if (c.note != "informational") counted += static_cast<long>(c.violations.size());
  return counted == 0 ? 0 : 1;
}

int run_atom_scan(const RunConfig& cfg, const Representation& rho, std::ostringstream& os) {
  const FieldParams& F = *cfg.field;
  CrossratioOracle oracle = representation_oracle(rho, 5);
  std::vector<GroupWord> candidates = collect_words(cfg);
  if (candidates.empty()) candidates = enumerate_words(4, /*conjugacy_classes=*/true);
  try {
    AtomScanResult res = atom_scan(oracle, candidates, cfg.depth);
    os << "candidate,unit,masses,weight\n";
    for (const auto& a : res.atoms) {
      os << a.candidate.letters() << "," << to_string(res.unit) << ",";
      for (std::size_t i = 0; i < a.nested_masses.size(); ++i)
        os << (i ? " " : "") << F.render(a.nested_masses[i]);
      os << ",";
      if (a.stabilized_weight)
        os << to_string(*a.stabilized_weight);
      else
        os << "not-stabilized";
      os << "\n";
    }
    return 0;
  } catch (const DiscretenessError& e) {
    os << "discreteness-precheck-failed," << e.what() << "\n";
    return 2;
  }
}

int run_barycenter_check(const RunConfig& cfg, const Representation& rho,
                         std::ostringstream& os) {
  CrossratioOracle oracle = representation_oracle(rho, 4);
  SuiteReport report = barycenter_compatibility_check(oracle, rho, cfg.samples, *cfg.seed);
  os << (cfg.output.format == "json" ? to_json_string(report) : to_csv_string(report));
  return report.passed() ? 0 : 1;
}

}  // namespace

RunResult execute(const RunConfig& cfg) {
  std::ostringstream os;
  int code = 0;
  try {
    std::optional<Representation> rho;
    for (Command c : cfg.commands) {
      os << "# " << command_name(c) << "\n";
      if (c == Command::reproduce_strubel) {
        std::vector<Alpha> alphas = {parse_alpha(cfg.representation.alpha)};
        auto rows = reproduce_strubel(alphas);
        os << render_strubel_rows(rows);
        for (const auto& r : rows)
          if (!r.match) code = std::max(code, 1);
        continue;
      }
      if (!rho) rho.emplace(build_representation(cfg));
      switch (c) {
        case Command::lengths: code = std::max(code, run_lengths(cfg, *rho, os)); break;
        case Command::periods: code = std::max(code, run_periods(cfg, *rho, os)); break;
        case Command::cr_axioms: code = std::max(code, run_cr_axioms(cfg, *rho, os)); break;
        case Command::atom_scan: code = std::max(code, run_atom_scan(cfg, *rho, os)); break;
        case Command::barycenter_check:
          code = std::max(code, run_barycenter_check(cfg, *rho, os));
          break;
        case Command::reproduce_strubel: break;
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    os << "error," << e.what() << "\n";
    code = 2;
  }
  RunResult res;
  res.exit_code = code;
  res.output = os.str();
  if (!cfg.output.path.empty()) {
    std::ofstream out(cfg.output.path);
    out << res.output;
  }
  return res;
}

}  // namespace lamina
