#include "lamina/serialization.hpp"

#include <sstream>

namespace lamina {

namespace {

nlohmann::json exponent_json(const Exponent& e) {
  return {{"a", to_string(e.a)}, {"b", to_string(e.b)}};
}

Exponent exponent_from_json(const nlohmann::json& j) {
  return Exponent(parse_rational(j.at("a").get<std::string>()),
                  parse_rational(j.at("b").get<std::string>()));
}

}  // namespace

nlohmann::json to_json(const ValuedScalar& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : x.terms())
    terms.push_back(nlohmann::json::array({exponent_json(t.exp), to_string(t.coeff)}));
  nlohmann::json j = {{"terms", terms}};
  j["precision"] = x.precision() ? exponent_json(*x.precision()) : nlohmann::json(nullptr);
  return j;
}

ValuedScalar scalar_from_json(const nlohmann::json& j, const FieldPtr& f) {
  ValuedScalar x = ValuedScalar::zero(f);
  for (const auto& t : j.at("terms")) {
    Exponent e = exponent_from_json(t.at(0));
    Rational c = parse_rational(t.at(1).get<std::string>());
    x += ValuedScalar::monomial(f, c, e);
  }
  if (!j.at("precision").is_null()) x = x.truncated(exponent_from_json(j.at("precision")));
  return x;
}

nlohmann::json to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const nlohmann::json& j, const FieldPtr& f) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) throw DomainError("empty matrix json");
  const int cols = static_cast<int>(j.at(0).size());
  Mat m = Mat::zero(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(j.at(i).at(k), f);
  return m;
}

nlohmann::json to_json(const Lagrangian& l) {
  if (l.is_infinity()) return {{"infinity", true}, {"n", l.n()}};
  return {{"chart", to_json(l.chart_matrix())}};
}

Lagrangian lagrangian_from_json(const nlohmann::json& j, const FieldPtr& f) {
  if (j.contains("infinity")) {
    if (!j.contains("n")) throw DomainError("infinity lagrangian json needs n");
    return Lagrangian::infinity(j.at("n").get<int>(), f);
  }
  if (j.contains("chart")) return Lagrangian::chart(matrix_from_json(j.at("chart"), f));
  if (j.contains("frame")) return Lagrangian::frame(matrix_from_json(j.at("frame"), f));
  throw DomainError("lagrangian json needs chart, frame or infinity");
}

nlohmann::json to_json(const SiegelPoint& z) {
  return {{"X", to_json(z.x)}, {"Y", to_json(z.y)}};
}

SiegelPoint siegel_point_from_json(const nlohmann::json& j, const FieldPtr& f) {
  return SiegelPoint(matrix_from_json(j.at("X"), f), matrix_from_json(j.at("Y"), f));
}

std::string to_string(const ValuedScalar& x) {
  if (x.terms().empty()) return x.is_exact() ? "0" : "O(...)";
  const FieldParams& F = *x.field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : x.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool unit_exp = F.is_zero(t.exp);
    if (unit_exp) {
      os << to_string(t.coeff);
    } else {
      if (t.coeff != 1) os << to_string(t.coeff) << "*";
      os << "X^(" << F.render(t.exp) << ")";
    }
  }
  if (x.precision()) os << " + O(X^(" << F.render(*x.precision()) << "))";
  return os.str();
}

}  // namespace lamina
