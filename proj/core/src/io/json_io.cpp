#include "wba/io/json_io.hpp"

#include "wba/util/error.hpp"

namespace wba {

Json complex_to_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object() || !j.contains("re")) throw Error("complex number must be {re, im}");
  return {j.at("re").get<double>(), j.value("im", 0.0)};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw Error("matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json operator_to_json(const DenseOperator& m) {
  return Json{{"n", m.n()}, {"d", m.d()}, {"entries", matrix_to_json(m.matrix())}};
}

DenseOperator operator_from_json(const Json& j) {
  return {j.at("n").get<int>(), j.at("d").get<int>(), matrix_from_json(j.at("entries"))};
}

Json element_to_json(const WbaElement& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x.terms()) {
    Json coeff = Json::array();
    for (const auto& [power, v] : c.terms()) coeff.push_back({{"power", power}, {"re", v.real()}, {"im", v.imag()}});
    out.push_back({{"diagram", g.to_string()}, {"coeff", std::move(coeff)}});
  }
  return out;
}

WbaElement element_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error("algebra element must be a JSON array of terms");
  WbaElement out(n);
  for (const auto& term : j) {
    DPolynomial p;
    for (const auto& c : term.at("coeff"))
      p += DPolynomial::monomial(c.at("power").get<int>(), {c.at("re").get<double>(), c.value("im", 0.0)});
    out.add_term(parse_diagram(term.at("diagram").get<std::string>(), n), p);
  }
  return out;
}

Json verdict_to_json(const PositivityVerdict& v) {
  Json out{{"classification", to_string(v.classification)},
           {"min_eig", v.min_eig},
           {"product_min_estimate", v.product_min_estimate}};
  if (v.violating_product_state) {
    Json factors = Json::array();
    for (const auto& f : *v.violating_product_state) {
      Json vec = Json::array();
      for (Eigen::Index i = 0; i < f.size(); ++i) vec.push_back(complex_to_json(f(i)));
      factors.push_back(std::move(vec));
    }
    out["product_state"] = std::move(factors);
  }
  return out;
}

Json werner_to_json(const WernerParams& p) {
  Json alphas = Json::array();
  for (const auto& a : p.alphas) alphas.push_back(complex_to_json(a));
  return Json{{"d", p.d}, {"alphas", std::move(alphas)}, {"c", p.cs}, {"r", p.rs}};
}

Json report_to_json(const VerificationReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"group", c.group}, {"case", c.name}, {"max_deviation", c.max_deviation}, {"passed", c.passed}});
  }
  return Json{{"all_passed", r.all_passed()}, {"cases", std::move(cases)}};
}

}  // namespace wba
