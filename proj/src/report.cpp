#include "hspecht/report.hpp"

namespace hspecht {

Json params_json(Family f, const FamilyParams& p) {
  Json j;
  j["family"] = family_name(f);
  j["n"] = p.n;
  j["k"] = p.k;
  j["s"] = p.s;
  j["mu"] = p.mu.str();
  return j;
}

Json label_json(const BasisLabel& l) {
  Json j;
  j["shape"] = l.s.shape().str();
  j["S"] = l.s.str();
  j["T"] = l.t.str();
  j["exponents"] = l.exponents;
  j["degree"] = l.degree;
  if (l.xn_power) j["xn_power"] = l.xn_power;
  return j;
}

Json basis_report_json(const BasisReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["size"] = r.size;
  j["expected_size"] = r.expected_size;
  j["hilbert"] = r.hilbert;
  Json per = Json::array();
  for (const auto& d : r.per_degree)
    per.push_back(Json{{"d", d.degree}, {"expected", d.expected}, {"candidates", d.candidates}, {"rank", d.rank}, {"ok", d.ok}});
  j["per_degree"] = per;
  j["failures"] = r.failures;
  return j;
}

Json expansion_json(const GradedSchurExpansion& e) {
  Json out = Json::array();
  for (const auto& [key, c] : e.coeffs()) out.push_back(Json{{"degree", key.first}, {"lambda", key.second.str()}, {"mult", c}});
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

Json transition_json(const TransitionMatrix& tm, const AlmostLowerResult& alt) {
  Json j;
  j["mu"] = tm.mu.str();
  j["degree"] = tm.degree;
  Json rows = Json::array(), cols = Json::array();
  for (const auto& l : tm.rows) rows.push_back(label_json(l));
  for (const auto& l : tm.cols) cols.push_back(label_json(l));
  j["rows"] = rows;
  j["cols"] = cols;
  j["columns_independent"] = tm.columns_independent;
  j["matrix"] = matrix_json(tm.m);
  j["lower_triangular"] = tm.m.is_square() && tm.m.is_lower_triangular() && tm.m.has_nonzero_diagonal();
  j["almost_lower_triangular"] = alt.ok;
  j["witness"] = alt.ok ? matrix_json(alt.a) : Json::array();
  return j;
}

std::string matrix_csv(const Matrix& m) { return m.str(); }

Json report_header(const std::string& command, const Json& config) {
  Json j;
  j["tool"] = "hspecht";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config;
  return j;
}

}  // namespace hspecht
