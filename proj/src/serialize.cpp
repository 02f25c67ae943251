#include "genk/serialize.hpp"

#include <cctype>

namespace genk {

Mask parse_label(const std::string& label, int m) {
  if (label == "1") return 0;
  if (label.size() < 3 || label.compare(0, 2, "dx") != 0) throw InvalidInput("bad basis label '" + label + "'");
  std::vector<int> idx;
  for (std::size_t p = 2; p < label.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(label[p]))) throw InvalidInput("bad basis label '" + label + "'");
    const int i = label[p] - '0';
    if (i < 1 || i > m || (!idx.empty() && i <= idx.back()))
      throw InvalidInput("basis label '" + label + "' needs increasing indices in 1.." + std::to_string(m));
    idx.push_back(i);
  }
  return indices_mask(idx, m);
}

json form_to_json(const Form<double>& f) {
  json j = json::object();
  for (Mask I = 0; I < Mask(f.size()); ++I)
    if (f[I] != 0.0) j[mask_label(I)] = f[I];
  return j;
}

Form<double> form_from_json(const json& j, int m) {
  if (!j.is_object()) throw InvalidInput("form must be an object of label: coefficient");
  Form<double> f(m);
  for (const auto& [label, value] : j.items()) {
    if (!value.is_number()) throw InvalidInput("coefficient of '" + label + "' must be a number");
    f[parse_label(label, m)] += value.get<double>();
  }
  return f;
}

json laform_to_json(const LaForm<double>& f) {
  json coeff = json::object();
  for (Mask I = 0; I < Mask(f.coeffs().rows()); ++I) {
    const Eigen::RowVectorXd row = f.coeffs().row(I);
    if (row.cwiseAbs().maxCoeff() == 0.0) continue;
    coeff[mask_label(I)] = std::vector<double>(row.data(), row.data() + row.size());
  }
  return json{{"coeff", coeff}};
}

LaForm<double> laform_from_json(const json& j, int m, std::shared_ptr<const LieAlgebraData> g) {
  if (!j.is_object() || !j.contains("coeff") || !j["coeff"].is_object())
    throw InvalidInput("Lie-valued form needs a \"coeff\" object");
  LaForm<double> f(m, g);
  for (const auto& [label, value] : j["coeff"].items()) {
    if (!value.is_array() || int(value.size()) != g->dim())
      throw InvalidInput("coefficient of '" + label + "' must list " + std::to_string(g->dim()) + " numbers");
    const Mask I = parse_label(label, m);
    for (int a = 0; a < g->dim(); ++a) {
      if (!value[a].is_number()) throw InvalidInput("coefficient of '" + label + "' must be numeric");
      f.coeffs()(I, a) += value[a].get<double>();
    }
  }
  return f;
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json j = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    j.push_back(row);
  }
  return j;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidInput("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXd M(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidInput("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw InvalidInput("matrix entries must be numbers");
      M(r, c) = j[r][c].get<double>();
    }
  }
  return M;
}

}  // namespace genk
