#pragma once

#include <memory>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "genk/exterior.hpp"

namespace genk {

using json = nlohmann::json;

/// "1" or "dx" followed by strictly increasing indices in 1..m.
Mask parse_label(const std::string& label, int m);

/// {"dx123": 1.0, ...}; absent labels are zero.
json form_to_json(const Form<double>& f);
Form<double> form_from_json(const json& j, int m);

/// {"coeff": {"dx1": [c_1, ..., c_d], ...}}.
json laform_to_json(const LaForm<double>& f);
LaForm<double> laform_from_json(const json& j, int m, std::shared_ptr<const LieAlgebraData> g);

/// Row-major nested arrays.
json matrix_to_json(const Eigen::MatrixXd& M);
Eigen::MatrixXd matrix_from_json(const json& j);

}  // namespace genk
