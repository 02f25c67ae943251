#include "genk/scenario.hpp"

#include <fstream>
#include <set>

namespace genk {

namespace {

GKFiber parse_gk(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw InvalidInput("gk recipe needs a \"type\"");
  const std::string type = j["type"].get<std::string>();
  if (type == "flat_kahler") return flat_kahler_fiber(4);
  if (type == "kahler") {
    const Eigen::MatrixXd g = j.contains("g") ? matrix_from_json(j["g"]) : Eigen::MatrixXd::Identity(4, 4);
    const Eigen::MatrixXd I = j.contains("I") ? matrix_from_json(j["I"]) : standard_complex_structure(4);
    const Form<double> B = j.contains("B") ? form_from_json(j["B"], 4) : Form<double>(4);
    if (g.rows() != 4 || g.cols() != 4 || I.rows() != 4 || I.cols() != 4)
      throw InvalidInput("kahler recipe needs 4 × 4 g and I");
    return kahler_fiber(g, I, B);
  }
  if (type == "pair") {
    if (!j.contains("J1") || !j.contains("J2")) throw InvalidInput("pair recipe needs J1 and J2");
    const Eigen::MatrixXd J1 = matrix_from_json(j["J1"]), J2 = matrix_from_json(j["J2"]);
    if (J1.rows() != 8 || J1.cols() != 8 || J2.rows() != 8 || J2.cols() != 8)
      throw InvalidInput("pair recipe needs 8 × 8 matrices");
    return gk_validate(GCSFiber(J1), GCSFiber(J2));
  }
  throw InvalidInput("unknown gk recipe type '" + type + "'");
}

ReductionSpec parse_reduction(const json& j) {
  if (!j.is_object() || !j.contains("K")) throw InvalidInput("reduction needs generators \"K\"");
  ReductionSpec r;
  r.K = matrix_from_json(j["K"]).transpose();
  if (r.K.rows() != 8) throw InvalidInput("each generator of K needs 8 stacked coordinates");
  r.n_action = j.value("n_action", 0);
  if (j.contains("theta")) {
    r.theta = matrix_from_json(j["theta"]).transpose();
    if (r.theta->rows() != 4 || r.theta->cols() != r.n_action)
      throw InvalidInput("theta needs one covector of length 4 per action generator");
  }
  for (const auto& [key, v] : j.items())
    if (key != "K" && key != "n_action" && key != "theta") throw InvalidInput("unknown reduction key '" + key + "'");
  return r;
}

}  // namespace

TorusScenario Scenario::torus() const {
  TorusScenario t;
  t.algebra = algebra;
  t.g = g;
  t.orientation = orientation;
  t.H = H;
  t.A = A;
  t.gk = gk;
  t.radius = radius;
  t.tol = tol;
  return t;
}

GenMetric Scenario::metric() const { return gk ? gk->metric() : GenMetric::block(g); }

void validate_scenario(const Scenario& s) {
  for (Mask I = 0; I < Mask(s.H.size()); ++I)
    if (degree(I) != 3 && s.H[I] != 0.0) throw InvalidInput("H must be a three-form");
  for (Mask I = 0; I < Mask(s.A.coeffs().rows()); ++I)
    if (degree(I) != 1 && s.A.coeffs().row(I).cwiseAbs().maxCoeff() != 0.0) throw InvalidInput("A must be a one-form");
  if (s.orientation != 1 && s.orientation != -1) throw InvalidInput("orientation must be +1 or -1");
  if (s.radius < 0) throw InvalidInput("radius must be non-negative");
  if (!(s.tol > 0)) throw InvalidInput("tolerance must be positive");
  if (s.g.rows() != 4 || s.g.cols() != 4 || (s.g - s.g.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
      Eigen::LLT<Eigen::MatrixXd>(s.g).info() != Eigen::Success)
    throw InvalidInput("metric must be a symmetric positive definite 4 × 4 matrix");
  if (s.tiers.fiber && !s.gk) throw InvalidInput("fiber tier requires a gk recipe");
  if (s.tiers.gk_lab && !s.gk) throw InvalidInput("gk_lab tier requires a gk recipe");
  if (s.tiers.gk_lab && s.H.coeffs().norm() != 0.0) throw InvalidInput("gk_lab tier requires H = 0");
  if (s.tiers.gk_lab && !s.tiers.metric_lab) throw InvalidInput("gk_lab tier requires the metric_lab tier");
  if (s.tiers.reduction && !s.reduction) throw InvalidInput("reduction tier requires a reduction payload");
  if (!s.tiers.fiber && !s.tiers.reduction && !s.tiers.metric_lab) throw InvalidInput("scenario enables no tier");
}

Scenario parse_scenario(const json& j) {
  static const std::set<std::string> keys = {"name", "tiers",  "algebra", "metric", "orientation", "H", "A",
                                             "gk",   "radius", "tol",     "seed",   "reduction"};
  if (!j.is_object()) throw InvalidInput("scenario must be a JSON object");
  for (const auto& [key, v] : j.items())
    if (!keys.count(key)) throw InvalidInput("unknown scenario key '" + key + "'");
  try {
    Scenario s;
    s.name = j.value("name", std::string("unnamed"));
    if (!j.contains("tiers") || !j["tiers"].is_array()) throw InvalidInput("scenario needs a \"tiers\" array");
    for (const auto& t : j["tiers"]) {
      const std::string name = t.get<std::string>();
      if (name == "fiber")
        s.tiers.fiber = true;
      else if (name == "reduction")
        s.tiers.reduction = true;
      else if (name == "metric_lab")
        s.tiers.metric_lab = true;
      else if (name == "gk_lab")
        s.tiers.gk_lab = true;
      else
        throw InvalidInput("unknown tier '" + name + "'");
    }
    s.algebra = LieAlgebraData::by_name(j.value("algebra", std::string("u1")));
    if (j.contains("gk")) s.gk = parse_gk(j["gk"]);
    if (j.contains("metric"))
      s.g = matrix_from_json(j["metric"]);
    else if (s.gk)
      s.g = metric_split(s.gk->metric()).g;
    s.orientation = j.value("orientation", s.gk ? s.gk->orientation() : 1);
    if (j.contains("H")) s.H = form_from_json(j["H"], 4);
    s.A = j.contains("A") ? laform_from_json(j["A"], 4, s.algebra) : LaForm<double>(4, s.algebra);
    if (j.contains("reduction")) s.reduction = parse_reduction(j["reduction"]);
    s.radius = j.value("radius", 2);
    s.tol = j.value("tol", 1e-10);
    s.seed = j.value("seed", std::uint64_t(1));
    validate_scenario(s);
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open scenario file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("scenario is not valid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

}  // namespace genk
