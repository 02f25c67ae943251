#include "genk/report.hpp"

#include <cstdio>
#include <sstream>

#include "genk/fourier.hpp"
#include "genk/linalg.hpp"
#include "genk/rational.hpp"

namespace genk {

namespace {

CheckOutcome named(const std::string& name, double threshold) {
  CheckOutcome c;
  c.name = name;
  c.anchor = check_anchor(name);
  c.threshold = threshold;
  return c;
}

/// Sign of the generalized star against the Riemannian star on k-forms.
double star_sign(int k) { return (k == 1 || k == 2) ? 1.0 : -1.0; }

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Eigen::MatrixXd default_theta(const Eigen::MatrixXd& X) { return X * (X.transpose() * X).inverse(); }

ReductionProblem problem_of(const Scenario& s) {
  ReductionProblem P;
  P.m = 4;
  P.K = s.reduction->K;
  P.n_action = s.reduction->n_action;
  P.metric = s.metric();
  return P;
}

MatX<Rational> to_rational(const Eigen::MatrixXd& M) {
  MatX<Rational> Q(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) Q(i, j) = Rational(M(i, j));
  return Q;
}

template <typename S>
double theta_residual(const MatX<S>& theta, const MatX<S>& X, const MatX<S>& xi) {
  const Form<S> B = b_theta(theta, X, xi);
  double r = 0;
  for (Eigen::Index a = 0; a < X.cols(); ++a) {
    const VecX<S> c = contract(VecX<S>(X.col(a)), B).as_covector();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const S d = c(i) - xi(i, a);
      if constexpr (std::is_same_v<S, double>)
        r = std::max(r, std::abs(d));
      else
        r = std::max(r, d == 0 ? 0.0 : 1.0);
    }
  }
  return r;
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckOutcome hodge_star_law_check(const GenMetric& G, int orientation, double tol) {
  CheckOutcome out = named("hodge_star_law", tol);
  const Eigen::MatrixXd star = hodge_star_matrix(G, orientation);
  const int m = G.dim();
  const Eigen::Index n = star.rows();
  const MetricSplit split = metric_split(G);
  const Eigen::MatrixXd classical = classical_hodge_star_matrix(split.g, orientation);
  Eigen::MatrixXd signed_star = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k <= m; ++k) signed_star += star_sign(k) * classical * degree_selector(m, {k});
  const Eigen::MatrixXd eB = wedge_matrix(exp_wedge(split.B));
  const Eigen::MatrixXd emB = wedge_matrix(exp_wedge(Form<double>(-1.0 * split.B)));
  const double square = (star * star - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  const double classical_res = (star - eB * signed_star * emB).cwiseAbs().maxCoeff();
  out.values.emplace_back("square_residual", square);
  out.values.emplace_back("classical_residual", classical_res);
  out.residual = std::max(square, classical_res);
  out.finish();
  return out;
}

CheckOutcome reduction_fiber_check(const ReductionProblem& P, double tol) {
  CheckOutcome out = named("reduction_fiber", tol);
  const int k = int(P.K.cols());
  const ReducedFiber f = quotient_fiber(P);
  const auto [pos, neg] = la::signature(f.pairing);
  const int kg = int(kg_space(P).cols());
  const double cond = kg_conditioning(P);
  const MetricReduction red = reduced_metric(P);
  const Eigen::MatrixXd& G = *red.fiber.G;
  const double involution = (G * G - Eigen::MatrixXd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
  const double tangent = (red.tau_metric - red.induced_metric).cwiseAbs().maxCoeff();
  const bool dims_ok = pos == neg && pos + neg == f.dim() && kg == 2 * P.m - 2 * k && cond >= 1e-9;
  out.values.emplace_back("quotient_dim", f.dim());
  out.values.emplace_back("pairing_positive", pos);
  out.values.emplace_back("pairing_negative", neg);
  out.values.emplace_back("kg_dim", kg);
  out.values.emplace_back("kg_conditioning", cond);
  out.values.emplace_back("reduced_involution_residual", involution);
  out.values.emplace_back("tangent_metric_residual", tangent);
  out.residual = std::max({involution, tangent, dims_ok ? 0.0 : 1.0});
  out.finish();
  return out;
}

CheckOutcome b_theta_check(const ReductionSpec& R, bool exact, double tol) {
  CheckOutcome out = named("b_theta_contraction", exact ? 0.0 : tol);
  const int r = R.n_action;
  if (r == 0) {
    out.skipped = true;
    out.note = "no action generators";
    out.finish();
    return out;
  }
  const Eigen::MatrixXd X = R.K.topRows(4).leftCols(r);
  const Eigen::MatrixXd xi = R.K.bottomRows(4).leftCols(r);
  if (exact) {
    const MatX<Rational> Xq = to_rational(X), xiq = to_rational(xi);
    MatX<Rational> thq;
    if (R.theta)
      thq = to_rational(*R.theta);
    else
      thq = Xq * MatX<Rational>(Xq.transpose() * Xq).fullPivLu().solve(MatX<Rational>::Identity(r, r));
    out.residual = theta_residual<Rational>(thq, Xq, xiq);
    out.note = "rational arithmetic; residual 0 means exact equality";
  } else {
    const Eigen::MatrixXd theta = R.theta ? *R.theta : default_theta(X);
    out.residual = theta_residual<double>(theta, X, xi);
  }
  out.values.emplace_back("generators", r);
  out.finish();
  return out;
}

CheckOutcome gk_reduction_check(const ReductionProblem& P, const GKFiber& K, double tol) {
  CheckOutcome out = named("gk_reduction", tol);
  const GKReduction red = gk_reduce_fiber(P, K);
  out.values.emplace_back("accepted", red.accepted ? 1.0 : 0.0);
  out.values.emplace_back("invariance_residual", red.residual);
  out.values.emplace_back("axiom_residual", red.axiom_residual);
  out.values.emplace_back("reduced_dim", red.fiber.dim());
  if (!red.accepted) out.note = "K^G is not invariant under the first structure";
  out.residual = red.accepted ? red.axiom_residual : std::max(1.0, red.residual);
  out.finish();
  return out;
}

Report run_scenario(const Scenario& s) {
  validate_scenario(s);
  Report rep;
  rep.scenario = s.name;
  rep.seed = s.seed;
  rep.radius = s.radius;
  rep.tol = s.tol;
  rep.arithmetic = s.exact ? "rational" : "double";

  if (s.tiers.fiber) {
    rep.checks.push_back(hodge_star_law_check(s.metric(), s.orientation, s.tol));
    rep.checks.push_back(verify_star_identity(*s.gk, s.tol));
    CheckOutcome integ = named("integrability", s.tol);
    int idx = 1;
    for (const GCSFiber* J : {&s.gk->J1(), &s.gk->J2()}) {
      const CheckOutcome c = integrability_check_const(*J, s.H, s.tol);
      integ.values.emplace_back("J" + std::to_string(idx++) + "_residual", c.residual);
      integ.residual = std::max(integ.residual, c.residual);
    }
    integ.finish();
    rep.checks.push_back(integ);
  }

  if (s.tiers.metric_lab) {
    const TorusScenario ts = s.torus();
    CheckOutcome gate = moment_gate(ts);
    if (!gate.pass)
      throw NotInstanton("moment map nonzero: |F+| = " + short_number(gate.residual) + " exceeds " +
                             short_number(gate.threshold),
                         gate.residual);
    const TorusLab lab(ts);
    rep.checks.push_back(gate);
    rep.checks.push_back(lifted_action_check(lab, s.seed));
    rep.checks.push_back(integration_by_parts_check(lab, s.seed));
    rep.checks.push_back(complex_assemble(lab).check);
    rep.checks.push_back(harmonic_spaces(lab).check);
    rep.checks.push_back(les_check(lab).check);
    rep.checks.push_back(courant_fourier_check(s.H, s.radius, s.seed, s.tol));
    if (s.tiers.gk_lab) {
      rep.checks.push_back(delta_decomposition_check(lab));
      rep.checks.push_back(adjoint_check(lab));
      rep.checks.push_back(laplacian_check(lab));
      rep.checks.push_back(gk_inheritance_check(lab));
    }
  }

  if (s.tiers.reduction) {
    const ReductionProblem P = problem_of(s);
    rep.checks.push_back(reduction_fiber_check(P, s.tol));
    rep.checks.push_back(b_theta_check(*s.reduction, s.exact, s.tol));
    if (s.gk) {
      rep.checks.push_back(gk_reduction_check(P, *s.gk, s.tol));
    } else {
      CheckOutcome c = named("gk_reduction", s.tol);
      c.skipped = true;
      c.note = "scenario has no generalized Kähler fiber";
      c.finish();
      rep.checks.push_back(c);
    }
  }
  return rep;
}

ordered_json report_to_json(const Report& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json values = ordered_json::object();
    for (const auto& [k, v] : c.values) values[k] = v;
    ordered_json modes = ordered_json::array();
    for (const auto& m : c.modes) modes.push_back({{"k", m.k}, {"residual", m.residual}});
    checks.push_back({{"name", c.name},
                      {"tier", catalog_entry(c.name).tier},
                      {"anchor", c.anchor},
                      {"residual", c.residual},
                      {"threshold", c.threshold},
                      {"pass", c.pass},
                      {"skipped", c.skipped},
                      {"note", c.note},
                      {"values", values},
                      {"modes", modes}});
  }
  return {{"scenario", r.scenario},
          {"environment", {{"seed", r.seed}, {"radius", r.radius}, {"tol", r.tol}, {"arithmetic", r.arithmetic}}},
          {"pass", r.pass()},
          {"checks", checks}};
}

Report report_from_json(const ordered_json& j) {
  try {
    Report r;
    r.scenario = j.at("scenario").get<std::string>();
    const auto& env = j.at("environment");
    r.seed = env.at("seed").get<std::uint64_t>();
    r.radius = env.at("radius").get<int>();
    r.tol = env.at("tol").get<double>();
    r.arithmetic = env.at("arithmetic").get<std::string>();
    for (const auto& cj : j.at("checks")) {
      CheckOutcome c;
      c.name = cj.at("name").get<std::string>();
      c.anchor = cj.at("anchor").get<std::string>();
      c.residual = cj.at("residual").get<double>();
      c.threshold = cj.at("threshold").get<double>();
      c.pass = cj.at("pass").get<bool>();
      c.skipped = cj.at("skipped").get<bool>();
      c.note = cj.at("note").get<std::string>();
      for (const auto& [k, v] : cj.at("values").items()) c.values.emplace_back(k, v.get<double>());
      for (const auto& mj : cj.at("modes")) c.modes.push_back({mj.at("k").get<Mode>(), mj.at("residual").get<double>()});
      r.checks.push_back(std::move(c));
    }
    return r;
  } catch (const ordered_json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "check,tier,k1,k2,k3,k4,residual,threshold,pass\n";
  for (const auto& c : r.checks) {
    const std::string head = c.name + "," + catalog_entry(c.name).tier + ",";
    const std::string tail = number(c.threshold) + "," + (c.skipped ? "skipped" : c.pass ? "pass" : "fail") + "\n";
    if (c.modes.empty()) {
      out << head << ",,,," << number(c.residual) << "," << tail;
      continue;
    }
    for (const auto& m : c.modes)
      out << head << m.k[0] << "," << m.k[1] << "," << m.k[2] << "," << m.k[3] << "," << number(m.residual) << ","
          << tail;
  }
  return out.str();
}

std::string report_table(const Report& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "scenario %s  seed %llu  radius %d  arithmetic %s\n", r.scenario.c_str(),
                static_cast<unsigned long long>(r.seed), r.radius, r.arithmetic.c_str());
  out << line;
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "  %-24s %-5s residual %-12.3e threshold %-10.1e\n", c.name.c_str(),
                  c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL", c.residual, c.threshold);
    out << line;
  }
  out << (r.pass() ? "overall PASS\n" : "overall FAIL\n");
  return out.str();
}

}  // namespace genk
