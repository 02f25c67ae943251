#include "genk/reduction.hpp"

#include "genk/linalg.hpp"

namespace genk {

namespace {

Eigen::MatrixXd require_metric(const ReductionProblem& P) {
  if (!P.metric) throw InvalidInput("reduction problem has no generalized metric");
  if (P.metric->dim() != P.m) throw DimensionMismatch("metric and problem of different dimension");
  return P.metric->matrix();
}

/// Orthonormal basis of K^⊥ Euclidean-orthogonal to K.
Eigen::MatrixXd complement_basis(const ReductionProblem& P) {
  const Eigen::MatrixXd perp = k_perp(P);
  if (P.K.cols() == 0) return perp;
  const Eigen::MatrixXd Qk = la::range_basis(P.K);
  const Eigen::MatrixXd inside = perp - Qk * (Qk.transpose() * perp);
  return la::range_basis(inside);
}

Eigen::MatrixXd restrict_endomorphism(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Kg, const Eigen::MatrixXd& phi) {
  const Eigen::MatrixXd M = Kg.transpose() * A * Kg;
  return phi * M * phi.inverse();
}

}  // namespace

void validate_problem(const ReductionProblem& P, double tol) {
  if (P.K.rows() != 2 * P.m) throw DimensionMismatch("generators must have 2m stacked coordinates");
  if (P.n_action < 0 || P.n_action > P.K.cols()) throw InvalidInput("n_action out of range");
  if (P.K.cols() == 0) return;
  const double scale = std::max(1.0, P.K.cwiseAbs().maxCoeff());
  const Eigen::MatrixXd gram = P.K.transpose() * pairing_matrix(P.m) * P.K;
  if (gram.cwiseAbs().maxCoeff() > tol * scale * scale) throw InvariantViolation("K is not isotropic");
  if (la::rank(P.K) != P.K.cols()) throw InvariantViolation("generators of K are linearly dependent");
  for (Eigen::Index c = P.n_action; c < P.K.cols(); ++c)
    if (P.K.col(c).head(P.m).cwiseAbs().maxCoeff() > tol * scale)
      throw InvalidInput("moment generators must be pure covectors");
}

Eigen::MatrixXd k_perp(const ReductionProblem& P) {
  validate_problem(P);
  if (P.K.cols() == 0) return Eigen::MatrixXd::Identity(2 * P.m, 2 * P.m);
  return la::null_space(Eigen::MatrixXd(P.K.transpose() * pairing_matrix(P.m)));
}

ReducedFiber quotient_fiber(const ReductionProblem& P) {
  ReducedFiber f;
  f.basis = complement_basis(P);
  f.pairing = f.basis.transpose() * pairing_matrix(P.m) * f.basis;
  if (la::rank(f.pairing) != f.dim()) throw InvariantViolation("induced pairing on K^⊥/K is degenerate");
  return f;
}

Eigen::MatrixXd kg_space(const ReductionProblem& P) {
  const Eigen::MatrixXd G = require_metric(P);
  const Eigen::MatrixXd perp = k_perp(P);
  return la::intersect(perp, Eigen::MatrixXd(G * perp));
}

double kg_conditioning(const ReductionProblem& P) {
  const Eigen::MatrixXd Kg = kg_space(P);
  const Eigen::MatrixXd Q = complement_basis(P);
  if (Kg.cols() != Q.cols()) return 0.0;
  if (Q.cols() == 0) return 1.0;
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(Q.transpose() * Kg).singularValues();
  return s(s.size() - 1) / s(0);
}

MetricReduction reduced_metric(const ReductionProblem& P) {
  const Eigen::MatrixXd G = require_metric(P);
  const int m = P.m;
  MetricReduction out;
  out.fiber = quotient_fiber(P);
  const Eigen::MatrixXd Kg = kg_space(P);
  const Eigen::MatrixXd& Q = out.fiber.basis;
  if (Kg.cols() != Q.cols()) throw InvariantViolation("K^𝔾 and K^⊥/K have different dimensions");
  const Eigen::MatrixXd phi = Q.transpose() * Kg;
  const Eigen::MatrixXd phinv = phi.inverse();
  out.fiber.G = restrict_endomorphism(G, Kg, phi);
  out.fiber.metric_gram = phinv.transpose() * (Kg.transpose() * pairing_matrix(m) * G * Kg) * phinv;

  const MetricSplit split = metric_split(*P.metric);
  const Eigen::MatrixXd Bm = two_form_matrix(split.B);
  const int r = P.n_action;
  const int s = int(P.K.cols()) - r;
  const Eigen::MatrixXd X = P.K.topRows(m).leftCols(r);
  const Eigen::MatrixXd xi = P.K.bottomRows(m).leftCols(r) - Bm * X;
  Eigen::MatrixXd constraints(s + r, m);
  constraints.topRows(s) = P.K.bottomRows(m).rightCols(s).transpose();
  constraints.bottomRows(r) = (split.g * X + xi).transpose();
  const Eigen::MatrixXd TP = s ? la::null_space(Eigen::MatrixXd(constraints.topRows(s))) : Eigen::MatrixXd::Identity(m, m);
  out.tau_plus = la::null_space(constraints);
  const int t = int(out.tau_plus.cols());
  Eigen::MatrixXd span(m, t + r);
  span << out.tau_plus, X;
  if (la::rank(span) != t + r || la::rank(X) != r || t + r != TP.cols())
    throw InvariantViolation("τ₊ is not transversal to the orbit directions");
  out.tau_metric = out.tau_plus.transpose() * split.g * out.tau_plus;

  const Eigen::MatrixXd Vp =
      la::range_basis(Eigen::MatrixXd(0.5 * (G + Eigen::MatrixXd::Identity(2 * m, 2 * m)) * Kg));
  if (Vp.cols() != t) throw InvariantViolation("reduced V₊ has the wrong dimension");
  const Eigen::MatrixXd coords = span.colPivHouseholderQr().solve(Eigen::MatrixXd(Vp.topRows(m)));
  const Eigen::MatrixXd A = coords.topRows(t);
  const Eigen::MatrixXd gram = Vp.transpose() * pairing_matrix(m) * Vp;
  const Eigen::MatrixXd Ainv = A.inverse();
  out.induced_metric = Ainv.transpose() * gram * Ainv;
  return out;
}

GKReduction gk_reduce_fiber(const ReductionProblem& P0, const GKFiber& K, double threshold) {
  ReductionProblem P = P0;
  P.metric = K.metric();
  GKReduction out;
  out.fiber = quotient_fiber(P);
  const Eigen::MatrixXd Kg = kg_space(P);
  const Eigen::MatrixXd J1 = K.J1().J(), J2 = K.J2().J();
  out.residual = Kg.cols() ? la::subspace_distance(Eigen::MatrixXd(J1 * Kg), Kg) : 0.0;
  out.accepted = out.residual <= threshold;
  if (!out.accepted) return out;

  const Eigen::MatrixXd& Q = out.fiber.basis;
  const Eigen::MatrixXd phi = Q.transpose() * Kg;
  out.fiber.G = restrict_endomorphism(K.metric().matrix(), Kg, phi);
  out.fiber.J1 = restrict_endomorphism(J1, Kg, phi);
  out.fiber.J2 = restrict_endomorphism(J2, Kg, phi);
  const Eigen::MatrixXd phinv = phi.inverse();
  out.fiber.metric_gram = phinv.transpose() * (Kg.transpose() * pairing_matrix(P.m) * K.metric().matrix() * Kg) * phinv;

  const Eigen::MatrixXd& a = *out.fiber.J1;
  const Eigen::MatrixXd& b = *out.fiber.J2;
  const Eigen::Index d = a.rows();
  const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd prod = -a * b;
  const Eigen::MatrixXd pos = out.fiber.pairing * prod;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (pos + pos.transpose()), Eigen::EigenvaluesOnly);
  out.axiom_residual = std::max({(a * b - b * a).cwiseAbs().maxCoeff(), (a * a + Id).cwiseAbs().maxCoeff(),
                                 (b * b + Id).cwiseAbs().maxCoeff(), (prod - *out.fiber.G).cwiseAbs().maxCoeff(),
                                 (pos - pos.transpose()).cwiseAbs().maxCoeff(),
                                 d ? std::max(0.0, -es.eigenvalues().minCoeff()) : 0.0});
  if (d && es.eigenvalues().minCoeff() <= 0) out.axiom_residual = std::max(out.axiom_residual, 1.0);
  return out;
}

}  // namespace genk
