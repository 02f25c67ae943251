#include "genk/clifford.hpp"

#include <cmath>

#include "genk/linalg.hpp"

namespace genk {

Eigen::MatrixXd pairing_matrix(int m) {
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  P.topRightCorner(m, m) = 0.5 * Eigen::MatrixXd::Identity(m, m);
  P.bottomLeftCorner(m, m) = 0.5 * Eigen::MatrixXd::Identity(m, m);
  return P;
}

Eigen::MatrixXd chevalley_matrix(int m) {
  check_dim(m);
  const Mask n = Mask(1) << m;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (Mask I = 0; I < n; ++I) {
    const Mask J = top_mask(m) ^ I;
    C(I, J) = -double(wedge_sign(I, J) * transpose_sign(degree(J)));
  }
  return C;
}

Eigen::VectorXi chevalley_symmetry(int m) {
  const Eigen::MatrixXd C = chevalley_matrix(m);
  Eigen::VectorXi sym = Eigen::VectorXi::Zero(m + 1);
  for (int j = 0; j <= m; ++j) {
    int seen = 0;
    for (Mask I = 0; I < Mask(C.rows()); ++I) {
      if (degree(I) != j) continue;
      const Mask J = top_mask(m) ^ I;
      const int s = C(I, J) == C(J, I) ? 1 : -1;
      seen = (seen == 0 || seen == s) ? s : 2;
    }
    sym(j) = seen == 2 ? 0 : seen;
  }
  return sym;
}

Eigen::MatrixXd two_form_matrix(const Form<double>& B) {
  const int m = B.dim();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      M(a - 1, b - 1) = B[index_mask(a) | index_mask(b)];
      M(b - 1, a - 1) = -M(a - 1, b - 1);
    }
  return M;
}

Form<double> two_form(const Eigen::MatrixXd& Bab) {
  const int m = int(Bab.rows());
  Form<double> B(m);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) B[index_mask(a) | index_mask(b)] = 0.5 * (Bab(a - 1, b - 1) - Bab(b - 1, a - 1));
  return B;
}

Eigen::MatrixXd b_transform_matrix(const Form<double>& B) {
  const int m = B.dim();
  Eigen::MatrixXd E = Eigen::MatrixXd::Identity(2 * m, 2 * m);
  E.bottomLeftCorner(m, m) = two_form_matrix(B);
  return E;
}

GenMetric GenMetric::from_matrix(const Eigen::MatrixXd& G, double tol) {
  if (G.rows() != G.cols() || G.rows() % 2 != 0 || G.rows() == 0)
    throw DimensionMismatch("generalized metric must be a square matrix of even size");
  const int m = int(G.rows() / 2);
  const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2 * m, 2 * m);
  if ((G * G - I).cwiseAbs().maxCoeff() > tol * scale * scale) throw InvariantViolation("𝔾² ≠ Id");
  const Eigen::MatrixXd P = pairing_matrix(m);
  const Eigen::MatrixXd PG = P * G;
  if ((PG - PG.transpose()).cwiseAbs().maxCoeff() > tol * scale) throw InvariantViolation("𝔾 is not self-adjoint for the pairing");
  if ((G.transpose() * P * G - P).cwiseAbs().maxCoeff() > tol * scale * scale)
    throw InvariantViolation("𝔾 is not orthogonal for the pairing");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (PG + PG.transpose()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= tol * scale) throw InvariantViolation("⟨𝔾v, v⟩ is not positive definite");
  return GenMetric(G);
}

GenMetric GenMetric::block(const Eigen::MatrixXd& g) {
  const Eigen::Index m = g.rows();
  if (g.cols() != m) throw DimensionMismatch("metric must be square");
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success || (g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvariantViolation("metric is not symmetric positive definite");
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  G.topRightCorner(m, m) = llt.solve(Eigen::MatrixXd::Identity(m, m));
  G.bottomLeftCorner(m, m) = g;
  return GenMetric(G);
}

GenMetric GenMetric::from_split(const Eigen::MatrixXd& g, const Form<double>& B) {
  const Eigen::MatrixXd G0 = block(g).matrix();
  const Eigen::MatrixXd E = b_transform_matrix(B);
  Eigen::MatrixXd Einv = E;
  Einv.bottomLeftCorner(g.rows(), g.rows()) *= -1.0;
  return GenMetric(E * G0 * Einv);
}

MetricSplit metric_split(const GenMetric& G) {
  const int m = G.dim();
  const Eigen::MatrixXd Pp = 0.5 * (G.matrix() + Eigen::MatrixXd::Identity(2 * m, 2 * m));
  const Eigen::MatrixXd V = la::range_basis(Pp);
  if (V.cols() != m) throw InvariantViolation("V₊ does not have dimension m");
  const Eigen::MatrixXd Xb = V.topRows(m);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(Xb);
  if (!lu.isInvertible()) throw InvariantViolation("V₊ meets the cotangent subspace");
  const Eigen::MatrixXd E = V.bottomRows(m) * lu.inverse();
  MetricSplit out{0.5 * (E + E.transpose()), two_form(0.5 * (E - E.transpose()))};
  Eigen::LLT<Eigen::MatrixXd> llt(out.g);
  if (llt.info() != Eigen::Success) throw InvariantViolation("split metric is not positive definite");
  return out;
}

Eigen::MatrixXd positive_frame(const GenMetric& G, int orientation) {
  const int m = G.dim();
  const Eigen::MatrixXd P = pairing_matrix(m);
  Eigen::MatrixXd F = 0.5 * (G.matrix() + Eigen::MatrixXd::Identity(2 * m, 2 * m)).leftCols(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) F.col(i) -= (F.col(j).dot(P * F.col(i))) * F.col(j);
    const double nrm = F.col(i).dot(P * F.col(i));
    if (nrm <= 0) throw InvariantViolation("V₊ is not positive for the pairing");
    F.col(i) /= std::sqrt(nrm);
  }
  const double det = F.topRows(m).determinant();
  if ((det > 0) != (orientation > 0)) F.col(m - 1) *= -1.0;
  return F;
}

Eigen::MatrixXd hodge_star_matrix(const GenMetric& G, int orientation) {
  const int m = G.dim();
  const Eigen::MatrixXd F = positive_frame(G, orientation);
  Eigen::MatrixXd star = -Eigen::MatrixXd::Identity(Eigen::Index(1) << m, Eigen::Index(1) << m);
  for (int i = 0; i < m; ++i)
    star = clifford_matrix(GenVector<double>::from_stacked(F.col(i))) * star;
  return star;
}

Form<cd> hodge_star(const GenMetric& G, int orientation, const Form<cd>& a) {
  if (a.dim() != G.dim()) throw DimensionMismatch("form and metric of different dimension");
  return Form<cd>(a.dim(), hodge_star_matrix(G, orientation).cast<cd>() * a.coeffs());
}

std::pair<Form<cd>, Form<cd>> sd_asd_project(const GenMetric& G, int orientation, const Form<cd>& a) {
  if (G.dim() != 4) throw InvalidInput("self-dual splitting requires m = 4");
  const Form<cd> s = hodge_star(G, orientation, a);
  return {cd(0.5) * (a + s), cd(0.5) * (a - s)};
}

Eigen::MatrixXd classical_hodge_star_matrix(const Eigen::MatrixXd& g, int orientation) {
  const int m = int(g.rows());
  check_dim(m);
  const Eigen::MatrixXd ginv = g.inverse();
  const double vol = (orientation > 0 ? 1.0 : -1.0) * std::sqrt(g.determinant());
  const Mask n = Mask(1) << m;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (Mask J = 0; J < n; ++J)
    for (Mask I = 0; I < n; ++I) {
      if (degree(I) != degree(J)) continue;
      const auto ri = mask_indices(I), cj = mask_indices(J);
      Eigen::MatrixXd sub(ri.size(), cj.size());
      for (std::size_t a = 0; a < ri.size(); ++a)
        for (std::size_t b = 0; b < cj.size(); ++b) sub(a, b) = ginv(ri[a] - 1, cj[b] - 1);
      const double gram = ri.empty() ? 1.0 : sub.determinant();
      const Mask K = top_mask(m) ^ I;
      S(K, J) += vol * wedge_sign(I, K) * gram;
    }
  return S;
}

}  // namespace genk
