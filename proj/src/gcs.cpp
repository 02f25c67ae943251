#include "genk/gcs.hpp"
#include "genk/catalog.hpp"

#include <cmath>
#include <cstdlib>

#include "genk/linalg.hpp"

namespace genk {

namespace {

const cd I_UNIT(0.0, 1.0);

cd ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::vector<Eigen::MatrixXd> basis_clifford(int m) {
  std::vector<Eigen::MatrixXd> C;
  for (int a = 1; a <= m; ++a) C.push_back(clifford_matrix(GenVector<double>::tangent(m, a)));
  for (int a = 1; a <= m; ++a) C.push_back(clifford_matrix(GenVector<double>::cotangent(m, a)));
  return C;
}

void check_orthogonal_complex(const Eigen::MatrixXd& J, double tol) {
  if (J.rows() != J.cols() || J.rows() % 4 != 0 || J.rows() == 0)
    throw DimensionMismatch("generalized complex structure must be 2m × 2m with m even");
  const int m = int(J.rows() / 2);
  const double scale = std::max(1.0, J.cwiseAbs().maxCoeff());
  const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(2 * m, 2 * m);
  if ((J * J + Id).cwiseAbs().maxCoeff() > tol * scale * scale) throw InvariantViolation("𝕁² ≠ −Id");
  const Eigen::MatrixXd P = pairing_matrix(m);
  if ((J.transpose() * P * J - P).cwiseAbs().maxCoeff() > tol * scale * scale)
    throw InvariantViolation("𝕁 is not orthogonal for the pairing");
}

}  // namespace

Eigen::MatrixXd spin_matrix(const Eigen::MatrixXd& A) {
  const int m = int(A.rows() / 2);
  const auto C = basis_clifford(m);
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(C[0].rows(), C[0].cols());
  for (int a = 0; a < 2 * m; ++a) {
    const int dual = a < m ? a + m : a - m;
    Eigen::MatrixXd Au = Eigen::MatrixXd::Zero(S.rows(), S.cols());
    for (int b = 0; b < 2 * m; ++b)
      if (A(b, a) != 0.0) Au += A(b, a) * C[b];
    S += 0.5 * Au * C[dual];
  }
  return S;
}

GCSFiber::GCSFiber(const Eigen::MatrixXd& J, double tol) : m_(int(J.rows() / 2)), J_(J) {
  check_orthogonal_complex(J, tol);
  const int n = m_ / 2;
  spin_ = spin_matrix(J_);
  const Eigen::Index N = spin_.rows();
  const Eigen::MatrixXcd S = spin_.cast<cd>();
  const Eigen::MatrixXcd Id = Eigen::MatrixXcd::Identity(N, N);
  jexp_ = Eigen::MatrixXcd::Zero(N, N);
  for (int k = -n; k <= n; ++k) {
    Eigen::MatrixXcd P = Id;
    for (int j = -n; j <= n; ++j)
      if (j != k) P = P * (S - I_UNIT * double(j) * Id) / (I_UNIT * double(k - j));
    proj_.push_back(P);
    jexp_ += ipow(k) * P;
  }
  if (la::rank(J_.topRightCorner(m_, m_), 1e-9 * std::max(1.0, J_.norm())) % 2 != 0)
    throw InvariantViolation("π_T∘𝕁|_{T*} has odd rank");
  type_ = (m_ - la::rank(J_.topRightCorner(m_, m_), 1e-9 * std::max(1.0, J_.norm()))) / 2;

  const Eigen::MatrixXcd& Pn = proj_.back();
  Eigen::Index best = 0;
  Pn.colwise().norm().maxCoeff(&best);
  rho_ = Form<cd>(m_, Pn.col(best));
  parity_ = rho_.odd().coeffs().norm() > rho_.even().coeffs().norm() ? 1 : 0;
}

const Eigen::MatrixXcd& GCSFiber::projector(int k) const {
  if (std::abs(k) > n()) throw InvalidInput("U^k requested outside |k| ≤ n");
  return proj_[k + n()];
}

Eigen::MatrixXcd GCSFiber::L_projector() const {
  const Eigen::Index d = J_.rows();
  return 0.5 * (Eigen::MatrixXcd::Identity(d, d) - I_UNIT * J_.cast<cd>());
}

Eigen::MatrixXcd GCSFiber::L_basis() const { return la::range_basis(L_projector()); }

GCSFiber gcs_from_complex(const Eigen::MatrixXd& I) {
  const Eigen::Index m = I.rows();
  if (I.cols() != m || ((I * I) + Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-10)
    throw InvariantViolation("tangent endomorphism is not a complex structure");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  J.topLeftCorner(m, m) = -I;
  J.bottomRightCorner(m, m) = I.transpose();
  return GCSFiber(J);
}

GCSFiber gcs_from_symplectic(const Form<double>& omega) {
  for (Mask I = 0; I < Mask(omega.size()); ++I)
    if (degree(I) != 2 && omega[I] != 0.0) throw InvalidInput("ω must be a two-form");
  const Eigen::MatrixXd W = two_form_matrix(omega).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(W);
  if (!lu.isInvertible()) throw InvariantViolation("ω is degenerate");
  const Eigen::Index m = W.rows();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  J.topRightCorner(m, m) = -lu.inverse();
  J.bottomLeftCorner(m, m) = W;
  return GCSFiber(J);
}

Form<cd> uk_project(const GCSFiber& S, int k, const Form<cd>& a) {
  if (a.dim() != S.dim()) throw DimensionMismatch("form and structure of different dimension");
  return Form<cd>(a.dim(), S.projector(k) * a.coeffs());
}

Form<cd> jexp_action(const GCSFiber& S, const Form<cd>& a) {
  if (a.dim() != S.dim()) throw DimensionMismatch("form and structure of different dimension");
  return Form<cd>(a.dim(), S.jexp() * a.coeffs());
}

double orientation_value(const GCSFiber& S) {
  const Form<cd>& rho = S.canonical_generator();
  const cd pairing = chevalley(rho, conj(rho));
  const cd v = double(S.parity() == 1 ? 1 : -1) * ipow(-S.n()) * pairing;
  if (std::abs(v) < 1e-12 || std::abs(v.imag()) > 1e-8 * std::abs(v))
    throw InvariantViolation("canonical line does not define a real volume form");
  return v.real();
}

int orientation_of(const GCSFiber& S) { return orientation_value(S) > 0 ? 1 : -1; }

CheckOutcome integrability_check_const(const GCSFiber& S, const Form<double>& H, double tol) {
  CheckOutcome out;
  out.name = "integrability";
  out.anchor = check_anchor(out.name);
  out.threshold = tol;
  const Form<cd> Hc = H.cast<cd>();
  const Eigen::MatrixXcd Q = S.L_projector();
  const Eigen::MatrixXcd L = S.L_basis();
  for (Eigen::Index a = 0; a < L.cols(); ++a)
    for (Eigen::Index b = 0; b < L.cols(); ++b) {
      const auto v = GenVector<cd>::from_stacked(L.col(a));
      const auto w = GenVector<cd>::from_stacked(L.col(b));
      const Eigen::VectorXcd br = courant_bracket_const(v, w, Hc).stacked();
      out.residual = std::max(out.residual, (br - Q * br).norm());
    }
  out.finish();
  return out;
}

std::pair<int, int> clifford_shift(VSub which) {
  switch (which) {
    case VSub::Plus10: return {1, 1};
    case VSub::Minus10: return {1, -1};
    case VSub::Plus01: return {-1, -1};
    default: return {-1, 1};
  }
}

GKFiber::GKFiber(GCSFiber J1, GCSFiber J2, GenMetric G)
    : J1_(std::move(J1)), J2_(std::move(J2)), G_(std::move(G)), orientation_(orientation_of(J1_)) {
  const int n = J1_.n();
  for (int p = -n; p <= n; ++p)
    for (int q = -n; q <= n; ++q)
      if (std::abs(p) + std::abs(q) <= n && ((p + q - n) % 2 == 0)) {
        lattice_.emplace_back(p, q);
        proj_.emplace(std::make_pair(p, q), J1_.projector(p) * J2_.projector(q));
      }
}

const Eigen::MatrixXcd& GKFiber::projector(int p, int q) const {
  const auto it = proj_.find({p, q});
  if (it == proj_.end())
    throw InvalidInput("(" + std::to_string(p) + "," + std::to_string(q) + ") is outside the U^{p,q} lattice");
  return it->second;
}

Eigen::MatrixXcd GKFiber::subspace(VSub which) const {
  const Eigen::MatrixXcd Q1 = J1_.L_projector(), Q2 = J2_.L_projector();
  switch (which) {
    case VSub::Plus10: return la::range_basis(Eigen::MatrixXcd(Q1 * Q2));
    case VSub::Minus10: return la::range_basis(Eigen::MatrixXcd(Q1 * Q2.conjugate()));
    case VSub::Plus01: return la::range_basis(Eigen::MatrixXcd(Q1.conjugate() * Q2.conjugate()));
    default: return la::range_basis(Eigen::MatrixXcd(Q1.conjugate() * Q2));
  }
}

GKFiber gk_validate(const GCSFiber& J1, const GCSFiber& J2, double tol) {
  if (J1.dim() != J2.dim()) throw DimensionMismatch("structures of different dimension");
  const double scale = std::max(1.0, J1.J().cwiseAbs().maxCoeff() * J2.J().cwiseAbs().maxCoeff());
  if ((J1.J() * J2.J() - J2.J() * J1.J()).cwiseAbs().maxCoeff() > tol * scale)
    throw InvariantViolation("𝕁₁ and 𝕁₂ do not commute");
  GenMetric G = GenMetric::from_matrix(-J1.J() * J2.J(), tol);
  return GKFiber(J1, J2, std::move(G));
}

Form<cd> upq_project(const GKFiber& K, int p, int q, const Form<cd>& a) {
  if (a.dim() != K.dim()) throw DimensionMismatch("form and fiber of different dimension");
  return Form<cd>(a.dim(), K.projector(p, q) * a.coeffs());
}

CheckOutcome verify_star_identity(const GKFiber& K, double tol) {
  CheckOutcome out;
  out.name = "star_identity";
  out.anchor = check_anchor(out.name);
  out.threshold = tol;
  const Eigen::MatrixXcd star = hodge_star_matrix(K.metric(), K.orientation()).cast<cd>();
  const double op = (star + K.J1().jexp() * K.J2().jexp()).cwiseAbs().maxCoeff();
  out.values.emplace_back("operator_residual", op);
  double blocks = 0;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(star.rows(), star.cols());
  for (const auto& [p, q] : K.lattice()) {
    const Eigen::MatrixXcd& P = K.projector(p, q);
    blocks = std::max(blocks, (star * P + ipow(p + q) * P).cwiseAbs().maxCoeff());
    total += P;
  }
  out.values.emplace_back("block_residual", blocks);
  const double completeness = (total - Eigen::MatrixXcd::Identity(star.rows(), star.cols())).cwiseAbs().maxCoeff();
  out.values.emplace_back("lattice_completeness", completeness);
  out.residual = std::max({op, blocks, completeness});
  out.finish();
  return out;
}

Eigen::MatrixXd standard_complex_structure(int m) {
  if (m % 2 != 0) throw InvalidInput("complex structure needs even dimension");
  Eigen::MatrixXd I = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; j += 2) {
    I(j + 1, j) = 1.0;
    I(j, j + 1) = -1.0;
  }
  return I;
}

GKFiber kahler_fiber(const Eigen::MatrixXd& g, const Eigen::MatrixXd& I, const Form<double>& B) {
  if ((I.transpose() * g * I - g).cwiseAbs().maxCoeff() > 1e-10)
    throw InvariantViolation("complex structure is not orthogonal for g");
  const Form<double> omega = two_form(g * I);
  const Eigen::MatrixXd E = b_transform_matrix(B);
  Eigen::MatrixXd Einv = E;
  Einv.bottomLeftCorner(g.rows(), g.rows()) *= -1.0;
  const GCSFiber J1(E * gcs_from_complex(I).J() * Einv);
  const GCSFiber J2(E * gcs_from_symplectic(omega).J() * Einv);
  return gk_validate(J1, J2);
}

GKFiber flat_kahler_fiber(int m) {
  return kahler_fiber(Eigen::MatrixXd::Identity(m, m), standard_complex_structure(m), Form<double>(m));
}

GKFiber conjugate(const GKFiber& K, const Eigen::MatrixXd& T) {
  const Eigen::MatrixXd P = pairing_matrix(K.dim());
  if ((T.transpose() * P * T - P).cwiseAbs().maxCoeff() > 1e-9) throw InvariantViolation("conjugating map does not preserve the pairing");
  const Eigen::MatrixXd Tinv = T.inverse();
  return gk_validate(GCSFiber(T * K.J1().J() * Tinv), GCSFiber(T * K.J2().J() * Tinv));
}

}  // namespace genk
