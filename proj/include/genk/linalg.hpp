#pragma once

#include <algorithm>
#include <utility>

#include <Eigen/Dense>

namespace genk::la {

/// Singular values below tol·max(1, σ_max) count as zero.
template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& M, double tol = 1e-9) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(M);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, double(s(0)));
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > cut;
  return r;
}

/// Orthonormal basis of the column space.
template <typename Derived>
typename Derived::PlainObject range_basis(const Eigen::MatrixBase<Derived>& M, double tol = 1e-9) {
  using Mat = typename Derived::PlainObject;
  if (M.cols() == 0) return Mat(M.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() ? double(s(0)) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > cut;
  return svd.matrixU().leftCols(r);
}

/// Orthonormal basis of {x : M x = 0}.
template <typename Derived>
typename Derived::PlainObject null_space(const Eigen::MatrixBase<Derived>& M, double tol = 1e-9) {
  using Mat = typename Derived::PlainObject;
  const Eigen::Index n = M.cols();
  if (M.rows() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() ? double(s(0)) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > cut;
  return svd.matrixV().rightCols(n - r);
}

/// Orthonormal basis of span(A) ∩ span(B).
template <typename Mat>
Mat intersect(const Mat& A, const Mat& B, double tol = 1e-9) {
  const Mat Qa = range_basis(A, tol), Qb = range_basis(B, tol);
  Mat stacked(Qa.rows(), Qa.cols() + Qb.cols());
  stacked << Qa, -Qb;
  const Mat N = null_space(stacked, tol);
  return range_basis(Mat(Qa * N.topRows(Qa.cols())), tol);
}

/// Largest sine of the principal angles from span(A) into span(B).
template <typename Mat>
double subspace_gap(const Mat& A, const Mat& B, double tol = 1e-9) {
  const Mat Qa = range_basis(A, tol), Qb = range_basis(B, tol);
  if (Qa.cols() == 0) return 0.0;
  const Mat R = Qa - Qb * (Qb.adjoint() * Qa);
  return R.cols() ? Eigen::JacobiSVD<Mat>(R).singularValues()(0) : 0.0;
}

/// Subspace gap in both directions, plus a dimension check.
template <typename Mat>
double subspace_distance(const Mat& A, const Mat& B, double tol = 1e-9) {
  if (rank(A, tol) != rank(B, tol)) return 1.0;
  return std::max(subspace_gap(A, B, tol), subspace_gap(B, A, tol));
}

/// (positive, negative) eigenvalue counts of a symmetric matrix.
inline std::pair<int, int> signature(const Eigen::MatrixXd& S, double tol = 1e-9) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double cut = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int p = 0, n = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    p += ev(i) > cut;
    n += ev(i) < -cut;
  }
  return {p, n};
}

/// Basis of span(V) orthonormal for the Hermitian form x ↦ x* W x.
template <typename Mat, typename WMat>
Mat orthonormalize(const Mat& V, const WMat& W) {
  const Mat G = V.adjoint() * W * V;
  Eigen::LLT<Mat> llt(0.5 * (G + G.adjoint()));
  return llt.matrixU().template solve<Eigen::OnTheRight>(V);
}

template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using S = decltype(typename A::Scalar() * typename B::Scalar());
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = S(a(i, j)) * b.template cast<S>();
  return out;
}

/// Spectral norm.
template <typename Derived>
double norm2(const Eigen::MatrixBase<Derived>& M) {
  if (M.size() == 0) return 0.0;
  return Eigen::JacobiSVD<typename Derived::PlainObject>(M).singularValues()(0);
}

}  // namespace genk::la
