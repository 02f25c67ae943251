#pragma once

#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "genk/clifford.hpp"
#include "genk/gcs.hpp"

namespace genk {

/// Isotropic K ⊂ V⊕V* given by generator columns in stacked coordinates.
struct ReductionProblem {
  int m = 4;
  Eigen::MatrixXd K;
  /// Leading columns of K coming from the lifted action; the remaining columns are moment covectors.
  int n_action = 0;
  std::optional<GenMetric> metric;
};

/// Throws when K is not isotropic, not independent, or moment columns have tangent parts.
void validate_problem(const ReductionProblem& P, double tol = 1e-10);

Eigen::MatrixXd k_perp(const ReductionProblem& P);

/// Quotient K^⊥/K in coordinates b = Qᵀv, Q an orthonormal complement of K inside K^⊥.
struct ReducedFiber {
  Eigen::MatrixXd basis;
  Eigen::MatrixXd pairing;
  std::optional<Eigen::MatrixXd> metric_gram;
  std::optional<Eigen::MatrixXd> G;
  std::optional<Eigen::MatrixXd> J1;
  std::optional<Eigen::MatrixXd> J2;

  int dim() const { return int(basis.cols()); }
};

ReducedFiber quotient_fiber(const ReductionProblem& P);

/// K^𝔾 = K^⊥ ∩ 𝔾(K^⊥).
Eigen::MatrixXd kg_space(const ReductionProblem& P);

/// σ_min / σ_max of K^𝔾 → K^⊥/K in orthonormal bases.
double kg_conditioning(const ReductionProblem& P);

struct MetricReduction {
  ReducedFiber fiber;
  /// Orthonormal basis of τ₊ = {Y ∈ TP : ⟨𝔾X_γ + ξ_γ, Y⟩ = 0}.
  Eigen::MatrixXd tau_plus;
  /// g restricted to τ₊.
  Eigen::MatrixXd tau_metric;
  /// Metric on τ₊ read off from the reduced V₊ through the anchor.
  Eigen::MatrixXd induced_metric;
};

MetricReduction reduced_metric(const ReductionProblem& P);

namespace detail {
inline bool negligible(double x) { return std::abs(x) < 1e-10; }
template <typename S>
bool negligible(const S& x) {
  return x == S(0);
}
}  // namespace detail

/// B_θ = Σ_a θ^a∧ξ_a + ½ Σ_{a,b} ξ_b(X_a) θ^a∧θ^b; columns of θ, X, ξ are per generator.
template <typename S>
Form<S> b_theta(const MatX<S>& theta, const MatX<S>& X, const MatX<S>& xi) {
  const Eigen::Index m = X.rows(), r = X.cols();
  if (theta.rows() != m || xi.rows() != m || theta.cols() != r || xi.cols() != r)
    throw DimensionMismatch("θ, X and ξ must all be m × r");
  const MatX<S> conn = theta.transpose() * X;
  const MatX<S> xiX = xi.transpose() * X;
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < r; ++b) {
      if (!detail::negligible(S(conn(a, b) - S(a == b ? 1 : 0))))
        throw InvariantViolation("connection axiom θ(X_γ) = γ violated");
      if (!detail::negligible(S(xiX(a, b) + xiX(b, a)))) throw InvariantViolation("lifted action is not isotropic");
    }
  Form<S> B(static_cast<int>(m));
  for (Eigen::Index a = 0; a < r; ++a) {
    const Form<S> th = Form<S>::covector(theta.col(a));
    B += wedge(th, Form<S>::covector(xi.col(a)));
    for (Eigen::Index b = 0; b < r; ++b)
      B += (xiX(b, a) / S(2)) * wedge(th, Form<S>::covector(theta.col(b)));
  }
  return B;
}

struct GKReduction {
  bool accepted = false;
  /// Largest principal-angle sine between 𝕁₁K^𝔾 and K^𝔾.
  double residual = 0.0;
  ReducedFiber fiber;
  /// Max defect of commutation, squares, and positivity of the reduced pair.
  double axiom_residual = 0.0;
};

GKReduction gk_reduce_fiber(const ReductionProblem& P, const GKFiber& K, double threshold = 1e-8);

}  // namespace genk
