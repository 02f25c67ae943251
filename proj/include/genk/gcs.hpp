#pragma once

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "genk/check.hpp"
#include "genk/clifford.hpp"

namespace genk {

/// Derived spin representation of A ∈ 𝔰𝔬(V⊕V*) on forms: [ρ(A), v·] = (Av)·.
Eigen::MatrixXd spin_matrix(const Eigen::MatrixXd& A);

/// A generalized complex structure at one point, with its spinor eigenprojectors.
class GCSFiber {
 public:
  explicit GCSFiber(const Eigen::MatrixXd& J, double tol = 1e-9);

  int dim() const { return m_; }
  int n() const { return m_ / 2; }
  const Eigen::MatrixXd& J() const { return J_; }
  /// Spinor matrix of 𝕁, eigenvalues ik for |k| ≤ n.
  const Eigen::MatrixXd& spinor() const { return spin_; }
  /// Projector onto U^k.
  const Eigen::MatrixXcd& projector(int k) const;
  /// 𝒥 = exp(π𝕁/2) on forms.
  const Eigen::MatrixXcd& jexp() const { return jexp_; }
  /// Projector onto L along L̄ in stacked coordinates.
  Eigen::MatrixXcd L_projector() const;
  Eigen::MatrixXcd L_basis() const;
  /// (m − rank π_T∘𝕁|_{T*}) / 2.
  int type() const { return type_; }
  /// Parity (0 even, 1 odd) of U^n.
  int parity() const { return parity_; }
  /// Generator of U^n.
  const Form<cd>& canonical_generator() const { return rho_; }

 private:
  int m_;
  Eigen::MatrixXd J_;
  Eigen::MatrixXd spin_;
  std::vector<Eigen::MatrixXcd> proj_;
  Eigen::MatrixXcd jexp_;
  int type_ = 0;
  int parity_ = 0;
  Form<cd> rho_;
};

/// 𝕁 = diag(−I, Iᵀ) for a complex structure I on the tangent space.
GCSFiber gcs_from_complex(const Eigen::MatrixXd& I);
/// 𝕁 = (0 −ω⁻¹; ω 0) with ω acting as X ↦ i_X ω.
GCSFiber gcs_from_symplectic(const Form<double>& omega);

Form<cd> uk_project(const GCSFiber& S, int k, const Form<cd>& a);
Form<cd> jexp_action(const GCSFiber& S, const Form<cd>& a);

/// (−1)^{deg ρ+1} i^{−n} (ρ, ρ̄)_Ch as the coefficient of dx^{1…m}.
double orientation_value(const GCSFiber& S);
int orientation_of(const GCSFiber& S);

/// Tests [L, L]_H ⊆ L on constant sections.
CheckOutcome integrability_check_const(const GCSFiber& S, const Form<double>& H, double tol = 1e-10);

enum class VSub { Plus10, Plus01, Minus10, Minus01 };
/// Shift of (p, q) under Clifford action by the subspace.
std::pair<int, int> clifford_shift(VSub which);

/// Commuting pair with positive −𝕁₁𝕁₂ and its U^{p,q} bigrading.
class GKFiber {
 public:
  const GCSFiber& J1() const { return J1_; }
  const GCSFiber& J2() const { return J2_; }
  const GenMetric& metric() const { return G_; }
  int dim() const { return J1_.dim(); }
  int orientation() const { return orientation_; }

  /// Lattice points |p| + |q| ≤ n, p + q ≡ n mod 2.
  const std::vector<std::pair<int, int>>& lattice() const { return lattice_; }
  bool in_lattice(int p, int q) const { return proj_.count({p, q}) > 0; }
  const Eigen::MatrixXcd& projector(int p, int q) const;
  /// Basis columns of V±^{1,0} or V±^{0,1} in stacked coordinates.
  Eigen::MatrixXcd subspace(VSub which) const;

 private:
  friend GKFiber gk_validate(const GCSFiber&, const GCSFiber&, double);
  GKFiber(GCSFiber J1, GCSFiber J2, GenMetric G);

  GCSFiber J1_, J2_;
  GenMetric G_;
  int orientation_;
  std::vector<std::pair<int, int>> lattice_;
  std::map<std::pair<int, int>, Eigen::MatrixXcd> proj_;
};

GKFiber gk_validate(const GCSFiber& J1, const GCSFiber& J2, double tol = 1e-9);

Form<cd> upq_project(const GKFiber& K, int p, int q, const Form<cd>& a);

/// ★ = −𝒥₁𝒥₂ as an operator identity and ★ = −i^{p+q} on every U^{p,q}.
CheckOutcome verify_star_identity(const GKFiber& K, double tol = 1e-10);

/// Complex structure e_{2j−1} ↦ e_{2j} on ℝ^m.
Eigen::MatrixXd standard_complex_structure(int m);

/// Kähler pair (𝕁_I, 𝕁_ω) with ω(X, Y) = g(X, IY), B-transformed.
GKFiber kahler_fiber(const Eigen::MatrixXd& g, const Eigen::MatrixXd& I, const Form<double>& B);
GKFiber flat_kahler_fiber(int m = 4);

/// T 𝕁ᵢ T⁻¹ for T preserving the pairing.
GKFiber conjugate(const GKFiber& K, const Eigen::MatrixXd& T);

}  // namespace genk
