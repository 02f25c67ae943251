#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace genk {

/// Structure constants [e_i, e_j] = Σ_k c^k_ij e_k and an invariant form κ.
class LieAlgebraData {
 public:
  LieAlgebraData(std::string name, std::vector<Eigen::MatrixXd> structure, Eigen::MatrixXd kappa);

  static std::shared_ptr<const LieAlgebraData> u1();
  /// Basis σ₁, σ₂, σ₃ with [σ_i, σ_j] = ε_ijk σ_k and κ = δ.
  static std::shared_ptr<const LieAlgebraData> su2();
  static std::shared_ptr<const LieAlgebraData> by_name(const std::string& name);

  const std::string& name() const { return name_; }
  int dim() const { return int(c_.size()); }
  const Eigen::MatrixXd& structure(int k) const { return c_[k]; }
  const Eigen::MatrixXd& kappa() const { return kappa_; }

  Eigen::VectorXd bracket(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  /// Matrix of ad_a = [a, ·].
  Eigen::MatrixXd ad(const Eigen::VectorXd& a) const;

  double antisymmetry_defect() const;
  double jacobi_defect() const;
  double invariance_defect() const;
  /// Throws InvariantViolation when any defect exceeds tol.
  void validate(double tol = 1e-12) const;

  bool operator==(const LieAlgebraData& o) const;

 private:
  std::string name_;
  std::vector<Eigen::MatrixXd> c_;
  Eigen::MatrixXd kappa_;
};

}  // namespace genk
