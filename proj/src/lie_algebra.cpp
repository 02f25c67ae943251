#include "genk/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "genk/errors.hpp"

namespace genk {

LieAlgebraData::LieAlgebraData(std::string name, std::vector<Eigen::MatrixXd> structure, Eigen::MatrixXd kappa)
    : name_(std::move(name)), c_(std::move(structure)), kappa_(std::move(kappa)) {
  const int d = int(c_.size());
  if (d == 0) throw InvalidInput("Lie algebra must have positive dimension");
  for (const auto& ck : c_)
    if (ck.rows() != d || ck.cols() != d) throw DimensionMismatch("structure constants must be d × d per k");
  if (kappa_.rows() != d || kappa_.cols() != d) throw DimensionMismatch("κ must be d × d");
}

std::shared_ptr<const LieAlgebraData> LieAlgebraData::u1() {
  static const auto g = std::make_shared<const LieAlgebraData>(
      "u1", std::vector<Eigen::MatrixXd>{Eigen::MatrixXd::Zero(1, 1)}, Eigen::MatrixXd::Identity(1, 1));
  return g;
}

std::shared_ptr<const LieAlgebraData> LieAlgebraData::su2() {
  static const auto g = [] {
    std::vector<Eigen::MatrixXd> c(3, Eigen::MatrixXd::Zero(3, 3));
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      c[k](i, j) = 1.0;
      c[k](j, i) = -1.0;
    }
    return std::make_shared<const LieAlgebraData>("su2", c, Eigen::MatrixXd::Identity(3, 3));
  }();
  return g;
}

std::shared_ptr<const LieAlgebraData> LieAlgebraData::by_name(const std::string& name) {
  if (name == "u1") return u1();
  if (name == "su2") return su2();
  throw InvalidInput("unknown Lie algebra '" + name + "'");
}

Eigen::VectorXd LieAlgebraData::bracket(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  Eigen::VectorXd out(dim());
  for (int k = 0; k < dim(); ++k) out(k) = a.dot(c_[k] * b);
  return out;
}

Eigen::MatrixXd LieAlgebraData::ad(const Eigen::VectorXd& a) const {
  Eigen::MatrixXd M(dim(), dim());
  for (int k = 0; k < dim(); ++k) M.row(k) = a.transpose() * c_[k];
  return M;
}

double LieAlgebraData::antisymmetry_defect() const {
  double d = 0;
  for (const auto& ck : c_) d = std::max(d, (ck + ck.transpose()).cwiseAbs().maxCoeff());
  return d;
}

double LieAlgebraData::jacobi_defect() const {
  const int d = dim();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
  double defect = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Eigen::VectorXd a = I.col(i), b = I.col(j), c = I.col(k);
        const Eigen::VectorXd s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        defect = std::max(defect, s.cwiseAbs().maxCoeff());
      }
  return defect;
}

double LieAlgebraData::invariance_defect() const {
  const int d = dim();
  double defect = (kappa_ - kappa_.transpose()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd A = ad(I.col(i));
    defect = std::max(defect, (A.transpose() * kappa_ + kappa_ * A).cwiseAbs().maxCoeff());
  }
  return defect;
}

void LieAlgebraData::validate(double tol) const {
  if (antisymmetry_defect() > tol) throw InvariantViolation("structure constants are not antisymmetric");
  if (jacobi_defect() > tol) throw InvariantViolation("structure constants violate the Jacobi identity");
  if (invariance_defect() > tol) throw InvariantViolation("κ is not symmetric and ad-invariant");
}

bool LieAlgebraData::operator==(const LieAlgebraData& o) const {
  if (dim() != o.dim() || kappa_ != o.kappa_) return false;
  for (int k = 0; k < dim(); ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

}  // namespace genk
