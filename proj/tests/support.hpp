#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "genk/clifford.hpp"
#include "genk/gcs.hpp"
#include "genk/torus.hpp"

namespace genk::testing {

inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, int r, int c) {
  std::normal_distribution<double> n;
  Eigen::MatrixXd M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = n(rng);
  return M;
}

inline Eigen::MatrixXd random_spd(std::mt19937_64& rng, int m) {
  const Eigen::MatrixXd A = random_matrix(rng, m, m);
  return A * A.transpose() + 0.5 * Eigen::MatrixXd::Identity(m, m);
}

inline Form<double> random_form(std::mt19937_64& rng, int m) {
  return Form<double>(m, random_matrix(rng, 1 << m, 1).col(0));
}

inline Form<cd> random_complex_form(std::mt19937_64& rng, int m) {
  const Eigen::VectorXd re = random_matrix(rng, 1 << m, 1).col(0), im = random_matrix(rng, 1 << m, 1).col(0);
  VecX<cd> c(1 << m);
  for (int i = 0; i < (1 << m); ++i) c(i) = cd(re(i), im(i));
  return Form<cd>(m, c);
}

inline Form<double> random_two_form(std::mt19937_64& rng, int m, double scale = 1.0) {
  return scale * random_form(rng, m).part(2);
}

/// e^B ∘ diag(A, A^{-T}) with A = orthogonal × diag(e^{s_i}), |s_i| ≤ ½; preserves the natural pairing.
inline Eigen::MatrixXd random_pairing_map(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> s(-0.5, 0.5);
  const Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(random_matrix(rng, m, m)).householderQ();
  Eigen::VectorXd scale(m);
  for (int i = 0; i < m; ++i) scale(i) = std::exp(s(rng));
  const Eigen::MatrixXd A = Q * scale.asDiagonal();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  T.topLeftCorner(m, m) = A;
  T.bottomRightCorner(m, m) = A.inverse().transpose();
  return b_transform_matrix(random_two_form(rng, m, 0.5)) * T;
}

inline GKFiber random_gk_fiber(std::mt19937_64& rng) {
  return conjugate(flat_kahler_fiber(), random_pairing_map(rng, 4));
}

inline TorusScenario u1_scenario(const Form<double>& H, int radius = 2) {
  TorusScenario S;
  S.H = H;
  S.radius = radius;
  return S;
}

/// su(2) connection with A_1 = a σ₃ and A_3 = b σ₃.
inline TorusScenario su2_commuting(double a = 0.3, double b = -0.7, int radius = 2) {
  TorusScenario S;
  S.algebra = LieAlgebraData::su2();
  S.A = LaForm<double>(4, S.algebra);
  S.A.coeffs()(index_mask(1), 2) = a;
  S.A.coeffs()(index_mask(3), 2) = b;
  S.radius = radius;
  return S;
}

/// A = σ₁dx¹ + σ₂dx².
inline TorusScenario su2_nonflat(int radius = 1) {
  TorusScenario S;
  S.algebra = LieAlgebraData::su2();
  S.A = LaForm<double>(4, S.algebra);
  S.A.coeffs()(index_mask(1), 0) = 1.0;
  S.A.coeffs()(index_mask(2), 1) = 1.0;
  S.radius = radius;
  return S;
}

inline Form<double> dx123() { return Form<double>::basis(4, index_mask(1) | index_mask(2) | index_mask(3)); }

}  // namespace genk::testing
