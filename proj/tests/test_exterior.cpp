#include <random>

#include <gtest/gtest.h>

#include "genk/exterior.hpp"
#include "genk/rational.hpp"
#include "support.hpp"

using namespace genk;
using genk::testing::random_form;

namespace {

Mask dx(std::initializer_list<int> idx) { return indices_mask(std::vector<int>(idx), 4); }

Form<double> homogeneous(std::mt19937_64& rng, int m, int k) { return random_form(rng, m).part(k); }

}  // namespace

TEST(Wedge, BasisExamples) {
  const auto e1 = Form<double>::basis(4, dx({1})), e2 = Form<double>::basis(4, dx({2}));
  EXPECT_EQ(wedge(e1, e2)[dx({1, 2})], 1.0);
  EXPECT_EQ(wedge(e1, e1).coeffs().norm(), 0.0);
  EXPECT_EQ(wedge(e2, e1)[dx({1, 2})], -1.0);
}

TEST(Wedge, SignByTranspositionCount) {
  EXPECT_EQ(wedge_sign(dx({3}), dx({1, 2})), 1);
  EXPECT_EQ(wedge_sign(dx({2, 4}), dx({1, 3})), -1);
  EXPECT_EQ(wedge_sign(dx({1}), dx({1, 2})), 0);
}

TEST(Wedge, GradedCommutativeAndAssociative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 5, q = (trial / 5) % 5;
    const auto a = homogeneous(rng, 4, p), b = homogeneous(rng, 4, q), c = random_form(rng, 4);
    const double sign = ((p * q) & 1) ? -1.0 : 1.0;
    EXPECT_LT((wedge(a, b) - sign * wedge(b, a)).coeffs().norm(), 1e-12);
    EXPECT_LT((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).coeffs().norm(), 1e-10);
  }
}

TEST(Wedge, DimensionMismatchThrows) {
  EXPECT_THROW(wedge(Form<double>(3), Form<double>(4)), DimensionMismatch);
  EXPECT_THROW(Form<double>(7), InvalidInput);
}

TEST(Contract, Examples) {
  const auto f12 = Form<double>::basis(4, dx({1, 2}));
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(4, 0), e2 = Eigen::VectorXd::Unit(4, 1), e3 = Eigen::VectorXd::Unit(4, 2);
  EXPECT_EQ(contract(e1, f12)[dx({2})], 1.0);
  EXPECT_EQ(contract(e2, f12)[dx({1})], -1.0);
  EXPECT_EQ(contract(e3, Form<double>::basis(4, dx({1}))).coeffs().norm(), 0.0);
}

TEST(Contract, AntiDerivationAndNilpotent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 5;
    const auto a = homogeneous(rng, 4, p), b = random_form(rng, 4);
    const Eigen::VectorXd X = genk::testing::random_matrix(rng, 4, 1).col(0);
    const double sign = (p & 1) ? -1.0 : 1.0;
    const auto lhs = contract(X, wedge(a, b));
    const auto rhs = wedge(contract(X, a), b) + sign * wedge(a, contract(X, b));
    EXPECT_LT((lhs - rhs).coeffs().norm(), 1e-10);
    EXPECT_LT(contract(X, contract(X, b)).coeffs().norm(), 1e-12);
  }
}

TEST(Contract, MatrixAgreesWithFunction) {
  std::mt19937_64 rng(13);
  const Eigen::VectorXd X = genk::testing::random_matrix(rng, 4, 1).col(0);
  const auto a = random_form(rng, 4);
  EXPECT_LT((contract_matrix(X) * a.coeffs() - contract(X, a).coeffs()).norm(), 1e-12);
  const auto b = random_form(rng, 4);
  EXPECT_LT((wedge_matrix(b) * a.coeffs() - wedge(b, a).coeffs()).norm(), 1e-12);
}

TEST(CliffordTranspose, DegreeSigns) {
  EXPECT_EQ(transpose_sign(0), 1);
  EXPECT_EQ(transpose_sign(1), 1);
  EXPECT_EQ(transpose_sign(2), -1);
  EXPECT_EQ(transpose_sign(3), -1);
  EXPECT_EQ(transpose_sign(4), 1);
  EXPECT_EQ(clifford_transpose(Form<double>::basis(4, dx({1, 2})))[dx({1, 2})], -1.0);
  EXPECT_EQ(clifford_transpose(Form<double>::volume(4))[top_mask(4)], 1.0);
}

TEST(CliffordTranspose, MatchesReversalOfGenerators) {
  // Reversing dx^{i1}∧…∧dx^{ik} one wedge at a time.
  for (Mask I = 0; I < 16; ++I) {
    Form<double> rev = Form<double>::one(4);
    const auto idx = mask_indices(I);
    for (int i : idx) rev = wedge(Form<double>::basis(4, index_mask(i)), rev);
    EXPECT_EQ(rev[I], clifford_transpose(Form<double>::basis(4, I))[I]) << mask_label(I);
  }
}

TEST(CliffordTranspose, Involution) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_form(rng, 4);
    EXPECT_EQ((clifford_transpose(clifford_transpose(a)) - a).coeffs().norm(), 0.0);
  }
}

TEST(Masks, LabelsRoundTrip) {
  EXPECT_EQ(mask_label(0), "1");
  EXPECT_EQ(mask_label(dx({1, 2, 4})), "dx124");
  EXPECT_EQ(mask_indices(dx({2, 3})), (std::vector<int>{2, 3}));
}

TEST(ExpWedge, TerminatingSeries) {
  const auto B = Form<double>::basis(4, dx({1, 2})) + Form<double>::basis(4, dx({3, 4}));
  const auto e = exp_wedge(B);
  EXPECT_EQ(e[0], 1.0);
  EXPECT_EQ(e[dx({1, 2})], 1.0);
  EXPECT_EQ(e[top_mask(4)], 1.0);
}

TEST(Rational, ExactWedgeSigns) {
  using Q = Rational;
  const auto a = Form<Q>::basis(4, dx({1, 3}), Q(1, 3));
  const auto b = Form<Q>::basis(4, dx({2, 4}), Q(3, 7));
  EXPECT_EQ(wedge(a, b)[top_mask(4)], Q(-1, 7));
  EXPECT_EQ(wedge(b, a)[top_mask(4)], Q(-1, 7));
}

TEST(LaForm, KappaPairAbelianIsWedge) {
  std::mt19937_64 rng(15);
  const auto u1 = LieAlgebraData::u1();
  const auto a = random_form(rng, 4), b = random_form(rng, 4);
  LaForm<double> A(4, u1, a.coeffs()), B(4, u1, b.coeffs());
  EXPECT_LT((kappa_pair(A, B) - wedge(a, b)).coeffs().norm(), 1e-12);
}

TEST(LaForm, KappaPairMatchesComponentExpansion) {
  std::mt19937_64 rng(16);
  const auto g = LieAlgebraData::su2();
  LaForm<double> A(4, g, genk::testing::random_matrix(rng, 16, 3));
  LaForm<double> B(4, g, genk::testing::random_matrix(rng, 16, 3));
  // Oracle: brute-force sum over basis pairs.
  Eigen::VectorXd oracle = Eigen::VectorXd::Zero(16);
  for (int i = 0; i < 3; ++i)
    for (Mask I = 0; I < 16; ++I)
      for (Mask J = 0; J < 16; ++J) {
        const int s = wedge_sign(I, J);
        if (s) oracle(I | J) += s * A.coeffs()(I, i) * B.coeffs()(J, i);
      }
  EXPECT_LT((kappa_pair(A, B).coeffs() - oracle).norm(), 1e-10);
  const auto single = kappa_pair(LaForm<double>(4, g, Eigen::MatrixXd(Eigen::VectorXd::Unit(16 * 3, dx({1})).reshaped(16, 3))),
                                 LaForm<double>(4, g, Eigen::MatrixXd(Eigen::VectorXd::Unit(16 * 3, dx({2})).reshaped(16, 3))));
  EXPECT_EQ(single[dx({1, 2})], g->kappa()(0, 0));
}

TEST(LaForm, KappaPairSwapRule) {
  std::mt19937_64 rng(17);
  const auto g = LieAlgebraData::su2();
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) {
      LaForm<double> A(4, g, genk::testing::random_matrix(rng, 16, 3));
      LaForm<double> B(4, g, genk::testing::random_matrix(rng, 16, 3));
      A = A.part(p);
      B = B.part(q);
      const double sign = ((p * q) & 1) ? -1.0 : 1.0;
      EXPECT_LT((kappa_pair(A, B) - sign * kappa_pair(B, A)).coeffs().norm(), 1e-10);
    }
}

TEST(LaForm, BracketWedgeOfConnection) {
  const auto g = LieAlgebraData::su2();
  LaForm<double> A(4, g);
  A.coeffs()(dx({1}), 0) = 1.0;
  A.coeffs()(dx({2}), 1) = 1.0;
  const auto F = bracket_wedge(A, A);
  // [σ₁dx¹ + σ₂dx², same] = 2[σ₁,σ₂]dx¹² = 2σ₃dx¹².
  EXPECT_NEAR(F.coeffs()(dx({1, 2}), 2), 2.0, 1e-14);
  EXPECT_NEAR(F.coeffs().cwiseAbs().sum(), 2.0, 1e-14);
}

TEST(LaForm, AlgebraMismatchThrows) {
  EXPECT_THROW(kappa_pair(LaForm<double>(4, LieAlgebraData::u1()), LaForm<double>(4, LieAlgebraData::su2())), InvalidInput);
}
