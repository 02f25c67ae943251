#include <random>

#include <gtest/gtest.h>

#include "genk/clifford.hpp"
#include "genk/linalg.hpp"
#include "support.hpp"

using namespace genk;
using namespace genk::testing;

namespace {

Mask dx(std::initializer_list<int> idx) { return indices_mask(std::vector<int>(idx), 4); }

GenVector<double> random_genvector(std::mt19937_64& rng, int m) {
  return GenVector<double>::from_stacked(random_matrix(rng, 2 * m, 1).col(0));
}

int star_sign(int k) { return (k == 1 || k == 2) ? 1 : -1; }

}  // namespace

TEST(NaturalPairing, Examples) {
  const auto e1 = GenVector<double>::tangent(4, 1), e2 = GenVector<double>::tangent(4, 2);
  const auto f1 = GenVector<double>::cotangent(4, 1);
  EXPECT_EQ(natural_pairing(e1, f1), 0.5);
  EXPECT_EQ(natural_pairing(e1, e2), 0.0);
  EXPECT_EQ(natural_pairing(e1 + f1, e1 + f1), 1.0);
}

TEST(NaturalPairing, SplitSignature) {
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(la::signature(pairing_matrix(m)), std::make_pair(m, m));
}

TEST(CliffordAction, Examples) {
  const auto a = clifford_act(GenVector<double>::tangent(4, 1), Form<double>::basis(4, dx({1, 2})));
  EXPECT_EQ(a[dx({2})], 1.0);
  const auto b = clifford_act(GenVector<double>::cotangent(4, 3), Form<double>::basis(4, dx({1})));
  EXPECT_EQ(b[dx({1, 3})], -1.0);  // dx³∧dx¹
}

TEST(CliffordAction, CliffordRelation) {
  std::mt19937_64 rng(21);
  const auto v = GenVector<double>::tangent(4, 1) + GenVector<double>::cotangent(4, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto phi = random_form(rng, 4);
    EXPECT_LT((clifford_act(v, clifford_act(v, phi)) - phi).coeffs().norm(), 1e-12);
    const auto w = random_genvector(rng, 4);
    EXPECT_LT((clifford_act(w, clifford_act(w, phi)) - natural_pairing(w, w) * phi).coeffs().norm(), 1e-10);
  }
}

TEST(Chevalley, Examples) {
  EXPECT_EQ(chevalley(Form<double>::one(4), Form<double>::volume(4)), -1.0);
  EXPECT_EQ(chevalley(Form<double>::basis(4, dx({1})), Form<double>::basis(4, dx({2, 3, 4}))), 1.0);
  EXPECT_EQ(chevalley(Form<double>::basis(4, dx({1})), Form<double>::basis(4, dx({1}))), 0.0);
}

TEST(Chevalley, MatrixAgreesWithFormula) {
  for (int m = 2; m <= 5; ++m) {
    const Eigen::MatrixXd C = chevalley_matrix(m);
    for (Mask I = 0; I < Mask(1u << m); ++I)
      for (Mask J = 0; J < Mask(1u << m); ++J)
        EXPECT_EQ(C(I, J), chevalley(Form<double>::basis(m, I), Form<double>::basis(m, J)));
  }
}

TEST(Chevalley, SymmetryTable) {
  EXPECT_EQ(chevalley_symmetry(4), (Eigen::VectorXi(5) << 1, 1, 1, 1, 1).finished());
  EXPECT_EQ(chevalley_symmetry(3), (Eigen::VectorXi(4) << -1, -1, -1, -1).finished());
}

TEST(Chevalley, CliffordSkewAndBInvariance) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_form(rng, 4).part(trial % 5), b = random_form(rng, 4);
    const auto v = random_genvector(rng, 4);
    EXPECT_NEAR(chevalley(clifford_act(v, a), b) + chevalley(a, clifford_act(v, b)), 0.0, 1e-10);
    const auto B = random_two_form(rng, 4);
    const auto c = random_form(rng, 4);
    EXPECT_NEAR(chevalley(b_transform_spinor(B, b), b_transform_spinor(B, c)), chevalley(b, c), 1e-10);
  }
}

TEST(BTransform, Examples) {
  const auto B = Form<double>::basis(4, dx({1, 2}));
  const auto v = b_transform(B, GenVector<double>::tangent(4, 1));
  EXPECT_EQ(v.X, Eigen::VectorXd::Unit(4, 0));
  EXPECT_EQ(v.xi, -Eigen::VectorXd::Unit(4, 1));
  std::mt19937_64 rng(1);
  const auto w = random_genvector(rng, 4);
  const auto same = b_transform(Form<double>(4), w);
  EXPECT_EQ(same.stacked(), w.stacked());
  const auto e = b_transform_spinor(B, Form<double>::one(4));
  EXPECT_EQ(e[0], 1.0);
  EXPECT_EQ(e[dx({1, 2})], 1.0);
}

TEST(BTransform, PreservesPairingAndAnchor) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto B = random_two_form(rng, 4);
    const auto v = random_genvector(rng, 4), w = random_genvector(rng, 4);
    const auto bv = b_transform(B, v), bw = b_transform(B, w);
    EXPECT_NEAR(natural_pairing(bv, bw), natural_pairing(v, w), 1e-12);
    EXPECT_EQ(bv.X, v.X);
  }
}

TEST(BTransform, SpinorEquivariance) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto B = random_two_form(rng, 4);
    const auto v = random_genvector(rng, 4);
    const auto a = random_form(rng, 4);
    const auto lhs = clifford_act(b_transform(B, v), b_transform_spinor(B, a));
    const auto rhs = b_transform_spinor(B, clifford_act(v, a));
    EXPECT_LT((lhs - rhs).coeffs().norm(), 1e-10);
  }
}

TEST(BTransform, MatrixMatchesFunction) {
  std::mt19937_64 rng(25);
  const auto B = random_two_form(rng, 4);
  const auto v = random_genvector(rng, 4);
  EXPECT_LT((b_transform_matrix(B) * v.stacked() - b_transform(B, v).stacked()).norm(), 1e-12);
  EXPECT_LT((two_form(two_form_matrix(B)) - B).coeffs().norm(), 1e-14);
}

TEST(MetricSplit, BlockForm) {
  const auto s = metric_split(GenMetric::block(Eigen::MatrixXd::Identity(4, 4)));
  EXPECT_LT((s.g - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-14);
  EXPECT_LT(s.B.coeffs().norm(), 1e-14);
}

TEST(MetricSplit, RoundTrip) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXd g = random_spd(rng, 4);
    const auto B = random_two_form(rng, 4);
    const GenMetric G = GenMetric::from_split(g, B);
    const auto s = metric_split(G);
    EXPECT_LT((s.g - g).cwiseAbs().maxCoeff(), 1e-10 * g.norm());
    EXPECT_LT((s.B - B).coeffs().cwiseAbs().maxCoeff(), 1e-10 * (1 + B.coeffs().norm()));
    EXPECT_LT((GenMetric::from_split(s.g, s.B).matrix() - G.matrix()).cwiseAbs().maxCoeff(), 1e-10 * G.matrix().norm());
  }
}

TEST(MetricSplit, RejectsInvalidMetrics) {
  Eigen::MatrixXd G = GenMetric::block(Eigen::MatrixXd::Identity(4, 4)).matrix();
  EXPECT_THROW(GenMetric::from_matrix(-G), InvariantViolation);
  EXPECT_THROW(GenMetric::from_matrix(Eigen::MatrixXd::Identity(8, 8)), InvariantViolation);
  EXPECT_THROW(GenMetric::from_matrix(Eigen::MatrixXd::Identity(7, 7)), DimensionMismatch);
}

TEST(HodgeStar, EuclideanExamples) {
  const GenMetric G = GenMetric::block(Eigen::MatrixXd::Identity(4, 4));
  const auto s1 = hodge_star(G, 1, Form<cd>::one(4));
  EXPECT_LT((s1 + Form<cd>::volume(4)).coeffs().norm(), 1e-14);
  const auto s12 = hodge_star(G, 1, Form<cd>::basis(4, dx({1, 2})));
  EXPECT_LT((s12 - Form<cd>::basis(4, dx({3, 4}))).coeffs().norm(), 1e-14);
}

TEST(HodgeStar, SquaresToIdentity) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const GenMetric G = GenMetric::from_split(random_spd(rng, 4), random_two_form(rng, 4));
    for (int o : {1, -1}) {
      const Eigen::MatrixXd S = hodge_star_matrix(G, o);
      EXPECT_LT((S * S - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(HodgeStar, SquareSignInOtherDimensions) {
  std::mt19937_64 rng(28);
  for (int m = 1; m <= 6; ++m) {
    const GenMetric G = GenMetric::from_split(random_spd(rng, m), random_two_form(rng, m));
    const Eigen::MatrixXd S = hodge_star_matrix(G, 1);
    const double sign = ((m * (m - 1) / 2) & 1) ? -1.0 : 1.0;
    const Eigen::Index n = Eigen::Index(1) << m;
    EXPECT_LT((S * S - sign * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-9) << "m=" << m;
  }
}

TEST(HodgeStar, DegreeSignsAgainstClassicalStar) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd g = random_spd(rng, 4);
    for (int o : {1, -1}) {
      const Eigen::MatrixXd S = hodge_star_matrix(GenMetric::block(g), o);
      const Eigen::MatrixXd C = classical_hodge_star_matrix(g, o);
      for (int k = 0; k <= 4; ++k) {
        const Eigen::MatrixXd P = degree_selector(4, {k});
        EXPECT_LT((S * P - star_sign(k) * C * P).cwiseAbs().maxCoeff(), 1e-10) << "degree " << k;
      }
    }
  }
}

TEST(HodgeStar, BFieldConjugation) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd g = random_spd(rng, 4);
    const auto B = random_two_form(rng, 4);
    const Eigen::MatrixXd eB = wedge_matrix(exp_wedge(B)), emB = wedge_matrix(exp_wedge(Form<double>(-B)));
    const Eigen::MatrixXd lhs = hodge_star_matrix(GenMetric::from_split(g, B), 1);
    const Eigen::MatrixXd rhs = eB * hodge_star_matrix(GenMetric::block(g), 1) * emB;
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(HodgeStar, PositiveInnerProduct) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const GenMetric G = GenMetric::from_split(random_spd(rng, 4), random_two_form(rng, 4));
    const Eigen::MatrixXd S = hodge_star_matrix(G, 1);
    const Eigen::MatrixXd W = (chevalley_matrix(4) * S).transpose();
    EXPECT_LT((W - W.transpose()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(W).eigenvalues().minCoeff(), 0.0);
    const auto a = random_form(rng, 4);
    EXPECT_GT(chevalley(a, Form<double>(4, S * a.coeffs())), 0.0);
  }
}

TEST(SdAsd, Examples) {
  const GenMetric G = GenMetric::block(Eigen::MatrixXd::Identity(4, 4));
  const auto [p1, m1] = sd_asd_project(G, 1, Form<cd>::one(4));
  EXPECT_LT((p1 - cd(0.5) * (Form<cd>::one(4) - Form<cd>::volume(4))).coeffs().norm(), 1e-14);
  EXPECT_LT((m1 - cd(0.5) * (Form<cd>::one(4) + Form<cd>::volume(4))).coeffs().norm(), 1e-14);
  const auto [p12, m12] = sd_asd_project(G, 1, Form<cd>::basis(4, dx({1, 2})));
  EXPECT_LT((p12 - cd(0.5) * (Form<cd>::basis(4, dx({1, 2})) + Form<cd>::basis(4, dx({3, 4})))).coeffs().norm(), 1e-14);
  EXPECT_THROW(sd_asd_project(GenMetric::block(Eigen::MatrixXd::Identity(2, 2)), 1, Form<cd>::one(2)), InvalidInput);
}

TEST(SdAsd, Idempotent) {
  std::mt19937_64 rng(32);
  const GenMetric G = GenMetric::from_split(random_spd(rng, 4), random_two_form(rng, 4));
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_complex_form(rng, 4);
    const auto [p, m] = sd_asd_project(G, 1, a);
    EXPECT_LT((p + m - a).coeffs().norm(), 1e-12);
    EXPECT_LT((sd_asd_project(G, 1, p).first - p).coeffs().norm(), 1e-10);
    EXPECT_LT(sd_asd_project(G, 1, m).first.coeffs().norm(), 1e-10);
  }
}

TEST(CourantConst, Examples) {
  const auto e1 = GenVector<double>::tangent(4, 1), e2 = GenVector<double>::tangent(4, 2);
  const auto br = courant_bracket_const(e1, e2, Form<double>::basis(4, dx({1, 2, 3})));
  EXPECT_EQ(br.X.norm(), 0.0);
  EXPECT_EQ(br.xi, -Eigen::VectorXd::Unit(4, 2));
  EXPECT_EQ(courant_bracket_const(e1, e2, Form<double>(4)).stacked().norm(), 0.0);
  EXPECT_THROW(courant_bracket_const(e1, e2, Form<double>::basis(4, dx({1, 2}))), InvalidInput);
}

TEST(CourantConst, Antisymmetric) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto H = random_form(rng, 4).part(3);
    const auto v = random_genvector(rng, 4), w = random_genvector(rng, 4);
    EXPECT_LT((courant_bracket_const(v, w, H) + courant_bracket_const(w, v, H)).stacked().norm(), 1e-12);
  }
}
