#include <gtest/gtest.h>

#include <Eigen/Geometry>

#include "genk/errors.hpp"
#include "genk/lie_algebra.hpp"

using namespace genk;

TEST(LieAlgebra, Su2StructureIsLeviCivita) {
  const auto g = LieAlgebraData::su2();
  ASSERT_EQ(g->dim(), 3);
  EXPECT_EQ(g->structure(2)(0, 1), 1.0);
  EXPECT_EQ(g->structure(2)(1, 0), -1.0);
  EXPECT_EQ(g->structure(0)(1, 2), 1.0);
  EXPECT_EQ(g->structure(1)(2, 0), 1.0);
  EXPECT_EQ(g->kappa(), Eigen::MatrixXd::Identity(3, 3));
}

TEST(LieAlgebra, ShippedAlgebrasValidate) {
  for (const auto& g : {LieAlgebraData::u1(), LieAlgebraData::su2()}) {
    EXPECT_NO_THROW(g->validate());
    EXPECT_EQ(g->antisymmetry_defect(), 0.0);
    EXPECT_LT(g->jacobi_defect(), 1e-15);
    EXPECT_LT(g->invariance_defect(), 1e-15);
  }
}

TEST(LieAlgebra, BracketAndAd) {
  const auto g = LieAlgebraData::su2();
  const Eigen::Vector3d a(1, 2, 3), b(-1, 0.5, 2);
  EXPECT_LT((g->bracket(a, b) - a.cross(b)).norm(), 1e-14);
  EXPECT_LT((g->ad(a) * b - a.cross(b)).norm(), 1e-14);
}

TEST(LieAlgebra, PerturbedStructureRejected) {
  const auto g = LieAlgebraData::su2();
  std::vector<Eigen::MatrixXd> c{g->structure(0), g->structure(1), g->structure(2)};
  c[2](0, 1) += 1e-6;
  const LieAlgebraData bad("bad", c, g->kappa());
  EXPECT_THROW(bad.validate(), InvariantViolation);

  std::vector<Eigen::MatrixXd> c2{g->structure(0), g->structure(1), g->structure(2)};
  c2[2](0, 1) += 1e-6;
  c2[2](1, 0) -= 1e-6;
  const LieAlgebraData bad2("bad2", c2, g->kappa());
  EXPECT_THROW(bad2.validate(), InvariantViolation);

  Eigen::MatrixXd kappa = g->kappa();
  kappa(0, 0) += 1e-6;
  const LieAlgebraData bad3("bad3", {g->structure(0), g->structure(1), g->structure(2)}, kappa);
  EXPECT_THROW(bad3.validate(), InvariantViolation);
}

TEST(LieAlgebra, ByName) {
  EXPECT_EQ(LieAlgebraData::by_name("su2")->dim(), 3);
  EXPECT_EQ(LieAlgebraData::by_name("u1")->dim(), 1);
  EXPECT_THROW(LieAlgebraData::by_name("e8"), InvalidInput);
}
