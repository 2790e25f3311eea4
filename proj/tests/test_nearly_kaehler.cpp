#include <gtest/gtest.h>

#include <twistor/error.hpp>
#include <twistor/nearly_kaehler.hpp>
#include <twistor/random.hpp>

#include "oracles.hpp"

using namespace twistor;

namespace {

AlgebraVector random_vector(Rng& rng) {
  std::normal_distribution<double> n;
  return AlgebraVector(n(rng), n(rng), n(rng), n(rng), n(rng), n(rng));
}

ACS random_ank(Rng& rng) { return ank_form(ANKForm::from_rotation(random_rotation<3>(rng))); }

ErrorKind ank_form_rejection(const ANKForm& f) {
  try {
    ank_form(f);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted";
  return ErrorKind::NoConvergence;
}

}  // namespace

TEST(NablaOmega, MatchesKoszulOracle) {
  Rng rng = make_rng(1);
  for (int k = 0; k < 20; ++k) {
    const ACS j = random_acs(k);
    const AlgebraVector x = random_vector(rng), y = random_vector(rng), z = random_vector(rng);
    EXPECT_NEAR(nabla_omega(j, x, y, z), oracle::nabla_omega(j.matrix(), x.coeffs, y.coeffs, z.coeffs), 1e-12);
  }
}

TEST(NablaOmega, SkewInLastTwoArguments) {
  Rng rng = make_rng(2);
  const ACS j = random_acs(3);
  const AlgebraVector x = random_vector(rng), y = random_vector(rng), z = random_vector(rng);
  EXPECT_NEAR(nabla_omega(j, x, y, z), -nabla_omega(j, x, z, y), 1e-12);
}

TEST(NablaOmega, FactorSwapMixedDirection) {
  const ACS n = ank_structure();
  const AlgebraVector v = AlgebraVector::basis(2) + AlgebraVector::basis(4);
  EXPECT_NEAR(nabla_omega(n, v, v, AlgebraVector::basis(1)), 0.0, 1e-15);
  EXPECT_NEAR(nabla_omega(n, v, v, AlgebraVector::basis(3)), -0.5, 1e-15);
  EXPECT_NEAR(nabla_omega(n, v, v, AlgebraVector::basis(6)), -0.5, 1e-15);
  EXPECT_NEAR(oracle::nabla_omega(n.matrix(), v.coeffs, v.coeffs, Vec6::Unit(2)), -0.5, 1e-15);
}

TEST(NearlyKaehler, BasisDiagonalVanishesOnFactorSwaps) {
  Rng rng = make_rng(4);
  for (int k = 0; k < 50; ++k) EXPECT_LT(nk_basis_diagonal_residual(random_ank(rng)), 1e-12);
}

TEST(NearlyKaehler, DefectOfFactorSwapIsSqrt6) {
  EXPECT_NEAR(nk_defect(ank_structure()), std::sqrt(6.0), 1e-12);
}

TEST(NearlyKaehler, DefectAboveFloorOnFactorSwaps) {
  Rng rng = make_rng(5);
  const double floor = 0.5 * nk_defect(ank_structure());
  for (int k = 0; k < 50; ++k) EXPECT_GT(nk_defect(random_ank(rng)), floor);
}

TEST(NearlyKaehler, DefectFromOracleTable) {
  const ACS j = random_acs(6);
  double sum = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        const Vec6 x = Vec6::Unit(a), y = Vec6::Unit(b), z = Vec6::Unit(c);
        const double s = oracle::nabla_omega(j.matrix(), x, y, z) + oracle::nabla_omega(j.matrix(), y, x, z);
        sum += s * s;
      }
  EXPECT_NEAR(nk_defect(j), std::sqrt(sum), 1e-12);
}

TEST(IsAnk, Classification) {
  EXPECT_TRUE(is_ank(ank_structure()));
  EXPECT_FALSE(is_ank(hopf_structure()));
  EXPECT_FALSE(is_ank(vertex_structure(0)));
}

TEST(AnkForm, IdentityTripleGivesFactorSwap) {
  EXPECT_EQ(ank_form(ANKForm::from_rotation(Mat3::Identity())), ank_structure());
}

TEST(AnkForm, RotationsGiveMaximalNorm) {
  Rng rng = make_rng(7);
  for (int k = 0; k < 20; ++k) {
    const ACS j = random_ank(rng);
    EXPECT_TRUE(is_ank(j));
    const TwoForm w = fundamental_form(j);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        EXPECT_LT(std::abs(w(a, b)), 1e-15);
        EXPECT_LT(std::abs(w(a + 3, b + 3)), 1e-15);
      }
  }
}

TEST(AnkForm, Rejections) {
  EXPECT_EQ(ank_form_rejection(ANKForm::from_rotation(-Mat3::Identity())), ErrorKind::WrongOrientation);
  EXPECT_EQ(ank_form_rejection(ANKForm::from_rotation(2.0 * Mat3::Identity())), ErrorKind::NotOrthonormal);
  ANKForm outside = ANKForm::from_rotation(Mat3::Identity());
  outside.f[0] = Covector::basis(4);
  EXPECT_EQ(ank_form_rejection(outside), ErrorKind::NotOrthonormal);
}
