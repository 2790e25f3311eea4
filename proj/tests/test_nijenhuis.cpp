#include <gtest/gtest.h>

#include <twistor/error.hpp>
#include <twistor/nijenhuis.hpp>
#include <twistor/random.hpp>

#include "oracles.hpp"

using namespace twistor;

TEST(Nijenhuis, BasisPairsMatchOracle) {
  for (int k = 0; k < 20; ++k) {
    const ACS j = random_acs(k);
    const NijenhuisComponents n = nijenhuis(j);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        EXPECT_LT((n.pair(a, b) - oracle::nijenhuis(j.matrix(), Vec6::Unit(a), Vec6::Unit(b))).norm(), 1e-13);
  }
}

TEST(Nijenhuis, SkewInArguments) {
  const NijenhuisComponents n = nijenhuis(random_acs(1));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_LT((n.pair(a, b) + n.pair(b, a)).norm(), 1e-14);
}

TEST(Nijenhuis, FactorSwapValueOnE1E2) {
  // hand expansion with J e_i = -e_{i+3}: N(e1, e2) = -e3 + e6
  const Vec6 n12 = nijenhuis(ank_structure()).pair(0, 1);
  Vec6 expected;
  expected << 0, 0, -1, 0, 0, 1;
  EXPECT_LT((n12 - expected).norm(), 1e-15);
}

TEST(Nijenhuis, KappaIs48) {
  EXPECT_NEAR(oracle::nijenhuis_sq(ank_structure().matrix()), 48.0, 1e-12);
  EXPECT_NEAR(calibrated_kappa(), 48.0, 1e-12);
  EXPECT_NEAR(calibrated_max_norm(), 4.0 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(reference_max_norm(), 8.0 * std::sqrt(3.0), 1e-15);
}

TEST(Nijenhuis, NormMatchesSquared) {
  const ACS j = random_acs(2);
  EXPECT_NEAR(nijenhuis_norm(j) * nijenhuis_norm(j), nijenhuis_norm_squared(j), 1e-12);
  EXPECT_NEAR(nijenhuis(j).squared_norm(), nijenhuis_norm_squared(j), 1e-12);
}

TEST(Nijenhuis, InvariantUnderBlockConjugation) {
  // automorphisms of su(2)+su(2) preserving each factor commute with N
  Rng rng = make_rng(3);
  for (int k = 0; k < 20; ++k) {
    const ACS j = random_acs(k);
    const Mat6 q = block_rotation(random_rotation<3>(rng), random_rotation<3>(rng));
    EXPECT_NEAR(nijenhuis_norm(conjugate(j, q)), nijenhuis_norm(j), 1e-12);
  }
}

TEST(ProportionalityLaw, Holds) {
  const double kappa = calibrated_kappa();
  for (int k = 0; k < 1000; ++k) {
    const ACS j = random_acs(k);
    const double c2 = blocks(j).c_vec().squaredNorm();
    EXPECT_NEAR(nijenhuis_norm_squared(j) / kappa, 1.0 - c2, 1e-9);
    EXPECT_NEAR(closed_form_norm(blocks(j)), nijenhuis_norm(j), 1e-9);
  }
}

TEST(ClosedForm, DomainError) {
  Blocks b;
  b.c(0, 1) = 2.0;
  b.c(1, 0) = -2.0;
  try {
    closed_form_norm(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(Cofactor, MatrixOfComplements) {
  Mat3 m;
  m << 2, -1, 0, 1, 3, 4, 0, 5, -2;
  // adj(M) = cofactor^T and M adj(M) = det(M) 1
  EXPECT_LT((m * cofactor_matrix(m).transpose() - m.determinant() * Mat3::Identity()).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(Cofactor, ChainHoldsOnZ) {
  int with_trace = 0;
  for (int k = 0; k < 1000; ++k) {
    const CofactorResiduals r = cofactor_checks(blocks(random_acs(k)));
    EXPECT_LT(r.gram, 1e-9);
    EXPECT_LT(r.eigen_identity, 1e-9);
    if (r.trace_identity) {
      ++with_trace;
      EXPECT_LT(*r.trace_identity, 1e-9);
    }
  }
  EXPECT_GT(with_trace, 900);
}

TEST(Cofactor, NormFromSpectrumOfC) {
  // 1 + C^2 has eigenvalues 1, 1 - |c|^2, 1 - |c|^2, so the pairwise
  // eigenvalue sum is (1 - |c|^2)(3 - |c|^2)
  for (int k = 0; k < 100; ++k) {
    const Blocks b = blocks(random_acs(k));
    const double c2 = b.c_vec().squaredNorm();
    EXPECT_NEAR(cofactor_checks(b).cofactor_norm_sq, (1 - c2) * (3 - c2), 1e-9);
  }
}

TEST(Integrable, FixturesAndSets) {
  EXPECT_TRUE(is_integrable(hopf_structure()));
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(is_integrable(vertex_structure(k)));
  EXPECT_FALSE(is_integrable(ank_structure()));
}

TEST(Statement1, ConjugatesOfHopfAreIntegrableWithUnitC) {
  Rng rng = make_rng(5);
  for (int k = 0; k < 200; ++k) {
    const Mat3 o1 = random_rotation<3>(rng), o2 = random_rotation<3>(rng);
    const ACS j = statement1_structure(o1, o2);
    EXPECT_LT(nijenhuis_norm(j), 1e-9);
    EXPECT_NEAR(blocks(j).c_vec().norm(), 1.0, 1e-9);
  }
}

TEST(Statement1, RejectsReflections) {
  Mat3 reflect = Mat3::Identity();
  reflect(0, 0) = -1.0;
  try {
    statement1_structure(reflect, Mat3::Identity());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRotation);
  }
  EXPECT_THROW(statement1_structure(Mat3::Identity(), 2.0 * Mat3::Identity()), Error);
}
