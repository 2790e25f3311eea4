#include <gtest/gtest.h>

#include <random>
#include <set>

#include <twistor/exterior.hpp>

#include "oracles.hpp"

using namespace twistor;

namespace {

Covector random_covector(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  return Covector(n(g), n(g), n(g), n(g), n(g), n(g));
}

TwoForm random_form(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  TwoForm w;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) w.set(i, j, n(g));
  return w;
}

}  // namespace

TEST(PairIndex, CoversFifteenSlotsLexicographically) {
  std::set<int> seen;
  int expected = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      EXPECT_EQ(pair_index(i, j), expected++);
      const auto [a, b] = index_pair(pair_index(i, j));
      EXPECT_EQ(a, i);
      EXPECT_EQ(b, j);
      seen.insert(pair_index(i, j));
    }
  EXPECT_EQ(seen.size(), 15u);
}

TEST(TwoForm, BasisIsAntisymmetric) {
  const TwoForm w = TwoForm::basis(1, 2);
  EXPECT_EQ(w(0, 1), 1.0);
  EXPECT_EQ(w(1, 0), -1.0);
  EXPECT_EQ(w(0, 0), 0.0);
  EXPECT_EQ(TwoForm::basis(2, 1), -w);
}

TEST(TwoForm, MatrixRoundTrip) {
  std::mt19937_64 g(5);
  for (int k = 0; k < 20; ++k) {
    const TwoForm w = random_form(g);
    const Mat6 m = w.matrix();
    EXPECT_LT((m + m.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(TwoForm::from_matrix(m), w);
  }
}

TEST(Wedge, MatchesOuterProductDefinition) {
  std::mt19937_64 g(1);
  for (int k = 0; k < 20; ++k) {
    const Covector a = random_covector(g), b = random_covector(g);
    const Mat6 expected = a.coeffs * b.coeffs.transpose() - b.coeffs * a.coeffs.transpose();
    EXPECT_LT((wedge(a, b).matrix() - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_EQ(wedge(Covector::basis(1), Covector::basis(2)), TwoForm::basis(1, 2));
}

TEST(Wedge, AntisymmetricAndBilinear) {
  std::mt19937_64 g(2);
  const Covector a = random_covector(g), b = random_covector(g), c = random_covector(g);
  EXPECT_LT((wedge(a, b) + wedge(b, a)).max_abs(), 1e-15);
  EXPECT_LT((wedge(a + c, b) - wedge(a, b) - wedge(c, b)).max_abs(), 1e-14);
  EXPECT_LT(wedge(a, a).max_abs(), 1e-15);
}

TEST(FormInner, BasisOrthonormalAndHalfTrace) {
  EXPECT_EQ(form_inner(TwoForm::basis(1, 2), TwoForm::basis(1, 2)), 1.0);
  EXPECT_EQ(form_inner(TwoForm::basis(1, 2), TwoForm::basis(3, 4)), 0.0);
  std::mt19937_64 g(3);
  const TwoForm a = random_form(g), b = random_form(g);
  const double half_trace = 0.5 * (a.matrix().transpose() * b.matrix()).trace();
  EXPECT_NEAR(form_inner(a, b), half_trace, 1e-13);
}

TEST(EvalForm, BilinearPairing) {
  std::mt19937_64 g(4);
  std::normal_distribution<double> n;
  const TwoForm w = random_form(g);
  const AlgebraVector x(n(g), n(g), n(g), n(g), n(g), n(g)), y(n(g), n(g), n(g), n(g), n(g), n(g));
  EXPECT_NEAR(eval_form(w, x, y), x.coeffs.dot(w.matrix() * y.coeffs), 1e-13);
  EXPECT_NEAR(eval_form(w, x, y), -eval_form(w, y, x), 1e-13);
}

TEST(WedgeSquare, MatchesAlternatingSum) {
  std::mt19937_64 g(6);
  for (int trial = 0; trial < 5; ++trial) {
    const TwoForm w = random_form(g);
    const auto sq = wedge_square(w);
    int slot = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          for (int l = k + 1; l < 6; ++l)
            EXPECT_NEAR(sq[slot++], oracle::wedge_square(w.matrix(), i, j, k, l), 1e-12);
  }
}

TEST(WedgeSquare, VanishesExactlyOnDecomposable) {
  std::mt19937_64 g(7);
  for (int k = 0; k < 20; ++k) {
    const auto sq = wedge_square(wedge(random_covector(g), random_covector(g)));
    for (double c : sq) EXPECT_LT(std::abs(c), 1e-12);
  }
  const auto sq = wedge_square(TwoForm::basis(1, 2) + TwoForm::basis(3, 4));
  EXPECT_EQ(sq[0], 2.0);  // e^1234
}

TEST(BivectorSlot, FixedBasisAndSigns) {
  EXPECT_EQ(bivector_slot(0, 1).slot, 0);
  EXPECT_EQ(bivector_slot(0, 2).slot, 1);
  EXPECT_EQ(bivector_slot(0, 3).slot, 2);
  EXPECT_EQ(bivector_slot(2, 3).slot, 3);
  EXPECT_EQ(bivector_slot(3, 1).slot, 4);
  EXPECT_EQ(bivector_slot(1, 2).slot, 5);
  EXPECT_EQ(bivector_slot(1, 3).sign, -1);
  EXPECT_EQ(bivector_slot(1, 0).sign, -1);
  EXPECT_EQ(bivector_slot(2, 2).sign, 0);
}

TEST(Wedge3, MatchesLeviCivita) {
  // (u ^ v^a ^ v^b) coordinate on the triple omitting index m is the sign of
  // the sorted triple times u_c, where {a, b, c} is that triple.
  std::mt19937_64 g(8);
  std::normal_distribution<double> n;
  CVec4 u;
  for (int a = 0; a < 4; ++a) u(a) = {n(g), n(g)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      const CVec4 got = wedge3(u, ComplexBivector::basis(a, b));
      for (int m = 0; m < 4; ++m) {
        Complex want = 0.0;
        for (int c = 0; c < 4; ++c) {
          if (c == a || c == b || c == m || a == m || b == m) continue;
          std::array<int, 3> sorted{c, a, b};
          std::array<int, 3> order = sorted;
          std::sort(sorted.begin(), sorted.end());
          std::array<int, 3> rank{};
          for (int t = 0; t < 3; ++t)
            rank[t] = static_cast<int>(std::find(sorted.begin(), sorted.end(), order[t]) - sorted.begin());
          want += static_cast<double>(oracle::perm_sign(rank)) * u(c);
        }
        EXPECT_LT(std::abs(got(m) - want), 1e-13) << a << b << m;
      }
    }
}

TEST(WedgeWithBasis, LinearInU) {
  const CVec4 u(Complex(1, 2), Complex(0, 1), Complex(-1, 0), Complex(3, -1));
  for (int j = 0; j < 4; ++j) {
    CVec6 sum = CVec6::Zero();
    for (int a = 0; a < 4; ++a)
      if (a != j) sum += u(a) * ComplexBivector::basis(a, j).coeffs;
    EXPECT_LT((wedge_with_basis(u, j).coeffs - sum).norm(), 1e-14);
  }
}
