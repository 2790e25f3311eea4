#include <gtest/gtest.h>

#include <twistor/extremum.hpp>
#include <twistor/nearly_kaehler.hpp>
#include <twistor/nijenhuis.hpp>

using namespace twistor;

TEST(Search, StartAtFactorSwapIsImmediatelyMaximal) {
  const SearchReport r = search_from(ank_structure(), Direction::Maximize);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_NEAR(r.best_value, calibrated_max_norm(), 1e-12);
}

TEST(Search, StartAtHopfStaysAtZero) {
  const SearchReport r = search_from(hopf_structure(), Direction::Minimize);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.best_value, 1e-12);
}

TEST(Search, MaximizeReachesCalibratedMaximum) {
  const SearchReport r = maximize(1, 20);
  const double ratio = r.best_value / calibrated_max_norm();
  EXPECT_GE(ratio, 1 - 1e-4);
  EXPECT_LE(ratio, 1 + 1e-9);
  EXPECT_TRUE(is_ank(r.best_acs, 1e-3));
  EXPECT_NEAR(r.best_value, nijenhuis_norm(r.best_acs), 1e-12);
  EXPECT_EQ(r.restarts, 20);
}

TEST(Search, MinimizeFindsIntegrableStructure) {
  const SearchReport r = minimize(2, 20);
  EXPECT_LT(r.best_value, 1e-6);
  EXPECT_NEAR(blocks(r.best_acs).c_vec().norm(), 1.0, 1e-3);
  EXPECT_NEAR(r.best_value, nijenhuis_norm(r.best_acs), 1e-12);
}

TEST(Search, IteratesStayInZMonotoneAndFollowClosedForm) {
  for (const Direction dir : {Direction::Maximize, Direction::Minimize}) {
    int accepted = 0;
    SearchOptions opts;
    opts.on_accept = [&](const Iterate& it) {
      ++accepted;
      const MembershipReport m = inspect(it.structure);
      EXPECT_LT(m.complex_residual, 1e-9);
      EXPECT_LT(m.orthogonal_residual, 1e-9);
      EXPECT_TRUE(m.orientation_ok);
      if (dir == Direction::Maximize)
        EXPECT_GE(it.value, it.previous_value);
      else
        EXPECT_LE(it.value, it.previous_value);
      // the law in squared form; the square root of 1 - |c|^2 loses half the
      // digits next to the integrable set, so norms are compared away from it
      const ACS j = ACS::validate(it.structure);
      const double closed = closed_form_norm(blocks(j));
      EXPECT_NEAR(it.value * it.value, closed * closed, 1e-9);
      if (closed * closed > 1e-6) EXPECT_NEAR(it.value, closed, 1e-9);
    };
    if (dir == Direction::Maximize)
      maximize(7, 3, opts);
    else
      minimize(7, 3, opts);
    EXPECT_GT(accepted, 10);
  }
}

TEST(Search, DeterministicAndThreadIndependent) {
  SearchOptions serial;
  serial.parallel = false;
  const SearchReport a = maximize(5, 4);
  const SearchReport b = maximize(5, 4);
  const SearchReport c = maximize(5, 4, serial);
  EXPECT_EQ(a.best_acs, b.best_acs);
  EXPECT_EQ(a.best_acs, c.best_acs);
  EXPECT_EQ(a.best_value, c.best_value);
  EXPECT_EQ(a.iterations, c.iterations);
}

TEST(Search, NoConvergenceCarriesPartialBest) {
  SearchOptions opts;
  opts.max_iters = 2;
  try {
    maximize(1, 2, opts);
    FAIL();
  } catch (const NoConvergenceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
    EXPECT_FALSE(e.partial().converged);
    EXPECT_GT(e.partial().best_value, 0.0);
  }
}

TEST(Search, RestartsMustBePositive) { EXPECT_THROW(maximize(1, 0), Error); }
