#pragma once

#include <utility>

#include "twistor/acs.hpp"
#include "twistor/cp3.hpp"

namespace twistor {

// ---------------------------------------------------------------------------
// Edges of the tetrahedron picture

/// Projective line through two distinct points of CP^3 (a 2-sphere).
struct Edge {
  CP3Point z;
  CP3Point u;

  /// Throws DomainError when z and u coincide projectively.
  Edge(const CP3Point& z, const CP3Point& u);
};

/// alpha z + beta u with unit-norm representatives of z and u. Throws
/// ZeroCombination when alpha = beta = 0.
CP3Point edge_point(const Edge& e, Complex alpha, Complex beta);

/// Fundamental form of the edge-E01 point [s, c1 + i c2, 0, 0], computed
/// through cp3_to_acs. Throws ParamDomain unless s^2 + c1^2 + c2^2 = 1.
TwoForm lemma1_form(Real s, Real c1, Real c2);

/// e^12 + r(e^34 + e^56) + u(e^35 + e^64) + x(e^36 + e^45).
TwoForm lemma1_closed_form(Real r, Real u, Real x);

/// Membership of w in the generalized edge [sigma] for a decomposable unit
/// sigma = e ^ f: w is in Z and w - sigma lives on the complement of span(e, f).
/// Throws NotDecomposable or NotUnit for a bad sigma.
bool generalized_edge_contains(const TwoForm& sigma, const TwoForm& w);

/// Membership of w in the polar set of sigma: w in Z and <w, sigma> = 0
/// within 1e-9. Throws ZeroForm for sigma = 0.
bool polar_contains(const TwoForm& sigma, const TwoForm& w);

// ---------------------------------------------------------------------------
// Polar set of e^5 ^ e^6: circles between the edges E03 and E12

/// Pole parameters: (r+, x+, u+) and (r-, x-, u-) on the unit sphere.
struct PolarPairParams {
  Real r_plus = 1.0, x_plus = 0.0, u_plus = 0.0;
  Real r_minus = 1.0, x_minus = 0.0, u_minus = 0.0;

  /// Throws ParamDomain unless both triples are unit to 1e-9.
  void check() const;
};

/// Pole p+ on E03 and p- on E12:
///   p+ = [sqrt((r+ + 1)/2), 0, 0, (-u+ + i x+)/sqrt(2(r+ + 1))],
///   p- = [0, sqrt((r- + 1)/2), (u- + i x-)/sqrt(2(r- + 1)), 0],
/// with p+ = [0,0,0,1] and p- = [0,0,1,0] when |r +- + 1| < kDegenerateTol.
/// Both representatives have unit norm.
inline constexpr Real kDegenerateTol = 1e-8;
std::pair<CP3Point, CP3Point> polar_pair_points(const PolarPairParams& p);

/// The pole 2-forms, recomputed:
///   p+ = e^56 + r+(e^12 + e^34) + x+(e^13 - e^24) + u+(e^14 + e^23),
///   p- = -e^56 + r-(e^12 - e^34) + x-(e^13 + e^24) + u-(e^14 - e^23).
std::pair<TwoForm, TwoForm> polar_pair_forms(const PolarPairParams& p);

/// Equator point (p- + e^{i theta} p+) / sqrt(2) of the sphere through p+, p-.
CP3Point circle_point(const PolarPairParams& p, Real theta);

/// Fundamental form of circle_point, computed constructively.
TwoForm lemma3_form(const PolarPairParams& p, Real theta);

enum class Lemma3Branch {
  Generic,        // r+ != -1, r- != -1
  BothDegenerate, // r+ = r- = -1
  MinusDegenerate,// r+ != -1, r- = -1
  PlusDegenerate, // r- != -1, r+ = -1
};

Lemma3Branch lemma3_branch(const PolarPairParams& p);

/// Closed-form right-hand side for the branch of `p`, together with the
/// factor relating it to w: rhs = scale * w. The generic branch carries scale
/// 2; the others equal w itself. With `corrected == false` the
/// MinusDegenerate branch is evaluated as originally printed, including its
/// e^12 coefficient (r- - 1)/2 and the sign of the t2 (e^15 - e^26) term.
struct Lemma3ClosedForm {
  Lemma3Branch branch;
  TwoForm rhs;
  Real scale;
};
Lemma3ClosedForm lemma3_closed_form(const PolarPairParams& p, Real theta, bool corrected = true);

/// Which pole approaches its degenerate value in a seam limit.
enum class SeamSide { Plus, Minus };

/// Limit of lemma3_form as r_side -> -1 along the path that keeps the pole
/// phase aligned with the degenerate point (x = 0, -u+ > 0 resp. u- > 0),
/// with the other pole fixed from `p`. Richardson extrapolation in
/// s = sqrt(r + 1) over `levels` halvings starting at r + 1 = delta0.
TwoForm lemma3_seam_limit(const PolarPairParams& p, SeamSide side, Real theta, Real delta0 = 1e-4,
                          int levels = 4);

/// Params of the circle through the factor-swapping set:
/// r+ = -r- = r, x+ = -x- = x, u+ = u- = u.
PolarPairParams ank_params(Real r, Real x, Real u);

/// cp3_to_acs(circle_point(ank_params(r, x, u), theta)). Throws ParamDomain
/// unless r^2 + x^2 + u^2 = 1.
ACS ank_circle_point(Real r, Real x, Real u, Real theta);

/// Circle coordinates of a point of the polar set of e^5^e^6.
struct CircleCoords {
  PolarPairParams params;
  Real theta = 0.0;
};

/// Reads p-, p+ and theta off a point with |u0|^2 + |u3|^2 = |u1|^2 + |u2|^2.
/// Throws DomainError when the point is off the polar set by more than `tol`.
CircleCoords invert_circle_point(const CP3Point& q, Real tol = 1e-8);

struct AnkCircleCoords {
  Real r = 0.0, x = 0.0, u = 0.0, theta = 0.0;
};

/// Circle coordinates (r, x, u, theta) of a factor-swapping structure.
AnkCircleCoords invert_ank_circle_point(const ACS& acs);

}  // namespace twistor
