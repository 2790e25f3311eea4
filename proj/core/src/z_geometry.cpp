#include "twistor/z_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "twistor/error.hpp"

namespace twistor {

namespace {

struct Term {
  int i, j;  // 1-based
  Real value;
};

TwoForm form_of(std::initializer_list<Term> terms) {
  TwoForm w;
  for (const Term& t : terms) w.set(t.i - 1, t.j - 1, w(t.i - 1, t.j - 1) + t.value);
  return w;
}

void require_unit(Real a, Real b, Real c, const char* what) {
  const Real err = std::abs(a * a + b * b + c * c - 1.0);
  if (!(err <= 1e-9)) throw Error(ErrorKind::ParamDomain, std::string(what) + " is not on the unit sphere", err);
}

}  // namespace

Edge::Edge(const CP3Point& z_, const CP3Point& u_) : z(z_), u(u_) {
  if (projective_distance(z, u) < 1e-9) throw Error(ErrorKind::DomainError, "edge endpoints coincide");
}

CP3Point edge_point(const Edge& e, Complex alpha, Complex beta) {
  if (std::abs(alpha) + std::abs(beta) == 0.0) throw Error(ErrorKind::ZeroCombination, "alpha = beta = 0");
  const CVec4 z = e.z.coords() / e.z.coords().norm();
  const CVec4 u = e.u.coords() / e.u.coords().norm();
  const CVec4 p = alpha * z + beta * u;
  if (p.norm() == 0.0) throw Error(ErrorKind::ZeroCombination, "combination vanishes");
  return CP3Point(p);
}

TwoForm lemma1_form(Real s, Real c1, Real c2) {
  require_unit(s, c1, c2, "(s, c1, c2)");
  return fundamental_form(cp3_to_acs(CP3Point(s, Complex(c1, c2), 0.0, 0.0)));
}

TwoForm lemma1_closed_form(Real r, Real u, Real x) {
  return form_of({{1, 2, 1.0},
                  {3, 4, r},
                  {5, 6, r},
                  {3, 5, u},
                  {6, 4, u},
                  {3, 6, x},
                  {4, 5, x}});
}

bool generalized_edge_contains(const TwoForm& sigma, const TwoForm& w) {
  const auto sq = wedge_square(sigma);
  Real dec = 0.0;
  for (Real v : sq) dec = std::max(dec, std::abs(v));
  if (dec > 1e-9) throw Error(ErrorKind::NotDecomposable, "sigma ^ sigma != 0", dec);
  const Real unit = std::abs(form_inner(sigma, sigma) - 1.0);
  if (unit > 1e-9) throw Error(ErrorKind::NotUnit, "|sigma| != 1", unit);

  try {
    acs_from_form(w);
  } catch (const Error&) {
    return false;
  }
  // tau = w - sigma must annihilate the plane of sigma, which is spanned by
  // the columns of sigma's matrix.
  const Mat6 tau = (w - sigma).matrix();
  return (tau * sigma.matrix()).cwiseAbs().maxCoeff() < 1e-9;
}

bool polar_contains(const TwoForm& sigma, const TwoForm& w) {
  if (sigma.max_abs() == 0.0) throw Error(ErrorKind::ZeroForm, "sigma = 0");
  try {
    acs_from_form(w);
  } catch (const Error&) {
    return false;
  }
  return std::abs(form_inner(w, sigma)) < 1e-9;
}

void PolarPairParams::check() const {
  require_unit(r_plus, x_plus, u_plus, "(r+, x+, u+)");
  require_unit(r_minus, x_minus, u_minus, "(r-, x-, u-)");
}

std::pair<CP3Point, CP3Point> polar_pair_points(const PolarPairParams& p) {
  p.check();
  const Real rp = p.r_plus + 1.0;
  const Real rm = p.r_minus + 1.0;
  const CP3Point plus =
      std::abs(rp) < kDegenerateTol
          ? CP3Point(0.0, 0.0, 0.0, 1.0)
          : CP3Point(std::sqrt(rp / 2.0), 0.0, 0.0, Complex(-p.u_plus, p.x_plus) / std::sqrt(2.0 * rp));
  const CP3Point minus =
      std::abs(rm) < kDegenerateTol
          ? CP3Point(0.0, 0.0, 1.0, 0.0)
          : CP3Point(0.0, std::sqrt(rm / 2.0), Complex(p.u_minus, p.x_minus) / std::sqrt(2.0 * rm), 0.0);
  return {plus, minus};
}

std::pair<TwoForm, TwoForm> polar_pair_forms(const PolarPairParams& p) {
  const TwoForm plus = form_of({{5, 6, 1.0},
                                {1, 2, p.r_plus},
                                {3, 4, p.r_plus},
                                {1, 3, p.x_plus},
                                {2, 4, -p.x_plus},
                                {1, 4, p.u_plus},
                                {2, 3, p.u_plus}});
  const TwoForm minus = form_of({{5, 6, -1.0},
                                 {1, 2, p.r_minus},
                                 {3, 4, -p.r_minus},
                                 {1, 3, p.x_minus},
                                 {2, 4, p.x_minus},
                                 {1, 4, p.u_minus},
                                 {2, 3, -p.u_minus}});
  return {plus, minus};
}

CP3Point circle_point(const PolarPairParams& p, Real theta) {
  const auto [plus, minus] = polar_pair_points(p);
  const Complex t(std::cos(theta), std::sin(theta));
  return CP3Point((minus.coords() + t * plus.coords()) / std::sqrt(2.0));
}

TwoForm lemma3_form(const PolarPairParams& p, Real theta) {
  return fundamental_form(cp3_to_acs(circle_point(p, theta)));
}

Lemma3Branch lemma3_branch(const PolarPairParams& p) {
  const bool plus_deg = std::abs(p.r_plus + 1.0) < kDegenerateTol;
  const bool minus_deg = std::abs(p.r_minus + 1.0) < kDegenerateTol;
  if (plus_deg && minus_deg) return Lemma3Branch::BothDegenerate;
  if (minus_deg) return Lemma3Branch::MinusDegenerate;
  if (plus_deg) return Lemma3Branch::PlusDegenerate;
  return Lemma3Branch::Generic;
}

Lemma3ClosedForm lemma3_closed_form(const PolarPairParams& p, Real theta, bool corrected) {
  const Real t1 = std::cos(theta), t2 = std::sin(theta);
  const Lemma3Branch branch = lemma3_branch(p);
  switch (branch) {
    case Lemma3Branch::Generic: {
      const Real xp = p.x_plus, up = p.u_plus, xm = p.x_minus, um = p.u_minus;
      const Real rp = p.r_plus + 1.0, rm = p.r_minus + 1.0;
      const Real d = std::sqrt(rp * rm);
      const Real a = xp * t1 - up * t2;  // recurring combinations
      const Real b = xp * t2 + up * t1;
      const Real c = um * t2 - xm * t1;
      const Real e = um * t1 + xm * t2;
      const TwoForm rhs = form_of({
          {1, 2, p.r_plus + p.r_minus},
          {3, 4, p.r_plus - p.r_minus},
          {1, 3, xp + xm},
          {4, 2, xp - xm},
          {1, 4, up + um},
          {2, 3, up - um},
          {1, 5, (a * rm + c * rp) / d},
          {1, 6, (-b * rm + e * rp) / d},
          {2, 5, (b * rm + e * rp) / d},
          {2, 6, (a * rm - c * rp) / d},
          {3, 5, (-t2 * rp * rm + um * a + xm * (up * t1 + xp * t2)) / d},
          {3, 6, (-t1 * rp * rm - um * b + xm * a) / d},
          {4, 5, (-t1 * rp * rm + um * b - xm * a) / d},
          {4, 6, (t2 * rp * rm + um * a + xm * (up * t1 + xp * t2)) / d},
      });
      return {branch, rhs, 2.0};
    }
    case Lemma3Branch::BothDegenerate: {
      const TwoForm rhs = form_of({{1, 2, -1.0}, {3, 5, t2}, {4, 6, t2}, {3, 6, t1}, {4, 5, -t1}});
      return {branch, rhs, 1.0};
    }
    case Lemma3Branch::MinusDegenerate: {
      const Real r = p.r_plus, x = p.x_plus, u = p.u_plus;
      const Real s = std::sqrt((r + 1.0) / 2.0);
      const Real q = std::sqrt(2.0 * (r + 1.0));
      const Real e12 = corrected ? (r - 1.0) / 2.0 : (p.r_minus - 1.0) / 2.0;
      const Real t2_sign = corrected ? 1.0 : -1.0;
      const TwoForm rhs = form_of({
          {1, 2, e12},
          {1, 6, t1 * s},
          {2, 5, t1 * s},
          {1, 4, u / 2.0},
          {2, 3, u / 2.0},
          {1, 3, x / 2.0},
          {2, 4, -x / 2.0},
          {1, 5, t2_sign * t2 * s},
          {2, 6, -t2_sign * t2 * s},
          {3, 4, (r + 1.0) / 2.0},
          {4, 6, (x * t1 - u * t2) / q},
          {3, 5, (x * t1 - u * t2) / q},
          {4, 5, (u * t1 + x * t2) / q},
          {3, 6, -(u * t1 + x * t2) / q},
      });
      return {branch, rhs, 1.0};
    }
    case Lemma3Branch::PlusDegenerate: {
      const Real r = p.r_minus, x = p.x_minus, u = p.u_minus;
      const Real s = std::sqrt((r + 1.0) / 2.0);
      const Real q = std::sqrt(2.0 * (r + 1.0));
      const TwoForm rhs = form_of({
          {1, 2, (r - 1.0) / 2.0},
          {1, 4, u / 2.0},
          {2, 3, -u / 2.0},
          {1, 3, x / 2.0},
          {2, 4, x / 2.0},
          {1, 6, t1 * s},
          {2, 5, -t1 * s},
          {1, 5, t2 * s},
          {2, 6, t2 * s},
          {3, 6, (u * t1 + x * t2) / q},
          {4, 5, -(u * t1 + x * t2) / q},
          {3, 5, (u * t2 - x * t1) / q},
          {4, 6, (u * t2 - x * t1) / q},
          {3, 4, -(1.0 + r) / 2.0},
      });
      return {branch, rhs, 1.0};
    }
  }
  return {branch, TwoForm{}, 1.0};
}

TwoForm lemma3_seam_limit(const PolarPairParams& p, SeamSide side, Real theta, Real delta0, int levels) {
  auto along_path = [&](Real s) {
    PolarPairParams q = p;
    const Real r = -1.0 + s * s;
    const Real lateral = std::sqrt(std::max(0.0, 1.0 - r * r));
    if (side == SeamSide::Plus) {
      q.r_plus = r;
      q.x_plus = 0.0;
      q.u_plus = -lateral;
    } else {
      q.r_minus = r;
      q.x_minus = 0.0;
      q.u_minus = lateral;
    }
    return lemma3_form(q, theta);
  };

  const Real s0 = std::sqrt(delta0);
  std::vector<TwoForm> table;
  for (int k = 0; k < levels; ++k) table.push_back(along_path(s0 / std::pow(2.0, k)));
  // the forms are analytic in s, so eliminate s^1, s^2, ... in turn
  for (int order = 1; order < levels; ++order) {
    const Real f = std::pow(2.0, order);
    for (std::size_t k = 0; k + 1 < table.size(); ++k)
      table[k] = (1.0 / (f - 1.0)) * (f * table[k + 1] - table[k]);
    table.pop_back();
  }
  return table.front();
}

PolarPairParams ank_params(Real r, Real x, Real u) {
  PolarPairParams p;
  p.r_plus = r;
  p.x_plus = x;
  p.u_plus = u;
  p.r_minus = -r;
  p.x_minus = -x;
  p.u_minus = u;
  return p;
}

ACS ank_circle_point(Real r, Real x, Real u, Real theta) {
  require_unit(r, x, u, "(r, x, u)");
  return cp3_to_acs(circle_point(ank_params(r, x, u), theta));
}

CircleCoords invert_circle_point(const CP3Point& point, Real tol) {
  const CVec4 q = point.coords() / point.coords().norm();
  const Real plus_weight = std::norm(q(0)) + std::norm(q(3));
  const Real minus_weight = std::norm(q(1)) + std::norm(q(2));
  if (std::abs(plus_weight - minus_weight) > tol)
    throw Error(ErrorKind::DomainError, "point is off the polar set of e^5^e^6",
                std::abs(plus_weight - minus_weight));

  const Real deg = kDegenerateTol / 2.0;  // |coord|^2 = (r + 1) / 2
  CircleCoords out;
  PolarPairParams& p = out.params;

  // p- carries the global phase: its v1 coordinate is real positive
  const CVec4 pm = std::sqrt(2.0) * CVec4(0.0, q(1), q(2), 0.0);
  Complex phase;
  if (std::norm(pm(1)) < deg) {
    phase = pm(2) / std::abs(pm(2));
    p.r_minus = -1.0;
    p.x_minus = p.u_minus = 0.0;
  } else {
    phase = pm(1) / std::abs(pm(1));
    const CVec4 rep = pm / phase;
    p.r_minus = 2.0 * std::norm(rep(1)) - 1.0;
    const Complex ux = rep(2) * std::sqrt(2.0 * (p.r_minus + 1.0));
    p.u_minus = ux.real();
    p.x_minus = ux.imag();
  }

  const CVec4 pp = std::sqrt(2.0) * CVec4(q(0), 0.0, 0.0, q(3)) / phase;
  Complex turn;
  if (std::norm(pp(0)) < deg) {
    turn = pp(3) / std::abs(pp(3));
    p.r_plus = -1.0;
    p.x_plus = p.u_plus = 0.0;
  } else {
    turn = pp(0) / std::abs(pp(0));
    const CVec4 rep = pp / turn;
    p.r_plus = 2.0 * std::norm(rep(0)) - 1.0;
    const Complex ux = rep(3) * std::sqrt(2.0 * (p.r_plus + 1.0));  // -u+ + i x+
    p.u_plus = -ux.real();
    p.x_plus = ux.imag();
  }
  out.theta = std::arg(turn);

  // project back onto the unit spheres to absorb rounding
  auto renorm = [](Real& r, Real& x, Real& u) {
    const Real n = std::sqrt(r * r + x * x + u * u);
    r /= n;
    x /= n;
    u /= n;
  };
  renorm(p.r_plus, p.x_plus, p.u_plus);
  renorm(p.r_minus, p.x_minus, p.u_minus);
  return out;
}

AnkCircleCoords invert_ank_circle_point(const ACS& acs) {
  const CircleCoords c = invert_circle_point(acs_to_cp3(acs));
  return {c.params.r_plus, c.params.x_plus, c.params.u_plus, c.theta};
}

}  // namespace twistor
