#include "twistor/acs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "twistor/error.hpp"
#include "twistor/random.hpp"

namespace twistor {

namespace {

Mat6 structure_from_pairs(std::initializer_list<std::array<int, 3>> images) {
  // each entry {a, b, s}: J e_a = s e_b (1-based)
  Mat6 j = Mat6::Zero();
  for (const auto& [a, b, s] : images) {
    j(b - 1, a - 1) = s;
    j(a - 1, b - 1) = -s;
  }
  return j;
}

Mat6 vertex_matrix(int k) {
  // covector actions I_k e^1 = -+e^2 ... read as vector actions
  static const std::array<std::array<int, 3>, 4> signs{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  const auto& s = signs.at(static_cast<std::size_t>(k));
  return structure_from_pairs({{1, 2, s[0]}, {3, 4, s[1]}, {5, 6, s[2]}});
}

Real max_abs(const Mat6& m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt_residual(Real r) { return "max-abs residual " + std::to_string(r); }

}  // namespace

MembershipReport inspect(const Mat6& j) {
  MembershipReport rep;
  rep.complex_residual = max_abs(j * j + Mat6::Identity());
  rep.orthogonal_residual = max_abs(j.transpose() * j - Mat6::Identity());
  if (rep.complex_residual <= kMembershipTol && rep.orthogonal_residual <= kMembershipTol) {
    try {
      rep.orientation = orientation_sign(j);
      rep.orientation_ok = rep.orientation == reference_orientation();
    } catch (const Error&) {
      rep.orientation = 0;
    }
  }
  return rep;
}

ACS ACS::validate(const Mat6& j) {
  if (!j.allFinite()) throw Error(ErrorKind::NotComplex, "non-finite entries", INFINITY);
  const MembershipReport rep = inspect(j);
  if (rep.complex_residual > kMembershipTol)
    throw Error(ErrorKind::NotComplex, "J^2 != -1, " + fmt_residual(rep.complex_residual), rep.complex_residual);
  if (rep.orthogonal_residual > kMembershipTol)
    throw Error(ErrorKind::NotOrthogonal, "J^T J != 1, " + fmt_residual(rep.orthogonal_residual),
                rep.orthogonal_residual);
  if (!rep.orientation_ok) throw Error(ErrorKind::WrongOrientation, "frame orientation opposite to I0", 2.0);
  return ACS(j);
}

int orientation_sign(const Mat6& j, const AlgebraVector& x1, const AlgebraVector& x2, const AlgebraVector& x3) {
  Mat6 frame;
  frame << x1.coeffs, x2.coeffs, x3.coeffs, j * x1.coeffs, j * x2.coeffs, j * x3.coeffs;
  const Real scale = x1.coeffs.norm() * x2.coeffs.norm() * x3.coeffs.norm();
  const Real det = frame.determinant();
  if (!(scale > 0.0) || std::abs(det) < 1e-9 * scale * scale)
    throw Error(ErrorKind::DegenerateFrame, "X_i, J X_i are linearly dependent");
  return det > 0 ? 1 : -1;
}

int orientation_sign(const Mat6& j) {
  // Gram-Schmidt against span{X, JX} keeps the complement J-invariant.
  std::array<Vec6, 3> xs;
  std::vector<Vec6> used;
  for (int n = 0; n < 3; ++n) {
    Vec6 best = Vec6::Zero();
    for (int k = 0; k < 6; ++k) {
      Vec6 v = Vec6::Unit(k);
      for (const Vec6& w : used) v -= w.dot(v) * w;
      if (v.norm() > best.norm() + 1e-12) best = v;
    }
    if (best.norm() < 1e-6) throw Error(ErrorKind::DegenerateFrame, "no J-adapted frame");
    best.normalize();
    Vec6 jb = j * best;
    for (const Vec6& w : used) jb -= w.dot(jb) * w;
    jb -= best.dot(jb) * best;
    if (jb.norm() < 1e-6) throw Error(ErrorKind::DegenerateFrame, "J X lies in span of frame");
    used.push_back(best);
    used.push_back(jb.normalized());
    xs[n] = best;
  }
  return orientation_sign(j, AlgebraVector(xs[0]), AlgebraVector(xs[1]), AlgebraVector(xs[2]));
}

int reference_orientation() {
  static const int sign = orientation_sign(vertex_matrix(0));
  return sign;
}

TwoForm fundamental_form(const ACS& acs) {
  // w_ij = g(J e_i, e_j) = J(j, i)
  return TwoForm::from_matrix(acs.matrix().transpose());
}

ACS acs_from_form(const TwoForm& w) {
  const Mat6 j = w.matrix().transpose();
  try {
    return ACS::validate(j);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotInZ, e.what(), e.residual());
  }
}

std::array<Real, 9> Blocks::b_entries() const {
  std::array<Real, 9> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[3 * r + c] = b(r, c);
  return out;
}

Mat6 Blocks::reassemble() const {
  Mat6 j;
  j << a, b, -b.transpose(), c;
  return j;
}

Blocks blocks(const ACS& acs) {
  const Mat6& j = acs.matrix();
  Blocks out;
  out.a = j.topLeftCorner<3, 3>();
  out.b = j.topRightCorner<3, 3>();
  out.c = j.bottomRightCorner<3, 3>();
  return out;
}

std::array<Real, 16> constraint_residuals(const Blocks& bl) {
  const Vec3 av = bl.a_vec();
  const Vec3 cv = bl.c_vec();
  const Real a1 = av(0), a2 = av(1), a3 = av(2);
  const Real c1 = cv(0), c2 = cv(1), c3 = cv(2);
  const auto bb = bl.b_entries();
  const Real b1 = bb[0], b2 = bb[1], b3 = bb[2], b4 = bb[3], b5 = bb[4], b6 = bb[5], b7 = bb[6], b8 = bb[7],
             b9 = bb[8];
  return {
      a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2 + b3 * b3 - 1.0,
      a1 * a1 + a3 * a3 + b4 * b4 + b5 * b5 + b6 * b6 - 1.0,
      a2 * a2 + a3 * a3 + b7 * b7 + b8 * b8 + b9 * b9 - 1.0,
      // rows of (-B^T C) carry the columns of B
      c1 * c1 + c2 * c2 + b1 * b1 + b4 * b4 + b7 * b7 - 1.0,
      c1 * c1 + c3 * c3 + b2 * b2 + b5 * b5 + b8 * b8 - 1.0,
      c2 * c2 + c3 * c3 + b3 * b3 + b6 * b6 + b9 * b9 - 1.0,
      a1 * b4 + a2 * b7 - c1 * b2 - c2 * b3,
      a1 * b5 + a2 * b8 + b1 * c1 - b3 * c3,
      a1 * b6 + a2 * b9 + b1 * c2 + b2 * c3,
      -a1 * b1 + a3 * b7 - c1 * b5 - c2 * b6,
      -a1 * b3 + a3 * b9 + b4 * c2 + b5 * c3,
      -a2 * b1 - a3 * b4 - b8 * c1 - b9 * c2,
      -a2 * b2 - a3 * b5 + b7 * c1 - b9 * c3,
      -a2 * b3 - a3 * b6 + b7 * c2 + b8 * c3,
      -a1 * b2 + a3 * b8 + b4 * c1 - b6 * c3,
      av.squaredNorm() - cv.squaredNorm(),
  };
}

ACS random_acs(std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const Mat6 q = random_rotation<6>(rng);
  return ACS::validate(q * vertex_matrix(0) * q.transpose());
}

ACS conjugate(const ACS& acs, const Mat6& q) { return ACS::validate(q * acs.matrix() * q.transpose()); }

Mat6 block_rotation(const Mat3& o1, const Mat3& o2) {
  Mat6 q = Mat6::Zero();
  q.topLeftCorner<3, 3>() = o1;
  q.bottomRightCorner<3, 3>() = o2;
  return q;
}

ACS vertex_structure(int k) { return ACS::validate(vertex_matrix(k)); }

TwoForm vertex_form(int k) { return fundamental_form(vertex_structure(k)); }

ACS hopf_structure() { return ACS::validate(structure_from_pairs({{1, 4, 1}, {2, 3, 1}, {5, 6, 1}})); }

ACS ank_structure() { return ACS::validate(structure_from_pairs({{1, 4, -1}, {2, 5, -1}, {3, 6, -1}})); }

}  // namespace twistor
