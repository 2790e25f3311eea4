#include "twistor/cp3.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

namespace {

constexpr Real kSplitTol = 1e-10;

// Column k holds the covector attached to bivector slot k.
const CMat6& identification() {
  static const CMat6 m = [] {
    const Complex i(0.0, 1.0);
    CMat6 id = CMat6::Zero();
    const std::array<std::array<int, 2>, 3> planes{{{0, 1}, {2, 3}, {4, 5}}};
    for (int p = 0; p < 3; ++p) {
      id(planes[p][0], p) = 0.5;
      id(planes[p][1], p) = 0.5 * i;
      id(planes[p][0], p + 3) = 0.5;
      id(planes[p][1], p + 3) = -0.5 * i;
    }
    return id;
  }();
  return m;
}

const CMat6& identification_inverse() {
  static const CMat6 m = identification().inverse();
  return m;
}

}  // namespace

CP3Point::CP3Point(const CVec4& coords) : coords_(coords) {
  if (!coords.allFinite() || coords.norm() == 0.0)
    throw Error(ErrorKind::DomainError, "CP^3 point needs a finite nonzero representative");
}

CP3Point CP3Point::normalized() const {
  CVec4 u = coords_ / coords_.norm();
  int lead = 0;
  Real best = 0.0;
  for (int a = 0; a < 4; ++a) best = std::max(best, std::abs(u(a)));
  for (int a = 0; a < 4; ++a)
    if (std::abs(u(a)) >= best - 1e-12) {
      lead = a;
      break;
    }
  u *= std::abs(u(lead)) / u(lead);
  u(lead) = std::abs(u(lead));
  return CP3Point(u);
}

Real projective_distance(const CP3Point& p, const CP3Point& q) {
  const CVec4 a = p.coords() / p.coords().norm();
  const CVec4 b = q.coords() / q.coords().norm();
  const Complex overlap = b.dot(a);  // conj(b) . a
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

ComplexCovector identify(const ComplexBivector& b) { return ComplexCovector{identification() * b.coeffs}; }

ComplexBivector identify_inverse(const ComplexCovector& w) {
  return ComplexBivector{identification_inverse() * w.coeffs};
}

Eigen::Matrix<Complex, 6, 3> holomorphic_subspace(const ACS& acs, EigenSign sign) {
  const Complex lambda(0.0, static_cast<Real>(sign));
  const CMat6 shifted = acs.covector_matrix().cast<Complex>() - lambda * CMat6::Identity();
  Eigen::JacobiSVD<CMat6> svd(shifted, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();  // descending
  if (s(3) > kSplitTol || s(2) < 1e-6)
    throw Error(ErrorKind::DegenerateSubspace, "eigenspace is not 3-dimensional", s(3));
  return svd.matrixV().rightCols<3>();
}

ACS cp3_to_acs(const CP3Point& p, EigenSign sign) {
  const CVec4 u = p.coords() / p.coords().norm();
  Eigen::Matrix<Complex, 6, 4> span;
  for (int j = 0; j < 4; ++j) span.col(j) = identify(wedge_with_basis(u, j)).coeffs;

  Eigen::JacobiSVD<Eigen::Matrix<Complex, 6, 4>> svd(span, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  if (s(3) > kSplitTol * s(0) || s(2) < 1e-6 * s(0))
    throw Error(ErrorKind::DegenerateSubspace, "V_u is not 3-dimensional", s(3));
  const Eigen::Matrix<Complex, 6, 3> w = svd.matrixU().leftCols<3>();

  CMat6 basis;
  basis << w, w.conjugate();
  Eigen::FullPivLU<CMat6> lu(basis);
  if (!lu.isInvertible()) throw Error(ErrorKind::DegenerateSubspace, "W meets its conjugate");

  const Complex lambda(0.0, static_cast<Real>(sign));
  CMat6 diag = CMat6::Zero();
  diag.diagonal() << lambda, lambda, lambda, -lambda, -lambda, -lambda;
  const CMat6 covector_action = basis * diag * lu.inverse();
  const Real imag = covector_action.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-9) throw Error(ErrorKind::DegenerateSubspace, "covector action is not real", imag);
  return ACS::validate(covector_action.real().transpose());
}

CP3Point acs_to_cp3(const ACS& acs, EigenSign sign) {
  const Eigen::Matrix<Complex, 6, 3> w = holomorphic_subspace(acs, sign);
  // rows 4k..4k+3: u ^ beta_k in the exterior cube, one column per u-coordinate
  Eigen::Matrix<Complex, 12, 4> system;
  for (int k = 0; k < 3; ++k) {
    const ComplexBivector beta = identify_inverse(ComplexCovector{w.col(k)});
    for (int m = 0; m < 4; ++m) system.block<4, 1>(4 * k, m) = wedge3(CVec4::Unit(m), beta);
  }
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 12, 4>> svd(system, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(3) > 1e-8 * s(0) || s(2) < 1e-6 * s(0))
    throw Error(ErrorKind::KernelRankError, "kernel of u -> u ^ beta is not one-dimensional", s(3));
  return CP3Point(CVec4(svd.matrixV().col(3))).normalized();
}

TetraCoords tetra_coords(const CP3Point& p) {
  const Real total = p.coords().squaredNorm();
  TetraCoords t;
  for (int a = 0; a < 4; ++a) t.b[a] = std::norm(p.coords()(a)) / total;
  return t;
}

}  // namespace twistor
