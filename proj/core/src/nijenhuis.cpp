#include "twistor/nijenhuis.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/algebra.hpp"
#include "twistor/error.hpp"

namespace twistor {

Real NijenhuisComponents::squared_norm() const {
  Real s = 0.0;
  for (const auto& row : values_)
    for (const Vec6& v : row) s += v.squaredNorm();
  return s;
}

NijenhuisComponents nijenhuis(const ACS& acs) {
  const Mat6& j = acs.matrix();
  NijenhuisComponents out;
  std::array<AlgebraVector, 6> e, je;
  for (int i = 0; i < 6; ++i) {
    e[i] = AlgebraVector::basis(i + 1);
    je[i] = acs(e[i]);
  }
  for (int i = 0; i < 6; ++i) {
    out.values_[i][i].setZero();
    for (int k = i + 1; k < 6; ++k) {
      const Vec6 n = bracket(je[i], je[k]).coeffs - bracket(e[i], e[k]).coeffs -
                     j * bracket(e[i], je[k]).coeffs - j * bracket(je[i], e[k]).coeffs;
      out.values_[i][k] = n;
      out.values_[k][i] = -n;
    }
  }
  return out;
}

Real nijenhuis_norm_squared(const ACS& acs) { return nijenhuis(acs).squared_norm(); }

Real nijenhuis_norm(const ACS& acs) { return std::sqrt(nijenhuis_norm_squared(acs)); }

Real calibrated_kappa() {
  static const Real kappa = nijenhuis_norm_squared(ank_structure());
  return kappa;
}

Real calibrated_max_norm() { return std::sqrt(calibrated_kappa()); }

Real reference_max_norm() { return 8.0 * std::sqrt(3.0); }

Real closed_form_norm(const Blocks& b) {
  const Real rest = 1.0 - b.c_vec().squaredNorm();
  if (rest < -1e-9) throw Error(ErrorKind::DomainError, "|c| > 1", -rest);
  return std::sqrt(calibrated_kappa()) * std::sqrt(std::max(rest, 0.0));
}

Mat3 cofactor_matrix(const Mat3& m) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      const int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      // cyclic index choice absorbs the (-1)^(r+c) sign
      out(r, c) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return out;
}

Real CofactorResiduals::max() const {
  return std::max({gram, trace_identity.value_or(0.0), eigen_identity});
}

CofactorResiduals cofactor_checks(const Blocks& b, Real det_tol) {
  CofactorResiduals out;
  const Mat3 gram = b.b.transpose() * b.b;
  const Mat3 shifted = Mat3::Identity() + b.c * b.c;
  out.gram = (gram - shifted).cwiseAbs().maxCoeff();

  out.cofactor_norm_sq = cofactor_matrix(b.b).squaredNorm();
  out.det_b = b.b.determinant();
  if (std::abs(out.det_b) > det_tol) {
    out.trace_identity = std::abs(out.cofactor_norm_sq - out.det_b * out.det_b * gram.inverse().trace());
  }

  Eigen::SelfAdjointEigenSolver<Mat3> eig(shifted, Eigen::EigenvaluesOnly);
  const Vec3 l = eig.eigenvalues();
  out.eigen_identity = std::abs(out.cofactor_norm_sq - (l(0) * l(1) + l(1) * l(2) + l(0) * l(2)));
  return out;
}

bool is_integrable(const ACS& acs, Real tol) { return nijenhuis_norm(acs) < tol; }

namespace {

void require_rotation(const Mat3& o, const char* name) {
  const Real orth = (o.transpose() * o - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (!(orth <= 1e-9)) throw Error(ErrorKind::NotRotation, std::string(name) + " is not orthogonal", orth);
  if (!(o.determinant() > 0.0)) throw Error(ErrorKind::NotRotation, std::string(name) + " has det < 0", 2.0);
}

}  // namespace

ACS statement1_structure(const Mat3& o1, const Mat3& o2) {
  require_rotation(o1, "O1");
  require_rotation(o2, "O2");
  return conjugate(hopf_structure(), block_rotation(o1, o2));
}

}  // namespace twistor
