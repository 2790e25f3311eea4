#pragma once

#include <array>

#include "twistor/acs.hpp"
#include "twistor/exterior.hpp"

namespace twistor {

/// Homogeneous point [u0, u1, u2, u3] of CP^3. Two points are the same when
/// they differ by a nonzero complex scale.
class CP3Point {
 public:
  /// Throws DomainError when all coordinates vanish.
  explicit CP3Point(const CVec4& coords);
  CP3Point(Complex u0, Complex u1, Complex u2, Complex u3) : CP3Point(CVec4(u0, u1, u2, u3)) {}

  const CVec4& coords() const { return coords_; }

  /// Unit norm, with the largest-modulus coordinate real positive (ties go
  /// to the lowest index).
  CP3Point normalized() const;

 private:
  CVec4 coords_;
};

/// Chordal distance min_phi | p/|p| - e^{i phi} q/|q| |; zero iff p == q in CP^3.
Real projective_distance(const CP3Point& p, const CP3Point& q);
inline bool equivalent(const CP3Point& p, const CP3Point& q, Real tol = 1e-9) {
  return projective_distance(p, q) < tol;
}

/// Which eigenvalue of the covector action marks the (1,0) subspace. Plus is
/// the working convention; Minus exists to run negative controls.
enum class EigenSign { Plus = 1, Minus = -1 };

/// Complex-linear map fixed by 2 v0^v1 = e^1 + i e^2, 2 v2^v3 = e^1 - i e^2,
/// 2 v0^v2 = e^3 + i e^4, 2 v3^v1 = e^3 - i e^4, 2 v0^v3 = e^5 + i e^6,
/// 2 v1^v2 = e^5 - i e^6.
ComplexCovector identify(const ComplexBivector& b);
ComplexBivector identify_inverse(const ComplexCovector& w);

/// Basis (columns, orthonormal) of the subspace of complex covectors on which
/// the covector action J^T acts as +i (or -i for EigenSign::Minus).
Eigen::Matrix<Complex, 6, 3> holomorphic_subspace(const ACS& acs, EigenSign sign = EigenSign::Plus);

/// The structure whose (1,0) covectors are identify(V_u), V_u = {u ^ v}.
/// Throws DegenerateSubspace if the image does not split g* (x) C.
ACS cp3_to_acs(const CP3Point& p, EigenSign sign = EigenSign::Plus);

/// Inverse of cp3_to_acs: recovers [u] as the kernel of beta -> u ^ beta over
/// the pulled-back (1,0) subspace. The result is normalized(). Throws
/// KernelRankError if that kernel is not one-dimensional.
CP3Point acs_to_cp3(const ACS& acs, EigenSign sign = EigenSign::Plus);

/// Barycentric position b_a = |u_a|^2 / sum |u_b|^2 in the tetrahedron whose
/// vertices are the four coordinate points.
struct TetraCoords {
  std::array<Real, 4> b{};
};

TetraCoords tetra_coords(const CP3Point& p);

}  // namespace twistor
