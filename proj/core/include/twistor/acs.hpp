#pragma once

#include <array>
#include <cstdint>

#include "twistor/exterior.hpp"
#include "twistor/types.hpp"

namespace twistor {

/// Membership tolerance for the twistor space Z.
inline constexpr Real kMembershipTol = 1e-9;

/// Residuals of the three defining conditions of Z for an arbitrary matrix.
struct MembershipReport {
  Real complex_residual = 0.0;     // max |J^2 + 1|
  Real orthogonal_residual = 0.0;  // max |J^T J - 1|
  int orientation = 0;             // frame-determinant sign, 0 if not computable
  bool orientation_ok = false;

  bool ok(Real tol = kMembershipTol) const {
    return complex_residual <= tol && orthogonal_residual <= tol && orientation_ok;
  }
};

/// A validated orthogonal almost complex structure inducing the reference
/// orientation: a point of the twistor space Z. Stores the vector action, so
/// column i of matrix() is J e_i; the action on covectors is matrix()^T = -J.
class ACS {
 public:
  /// Throws twistor::Error (NotComplex, NotOrthogonal, WrongOrientation).
  static ACS validate(const Mat6& j);

  const Mat6& matrix() const { return j_; }
  Mat6 covector_matrix() const { return j_.transpose(); }
  AlgebraVector operator()(const AlgebraVector& x) const { return AlgebraVector(Vec6(j_ * x.coeffs)); }

  friend bool operator==(const ACS& a, const ACS& b) { return a.j_ == b.j_; }

 private:
  explicit ACS(const Mat6& j) : j_(j) {}
  Mat6 j_;
};

MembershipReport inspect(const Mat6& j);

/// Sign of det[X1 X2 X3 JX1 JX2 JX3] for a J-adapted orthonormal frame built
/// by Gram-Schmidt from the standard basis. Requires J^2 = -1 and J
/// orthogonal to 1e-9; throws DegenerateFrame if no frame is found.
int orientation_sign(const Mat6& j);

/// Same determinant sign for caller-chosen X1, X2, X3. Throws DegenerateFrame
/// when X1, X2, X3, JX1, JX2, JX3 are (numerically) dependent.
int orientation_sign(const Mat6& j, const AlgebraVector& x1, const AlgebraVector& x2, const AlgebraVector& x3);

/// orientation_sign of the vertex structure I0; defines Z. Equals -1.
int reference_orientation();

/// w(X, Y) = g(JX, Y).
TwoForm fundamental_form(const ACS& acs);

/// Inverse of fundamental_form; throws NotInZ when the raised endomorphism
/// fails validation.
ACS acs_from_form(const TwoForm& w);

/// J = (A B; -B^T C) on the split e1..e3 | e4..e6 of the vector-action matrix.
struct Blocks {
  Mat3 a = Mat3::Zero();
  Mat3 b = Mat3::Zero();
  Mat3 c = Mat3::Zero();

  /// (a1, a2, a3) = (A12, A13, A23).
  Vec3 a_vec() const { return {a(0, 1), a(0, 2), a(1, 2)}; }
  /// (c1, c2, c3) = (C12, C13, C23).
  Vec3 c_vec() const { return {c(0, 1), c(0, 2), c(1, 2)}; }
  /// b1..b9 row-major.
  std::array<Real, 9> b_entries() const;

  Mat6 reassemble() const;
};

Blocks blocks(const ACS& acs);

/// Residuals of the J^2 = -1 consequences, in order:
///   [0..5]  unit-norm equations: rows of (A B) and rows of (-B^T C),
///   [6..14] the nine cross orthogonality equations,
///   [15]    |a|^2 - |c|^2.
std::array<Real, 16> constraint_residuals(const Blocks& b);

/// Haar-uniform rotation of SO(6) conjugating the vertex structure I0; the
/// same seed always yields the same structure.
ACS random_acs(std::uint64_t seed);

/// Q J Q^T for Q in SO(6).
ACS conjugate(const ACS& acs, const Mat6& q);

/// diag(O1, O2).
Mat6 block_rotation(const Mat3& o1, const Mat3& o2);

/// Fixture structures. vertex_structure(k) is the tetrahedron vertex I_k,
/// k = 0..3, with fundamental form w_k.
ACS vertex_structure(int k);
TwoForm vertex_form(int k);
/// Integrable structure of the Hopf fibration: e1 -> e4, e2 -> e3, e5 -> e6.
ACS hopf_structure();
/// The factor-swapping maximiser I_N: J e_i = -e_{i+3}, J e_{i+3} = e_i.
ACS ank_structure();

}  // namespace twistor
