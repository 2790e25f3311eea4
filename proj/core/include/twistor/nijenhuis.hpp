#pragma once

#include <array>
#include <optional>

#include "twistor/acs.hpp"

namespace twistor {

/// N(e_i, e_j) for all ordered basis pairs; N^k_ij = (*this)(k, i, j).
class NijenhuisComponents {
 public:
  Real operator()(int k, int i, int j) const { return values_[i][j](k); }
  const Vec6& pair(int i, int j) const { return values_[i][j]; }

  /// Sum over all ordered (i, j, k) of (N^k_ij)^2.
  Real squared_norm() const;

 private:
  friend NijenhuisComponents nijenhuis(const ACS&);
  std::array<std::array<Vec6, 6>, 6> values_{};
};

/// N(X, Y) = [JX, JY] - [X, Y] - J[X, JY] - J[JX, Y] on basis pairs.
NijenhuisComponents nijenhuis(const ACS& acs);

/// sqrt of the ordered-index sum of squared components.
Real nijenhuis_norm(const ACS& acs);
/// The same sum without the square root; the search objective.
Real nijenhuis_norm_squared(const ACS& acs);

/// kappa = nijenhuis_norm(I_N)^2, computed once from the direct tensor.
Real calibrated_kappa();
/// sqrt(kappa): the maximum of the norm on Z.
Real calibrated_max_norm();
/// The literal constant reported for comparison, 8 sqrt(3).
Real reference_max_norm();

/// sqrt(kappa) sqrt(1 - |c|^2). Throws DomainError if 1 - |c|^2 < -1e-9.
Real closed_form_norm(const Blocks& b);

struct CofactorResiduals {
  /// max |B^T B - (1 + C^2)|.
  Real gram = 0.0;
  /// | |adj B|^2 - det(B)^2 tr((B^T B)^{-1}) |; empty when det B vanishes.
  std::optional<Real> trace_identity;
  /// | |adj B|^2 - (l1 l2 + l2 l3 + l1 l3) | for eigenvalues l_i of 1 + C^2.
  Real eigen_identity = 0.0;
  /// |adj B|^2, the squared Frobenius norm of the cofactor matrix.
  Real cofactor_norm_sq = 0.0;
  Real det_b = 0.0;

  Real max() const;
};

/// Residuals of the cofactor identity chain for the blocks of a valid ACS.
CofactorResiduals cofactor_checks(const Blocks& b, Real det_tol = 1e-9);

/// Matrix of algebraic complements: entry (r, c) is (-1)^(r+c) times the
/// complementary minor.
Mat3 cofactor_matrix(const Mat3& m);

inline constexpr Real kIntegrableTol = 1e-9;

bool is_integrable(const ACS& acs, Real tol = kIntegrableTol);

/// diag(O1, O2) I_H diag(O1, O2)^T. Throws NotRotation unless both are in
/// SO(3) to 1e-9.
ACS statement1_structure(const Mat3& o1, const Mat3& o2);

}  // namespace twistor
