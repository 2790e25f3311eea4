#pragma once

#include <array>

#include "twistor/types.hpp"

namespace twistor {

/// Structure constants c^k_ij of su(2)+su(2): [e_i, e_j] = sum_k c^k_ij e_k.
/// Indices are 0-based in code; e_1..e_3 span the first factor.
class StructureConstants {
 public:
  /// The compiled-in table: [e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e1 and the
  /// same on e4..e6; the two factors commute.
  static const StructureConstants& su2_su2();

  Real operator()(int k, int i, int j) const { return table_[k][i][j]; }

  /// Max-abs Jacobi residual over all basis triples.
  Real jacobi_residual() const;

 private:
  StructureConstants();
  std::array<std::array<std::array<Real, 6>, 6>, 6> table_{};
};

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y);

/// Working metric: e_1..e_6 orthonormal. The Killing-type form of the two
/// factors is twice this.
Real metric(const AlgebraVector& x, const AlgebraVector& y);

/// Levi-Civita connection of the bi-invariant metric on left-invariant
/// fields: nabla_X Y = [X, Y] / 2.
AlgebraVector nabla(const AlgebraVector& x, const AlgebraVector& y);

/// Matrix of ad_X acting on coordinate columns.
Mat6 ad_matrix(const AlgebraVector& x);

}  // namespace twistor
