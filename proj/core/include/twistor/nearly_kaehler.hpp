#pragma once

#include <array>

#include "twistor/acs.hpp"

namespace twistor {

/// (nabla_X w)(Y, Z) for the fundamental form w of `acs`, using the
/// bi-invariant connection nabla_X = [X, .] / 2 on left-invariant fields.
Real nabla_omega(const ACS& acs, const AlgebraVector& x, const AlgebraVector& y, const AlgebraVector& z);

/// Norm of the symmetrised derivative S(X, Y; Z) = (nabla_X w)(Y, Z) + (nabla_Y w)(X, Z)
/// over all basis triples. Zero iff the pair (g, J) is nearly Kaehler.
Real nk_defect(const ACS& acs);

/// Largest |(nabla_{e_i} w)(e_i, e_j)| over all i, j.
Real nk_basis_diagonal_residual(const ACS& acs);

inline constexpr Real kAnkTol = 1e-9;

/// True iff J swaps the two su(2) factors: |A| < tol and |C| < tol.
bool is_ank(const ACS& acs, Real tol = kAnkTol);

/// Three covectors in span(e^1, e^2, e^3) describing the form
/// e^4 ^ f^1 + e^5 ^ f^2 + e^6 ^ f^3 of a factor-swapping structure.
struct ANKForm {
  std::array<Covector, 3> f;

  /// f^i = sum_k O(k, i) e^k, i.e. the columns of O.
  static ANKForm from_rotation(const Mat3& o);
};

/// The structure whose fundamental form is e^4^f^1 + e^5^f^2 + e^6^f^3.
/// Throws NotOrthonormal when {f^i} is not an orthonormal triple in
/// span(e^1, e^2, e^3), WrongOrientation when the triple has the wrong
/// handedness (no sign is flipped silently), NotInZ otherwise.
ACS ank_form(const ANKForm& f);

}  // namespace twistor
