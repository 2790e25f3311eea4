#pragma once

#include <array>
#include <utility>

#include "twistor/types.hpp"

namespace twistor {

/// Number of basis 2-forms e^i ^ e^j, i < j, on a 6-dimensional space.
inline constexpr int kFormDim = 15;

/// Position of e^i ^ e^j (0-based i < j) in the lexicographic 15-slot layout.
constexpr int pair_index(int i, int j) {
  // rows of the strict upper triangle: 5 + 4 + ... entries
  return i * (11 - i) / 2 + (j - i - 1);
}

/// Inverse of pair_index.
std::pair<int, int> index_pair(int k);

/// Real 2-form on the algebra, stored as the 15 coefficients w_ij, i < j.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(const std::array<Real, kFormDim>& c) : coeffs_(c) {}

  /// Build from an antisymmetric matrix W with W(i,j) = w(e_i, e_j). Only the
  /// strict upper triangle is read.
  static TwoForm from_matrix(const Mat6& w);
  /// 1-based basis form e^i ^ e^j; i > j gives the negated basis form.
  static TwoForm basis(int i, int j);

  /// Coefficient of e^i ^ e^j for 0-based indices; antisymmetric, zero on the diagonal.
  Real operator()(int i, int j) const;
  void set(int i, int j, Real value);

  /// Antisymmetric matrix W with W(i,j) = w(e_i, e_j).
  Mat6 matrix() const;

  const std::array<Real, kFormDim>& coeffs() const { return coeffs_; }
  Real max_abs() const;

  TwoForm& operator+=(const TwoForm& o);
  TwoForm& operator-=(const TwoForm& o);
  TwoForm& operator*=(Real s);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator-(TwoForm a) { return a *= -1.0; }
  friend TwoForm operator*(Real s, TwoForm a) { return a *= s; }
  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  std::array<Real, kFormDim> coeffs_{};
};

/// Exterior product (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X).
TwoForm wedge(const Covector& a, const Covector& b);

/// Sum over i < j of a_ij b_ij; the basis e^i ^ e^j is orthonormal.
Real form_inner(const TwoForm& a, const TwoForm& b);

/// w(X, Y).
Real eval_form(const TwoForm& w, const AlgebraVector& x, const AlgebraVector& y);

/// The 15 coefficients of w ^ w over e^i^e^j^e^k^e^l, i < j < k < l, in
/// lexicographic order. All vanish iff w is decomposable.
std::array<Real, kFormDim> wedge_square(const TwoForm& w);

/// Complex element of the dual space tensored with C, e.g. e^1 + i e^2.
struct ComplexCovector {
  CVec6 coeffs = CVec6::Zero();

  Covector real() const { return Covector(Vec6(coeffs.real())); }
  Covector imag() const { return Covector(Vec6(coeffs.imag())); }
};

/// Element of the exterior square of C^4 over the fixed basis
///   v0^v1, v0^v2, v0^v3, v2^v3, v3^v1, v1^v2.
struct ComplexBivector {
  CVec6 coeffs = CVec6::Zero();

  /// Coefficient representation of v^a ^ v^b for a != b (0-based), with sign.
  static ComplexBivector basis(int a, int b);
};

/// Slot and sign of v^a ^ v^b in the ComplexBivector basis; sign is 0 when a == b.
struct BivectorSlot {
  int slot;
  int sign;
};
BivectorSlot bivector_slot(int a, int b);

/// u ^ v^j for u in C^4 and basis vector v^j.
ComplexBivector wedge_with_basis(const CVec4& u, int j);

/// The 4 coordinates of u ^ beta in the exterior cube of C^4, over the basis
/// v1^v2^v3, v0^v2^v3, v0^v1^v3, v0^v1^v2 (each omitting one index).
CVec4 wedge3(const CVec4& u, const ComplexBivector& beta);

}  // namespace twistor
