#pragma once

#include <complex>

#include <Eigen/Dense>

namespace twistor {

using Real = double;
using Complex = std::complex<double>;

using Vec3 = Eigen::Matrix<Real, 3, 1>;
using Vec4 = Eigen::Matrix<Real, 4, 1>;
using Vec6 = Eigen::Matrix<Real, 6, 1>;
using Mat3 = Eigen::Matrix<Real, 3, 3>;
using Mat6 = Eigen::Matrix<Real, 6, 6>;
using CVec4 = Eigen::Matrix<Complex, 4, 1>;
using CVec6 = Eigen::Matrix<Complex, 6, 1>;
using CMat4 = Eigen::Matrix<Complex, 4, 4>;
using CMat6 = Eigen::Matrix<Complex, 6, 6>;

namespace detail {

// Six real coordinates tagged by what they are coordinates of, so that a
// vector cannot be passed where a covector is expected.
template <class Tag>
struct Coords6 {
  Vec6 coeffs = Vec6::Zero();

  Coords6() = default;
  explicit Coords6(const Vec6& c) : coeffs(c) {}
  Coords6(Real c1, Real c2, Real c3, Real c4, Real c5, Real c6) {
    coeffs << c1, c2, c3, c4, c5, c6;
  }

  /// Basis element with 1-based index, matching e_1..e_6.
  static Coords6 basis(int i) {
    Coords6 out;
    out.coeffs(i - 1) = 1.0;
    return out;
  }

  Real operator[](int i) const { return coeffs(i); }

  friend Coords6 operator+(const Coords6& a, const Coords6& b) { return Coords6(Vec6(a.coeffs + b.coeffs)); }
  friend Coords6 operator-(const Coords6& a, const Coords6& b) { return Coords6(Vec6(a.coeffs - b.coeffs)); }
  friend Coords6 operator-(const Coords6& a) { return Coords6(Vec6(-a.coeffs)); }
  friend Coords6 operator*(Real s, const Coords6& a) { return Coords6(Vec6(s * a.coeffs)); }
  friend bool operator==(const Coords6& a, const Coords6& b) { return a.coeffs == b.coeffs; }
};

struct VectorTag {};
struct CovectorTag {};

}  // namespace detail

/// Element of su(2)+su(2) in the basis e_1..e_6 (e_1..e_3 first factor).
using AlgebraVector = detail::Coords6<detail::VectorTag>;
/// Element of the dual space in the basis e^1..e^6.
using Covector = detail::Coords6<detail::CovectorTag>;

inline Real pair(const Covector& a, const AlgebraVector& x) { return a.coeffs.dot(x.coeffs); }

}  // namespace twistor
