#pragma once

#include <cstdint>
#include <random>

#include "twistor/types.hpp"

namespace twistor {

using Rng = std::mt19937_64;

/// Deterministic generator for (seed, stream): independent streams for
/// restarts or sample indices without shared state.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-uniform rotation in SO(n) via QR of a Gaussian matrix, with the R
/// diagonal sign fix and a final determinant correction.
template <int N>
Eigen::Matrix<Real, N, N> random_rotation(Rng& rng) {
  std::normal_distribution<Real> gauss(0.0, 1.0);
  Eigen::Matrix<Real, N, N> z;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) z(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::Matrix<Real, N, N>> qr(z);
  Eigen::Matrix<Real, N, N> q = qr.householderQ();
  const Eigen::Matrix<Real, N, N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int i = 0; i < N; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

/// Uniform point on the unit sphere S^2.
Vec3 random_unit3(Rng& rng);

}  // namespace twistor
