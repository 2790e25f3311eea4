#include "twistor/nearly_kaehler.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/algebra.hpp"
#include "twistor/error.hpp"

namespace twistor {

Real nabla_omega(const ACS& acs, const AlgebraVector& x, const AlgebraVector& y, const AlgebraVector& z) {
  // left-invariance kills X(w(Y, Z)); what remains is -w(nabla_X Y, Z) - w(Y, nabla_X Z)
  const TwoForm w = fundamental_form(acs);
  return -eval_form(w, nabla(x, y), z) - eval_form(w, y, nabla(x, z));
}

namespace {

// d[x][y][z] = (nabla_{e_x} w)(e_y, e_z)
using Table = std::array<std::array<std::array<Real, 6>, 6>, 6>;

Table derivative_table(const ACS& acs) {
  Table d{};
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z = 0; z < 6; ++z)
        d[x][y][z] = nabla_omega(acs, AlgebraVector::basis(x + 1), AlgebraVector::basis(y + 1),
                                 AlgebraVector::basis(z + 1));
  return d;
}

}  // namespace

Real nk_defect(const ACS& acs) {
  const Table d = derivative_table(acs);
  Real s = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        const Real v = d[i][j][k] + d[j][i][k];
        s += v * v;
      }
  return std::sqrt(s);
}

Real nk_basis_diagonal_residual(const ACS& acs) {
  const Table d = derivative_table(acs);
  Real worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) worst = std::max(worst, std::abs(d[i][i][j]));
  return worst;
}

bool is_ank(const ACS& acs, Real tol) {
  const Blocks b = blocks(acs);
  return b.a.norm() < tol && b.c.norm() < tol;
}

ANKForm ANKForm::from_rotation(const Mat3& o) {
  ANKForm out;
  for (int i = 0; i < 3; ++i) {
    Vec6 c = Vec6::Zero();
    c.head<3>() = o.col(i);
    out.f[i] = Covector(c);
  }
  return out;
}

ACS ank_form(const ANKForm& form) {
  Mat3 frame;
  for (int i = 0; i < 3; ++i) {
    const Vec6& c = form.f[i].coeffs;
    const Real outside = c.tail<3>().cwiseAbs().maxCoeff();
    if (outside > 1e-9) throw Error(ErrorKind::NotOrthonormal, "f^i leaves span(e^1, e^2, e^3)", outside);
    frame.col(i) = c.head<3>();
  }
  const Real orth = (frame.transpose() * frame - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (orth > 1e-9) throw Error(ErrorKind::NotOrthonormal, "f^i are not orthonormal", orth);

  TwoForm w;
  for (int i = 0; i < 3; ++i) w += wedge(Covector::basis(4 + i), form.f[i]);
  const Mat6 j = w.matrix().transpose();
  try {
    return ACS::validate(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::WrongOrientation) throw;
    throw Error(ErrorKind::NotInZ, e.what(), e.residual());
  }
}

}  // namespace twistor
