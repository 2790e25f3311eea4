#include "twistor/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace twistor {

StructureConstants::StructureConstants() {
  auto set = [this](int i, int j, int k, Real v) {
    table_[k][i][j] = v;
    table_[k][j][i] = -v;
  };
  for (int o : {0, 3}) {
    set(o + 0, o + 1, o + 2, 1.0);
    set(o + 0, o + 2, o + 1, -1.0);
    set(o + 1, o + 2, o + 0, 1.0);
  }
}

const StructureConstants& StructureConstants::su2_su2() {
  static const StructureConstants table;
  return table;
}

Real StructureConstants::jacobi_residual() const {
  const auto& c = *this;
  Real worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        for (int m = 0; m < 6; ++m) {
          // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], component m
          Real s = 0.0;
          for (int l = 0; l < 6; ++l)
            s += c(l, i, j) * c(m, l, k) + c(l, j, k) * c(m, l, i) + c(l, k, i) * c(m, l, j);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) {
  const auto& c = StructureConstants::su2_su2();
  AlgebraVector out;
  for (int k = 0; k < 6; ++k) {
    Real s = 0.0;
    for (int i = 0; i < 6; ++i) {
      if (x[i] == 0.0) continue;
      for (int j = 0; j < 6; ++j) s += c(k, i, j) * x[i] * y[j];
    }
    out.coeffs(k) = s;
  }
  return out;
}

Real metric(const AlgebraVector& x, const AlgebraVector& y) { return x.coeffs.dot(y.coeffs); }

AlgebraVector nabla(const AlgebraVector& x, const AlgebraVector& y) { return 0.5 * bracket(x, y); }

Mat6 ad_matrix(const AlgebraVector& x) {
  Mat6 m;
  for (int j = 0; j < 6; ++j) m.col(j) = bracket(x, AlgebraVector::basis(j + 1)).coeffs;
  return m;
}

}  // namespace twistor
