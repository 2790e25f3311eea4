#include "twistor/exterior.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotComplex: return "NotComplex";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::WrongOrientation: return "WrongOrientation";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::NotInZ: return "NotInZ";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotRotation: return "NotRotation";
    case ErrorKind::DegenerateSubspace: return "DegenerateSubspace";
    case ErrorKind::KernelRankError: return "KernelRankError";
    case ErrorKind::ZeroCombination: return "ZeroCombination";
    case ErrorKind::ParamDomain: return "ParamDomain";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

std::pair<int, int> index_pair(int k) {
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (pair_index(i, j) == k) return {i, j};
    }
  }
  return {-1, -1};
}

TwoForm TwoForm::from_matrix(const Mat6& w) {
  TwoForm out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) out.coeffs_[pair_index(i, j)] = w(i, j);
  return out;
}

TwoForm TwoForm::basis(int i, int j) {
  TwoForm out;
  out.set(i - 1, j - 1, 1.0);
  return out;
}

Real TwoForm::operator()(int i, int j) const {
  if (i == j) return 0.0;
  return i < j ? coeffs_[pair_index(i, j)] : -coeffs_[pair_index(j, i)];
}

void TwoForm::set(int i, int j, Real value) {
  if (i == j) return;
  if (i < j)
    coeffs_[pair_index(i, j)] = value;
  else
    coeffs_[pair_index(j, i)] = -value;
}

Mat6 TwoForm::matrix() const {
  Mat6 w = Mat6::Zero();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      w(i, j) = coeffs_[pair_index(i, j)];
      w(j, i) = -w(i, j);
    }
  return w;
}

Real TwoForm::max_abs() const {
  Real m = 0.0;
  for (Real c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  for (int k = 0; k < kFormDim; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
  for (int k = 0; k < kFormDim; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TwoForm& TwoForm::operator*=(Real s) {
  for (Real& c : coeffs_) c *= s;
  return *this;
}

TwoForm wedge(const Covector& a, const Covector& b) {
  TwoForm out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) out.set(i, j, a[i] * b[j] - a[j] * b[i]);
  return out;
}

Real form_inner(const TwoForm& a, const TwoForm& b) {
  Real s = 0.0;
  for (int k = 0; k < kFormDim; ++k) s += a.coeffs()[k] * b.coeffs()[k];
  return s;
}

Real eval_form(const TwoForm& w, const AlgebraVector& x, const AlgebraVector& y) {
  return x.coeffs.dot(w.matrix() * y.coeffs);
}

std::array<Real, kFormDim> wedge_square(const TwoForm& w) {
  // (w^w)_{ijkl} = 2 (w_ij w_kl - w_ik w_jl + w_il w_jk)
  std::array<Real, kFormDim> out{};
  int n = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l)
          out[n++] = 2.0 * (w(i, j) * w(k, l) - w(i, k) * w(j, l) + w(i, l) * w(j, k));
  return out;
}

namespace {

// Ordered pairs behind the six ComplexBivector slots.
constexpr std::array<std::pair<int, int>, 6> kBivectorPairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

}  // namespace

BivectorSlot bivector_slot(int a, int b) {
  if (a == b) return {0, 0};
  for (int s = 0; s < 6; ++s) {
    if (kBivectorPairs[s] == std::pair{a, b}) return {s, 1};
    if (kBivectorPairs[s] == std::pair{b, a}) return {s, -1};
  }
  return {0, 0};
}

ComplexBivector ComplexBivector::basis(int a, int b) {
  ComplexBivector out;
  const BivectorSlot s = bivector_slot(a, b);
  if (s.sign != 0) out.coeffs(s.slot) = Real(s.sign);
  return out;
}

ComplexBivector wedge_with_basis(const CVec4& u, int j) {
  ComplexBivector out;
  for (int a = 0; a < 4; ++a) {
    const BivectorSlot s = bivector_slot(a, j);
    if (s.sign != 0) out.coeffs(s.slot) += Real(s.sign) * u(a);
  }
  return out;
}

CVec4 wedge3(const CVec4& u, const ComplexBivector& beta) {
  // v^m ^ v^a ^ v^b lands on the slot omitting the remaining index, with the
  // sign of the permutation sorting (m, a, b).
  CVec4 out = CVec4::Zero();
  for (int s = 0; s < 6; ++s) {
    const auto [a, b] = kBivectorPairs[s];
    for (int m = 0; m < 4; ++m) {
      if (m == a || m == b) continue;
      std::array<int, 3> idx{m, a, b};
      int sign = 1;
      for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q)
          if (idx[p] > idx[q]) sign = -sign;
      const int omitted = 6 - m - a - b;
      out(omitted) += Real(sign) * u(m) * beta.coeffs(s);
    }
  }
  return out;
}

}  // namespace twistor
