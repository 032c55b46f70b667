#pragma once

#include <Eigen/Core>
#include <utility>

namespace lshape::exact {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Fraction-free (Bareiss) elimination. Every division is exact, so the
/// routine suits integer matrices; on rationals it keeps entries as minors.
template <class Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// LU with partial pivoting for real scalars of any precision.
template <class Derived>
typename Derived::Scalar lu_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(pivot, k))) pivot = i;
    if (m(pivot, k) == 0) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Scalar factor = m(i, k) / m(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

/// Leading principal minors d_1..d_n (exact), for positive-definiteness checks.
template <class Derived>
std::vector<typename Derived::Scalar> leading_minors(const Eigen::MatrixBase<Derived>& m) {
  std::vector<typename Derived::Scalar> minors;
  for (Eigen::Index k = 1; k <= m.rows(); ++k)
    minors.push_back(bareiss_determinant(m.topLeftCorner(k, k)));
  return minors;
}

}  // namespace lshape::exact
