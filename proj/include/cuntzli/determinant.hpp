#pragma once

#include "cuntzli/scalars.hpp"

namespace cuntzli {

/// Exact determinant by fraction-free Bareiss elimination.
///
/// One-step Bareiss: every division is exact (the quotient is itself a minor
/// of the input), so the routine works for any exact integral scalar and never
/// leaves the integers. O(k^3) scalar operations with minor-bounded growth.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (!is_square(m)) throw DimensionError("det: matrix must be square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> w = m;
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    Index p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      w.row(p).swap(w.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = Scalar(0);
    }
    prev = w(k, k);
  }
  Scalar result = w(n - 1, n - 1);
  return negate ? Scalar(-result) : result;
}

/// True iff |det(m)| = 1, i.e. m is invertible over the integers.
template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (!is_square(m)) throw DimensionError("is_unimodular: matrix must be square");
  const Scalar d = det(m);
  return d == Scalar(1) || d == Scalar(-1);
}

}  // namespace cuntzli
