#pragma once

#include "cuntzli/determinant.hpp"
#include "cuntzli/scalars.hpp"
#include "cuntzli/subsets.hpp"

namespace cuntzli {

namespace detail {

template <typename Derived>
Int minor_det(const Eigen::MatrixBase<Derived>& a, const Subset& rows, const Subset& cols) {
  const Index n = static_cast<Index>(rows.size());
  IntMatrix sub(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      sub(i, j) = a(rows[static_cast<size_t>(i)] - 1, cols[static_cast<size_t>(j)] - 1);
  return det(sub);
}

template <typename Derived>
int checked_dimension(const Eigen::MatrixBase<Derived>& a, int n, const char* who) {
  if (!is_square(a)) throw DimensionError(std::string(who) + ": matrix must be square");
  const int d = static_cast<int>(a.rows());
  if (n < 0 || n > d) throw DomainError(std::string(who) + ": require 0 <= n <= d");
  return d;
}

}  // namespace detail

/// n-th exterior power (compound matrix) of a d x d matrix over the lex basis
/// of n-subsets: entry (J, K) is the minor det(a[J, K]). Degree 0 gives [1],
/// degree 1 gives a, degree d gives [det(a)].
template <typename Derived>
IntMatrix exterior_power(const Eigen::MatrixBase<Derived>& a, int n) {
  const int d = detail::checked_dimension(a, n, "exterior_power");
  const SubsetBasis basis = subset_basis(d, n);
  const Index m = basis.size();
  IntMatrix out(m, m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c)
      out(r, c) = detail::minor_det(a, basis.subsets[static_cast<size_t>(r)],
                                    basis.subsets[static_cast<size_t>(c)]);
  return out;
}

/// Complement-minor matrix C_n: entry (K, L) is det(a[K', L']) over the lex
/// basis of n-subsets, K' the increasing complement. C_d = [1].
template <typename Derived>
IntMatrix complement_matrix(const Eigen::MatrixBase<Derived>& a, int n) {
  const int d = detail::checked_dimension(a, n, "complement_matrix");
  const SubsetBasis basis = subset_basis(d, n);
  const Index m = basis.size();
  std::vector<Subset> complements(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i)
    complements[static_cast<size_t>(i)] = complement_of(basis.subsets[static_cast<size_t>(i)], d);
  IntMatrix out(m, m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c)
      out(r, c) = detail::minor_det(a, complements[static_cast<size_t>(r)],
                                    complements[static_cast<size_t>(c)]);
  return out;
}

/// Signed complement-minor matrix: entry (K, L) is
/// sign(tau_K) sign(tau_L) det(a[K', L']).
template <typename Derived>
IntMatrix b_tilde_matrix(const Eigen::MatrixBase<Derived>& a, int n) {
  const int d = detail::checked_dimension(a, n, "b_tilde_matrix");
  const SubsetBasis basis = subset_basis(d, n);
  const Index m = basis.size();
  IntMatrix out = complement_matrix(a, n);
  std::vector<int> signs(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i)
    signs[static_cast<size_t>(i)] = subset_sign(basis.subsets[static_cast<size_t>(i)], d);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c)
      if (signs[static_cast<size_t>(r)] * signs[static_cast<size_t>(c)] < 0) out(r, c) = -out(r, c);
  return out;
}

/// B_n = sign(det(a)) * b_tilde_matrix(a, n). Requires det(a) != 0.
template <typename Derived>
IntMatrix b_matrix(const Eigen::MatrixBase<Derived>& a, int n) {
  detail::checked_dimension(a, n, "b_matrix");
  const Int d = det(a);
  if (d == 0) throw SingularMatrixError("b_matrix: matrix is singular");
  IntMatrix out = b_tilde_matrix(a, n);
  if (d < 0) out = -out;
  return out;
}

/// Complementation map U_n: Lambda^n -> Lambda^(d-n), e_I -> e_I'. The 0/1
/// matrix has rows indexed by the lex basis of (d-n)-subsets and columns by
/// the lex basis of n-subsets; it is a permutation matrix after identifying
/// the two index families by complementation, so its inverse is its transpose.
inline IntMatrix hodge_matrix(int d, int n) {
  if (d < 0 || n < 0 || n > d) throw DomainError("hodge_matrix: require 0 <= n <= d");
  const SubsetBasis domain = subset_basis(d, n);
  const SubsetBasis codomain = subset_basis(d, d - n);
  IntMatrix out = IntMatrix::Zero(codomain.size(), domain.size());
  for (Index c = 0; c < domain.size(); ++c) {
    const Index r = codomain.index_of(complement_of(domain.subsets[static_cast<size_t>(c)], d));
    out(r, c) = 1;
  }
  return out;
}

}  // namespace cuntzli
