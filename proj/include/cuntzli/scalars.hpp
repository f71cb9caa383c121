#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cuntzli {

// Exact scalars. No fixed-width arithmetic anywhere in the computation path;
// entries of exterior powers are n x n determinants and overflow 64 bits fast.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int sign_of(const Int& x) { return x.sign(); }

/// Exact entrywise equality (Eigen's operator== is coefficient-wise).
template <typename DerivedA, typename DerivedB>
bool same_matrix(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Derived>
bool is_square(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols();
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  for (int i = 0; i < std::min(k, n - k); ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

}  // namespace cuntzli
