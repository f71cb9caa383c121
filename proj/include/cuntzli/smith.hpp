#pragma once

#include "cuntzli/determinant.hpp"
#include "cuntzli/scalars.hpp"

#include <vector>

namespace cuntzli {

/// Smith normal form u * m * v = s with unimodular u, v.
///
/// s is diagonal with nonnegative entries, each nonzero entry divides the
/// next, zeros last. invariant_factors is the diagonal of s.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  std::vector<Int> invariant_factors;
};

namespace detail {

// First entry of minimal nonzero absolute value in the trailing submatrix
// starting at (t, t), row-major scan, first minimum wins. Returns false if
// the submatrix is zero.
inline bool find_pivot(const IntMatrix& s, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best;
  for (Index i = t; i < s.rows(); ++i) {
    for (Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace detail

/// Smith normal form of an arbitrary rectangular integer matrix.
///
/// Pivot strategy: the nonzero entry of smallest absolute value in the working
/// submatrix (row-major scan, first minimum wins), which keeps coefficient
/// growth in check and makes the output deterministic. Reduction alternates
/// truncated-division row/column clearing with pivot re-selection; the pivot's
/// absolute value strictly decreases between rounds, so the loop terminates.
template <typename Derived>
SmithDecomposition smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  const Index rank_bound = std::min(rows, cols);

  SmithDecomposition out;
  out.u = IntMatrix::Identity(rows, rows);
  out.v = IntMatrix::Identity(cols, cols);
  out.s = m.template cast<Int>();
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  for (Index t = 0; t < rank_bound; ++t) {
    Index pi, pj;
    if (!detail::find_pivot(s, t, pi, pj)) break;  // trailing block is zero

    for (;;) {
      if (pi != t) {
        s.row(pi).swap(s.row(t));
        u.row(pi).swap(u.row(t));
      }
      if (pj != t) {
        s.col(pj).swap(s.col(t));
        v.col(pj).swap(v.col(t));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        detail::find_pivot(s, t, pi, pj);
        continue;
      }

      // Row t and column t are clear. Enforce that the pivot divides the
      // whole trailing block; if not, fold the offending row in and reduce
      // again (the new pivot is strictly smaller in absolute value).
      bool divides_all = true;
      for (Index i = t + 1; i < rows && divides_all; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.row(t) += s.row(i);
            u.row(t) += u.row(i);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
      detail::find_pivot(s, t, pi, pj);
    }

    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      u.row(t) = -u.row(t);
    }
  }

  out.invariant_factors.reserve(rank_bound);
  for (Index t = 0; t < rank_bound; ++t) out.invariant_factors.push_back(s(t, t));
  return out;
}

namespace detail {

// Representative of x mod r in [-r/2, r/2].
inline Int balanced_mod(const Int& x, const Int& r) {
  Int out = x % r;
  if (2 * out > r) out -= r;
  if (2 * out < -r) out += r;
  return out;
}

// Quotient leaving |a - q*p| <= |p|/2.
inline Int balanced_quot(const Int& a, const Int& p) {
  Int q = a / p;
  const Int r = a - q * p;
  if (2 * abs(r) > abs(p)) q += (r.sign() == p.sign()) ? 1 : -1;
  return q;
}

}  // namespace detail

/// Invariant factors of a nonsingular square matrix, computed with every
/// entry reduced to a balanced residue modulo a known positive multiple of
/// the largest invariant factor (|det| always works).
///
/// Adding a multiple of the modulus to an entry is a column operation on the
/// augmented matrix [m | modulus * identity], whose cokernel equals that of m
/// because each invariant factor divides the modulus. The reduction bounds
/// coefficient growth at the size of the modulus, where unreduced elimination
/// can blow intermediate entries far past the size of the answer. No
/// transform certificates; use smith_normal_form when those are needed.
inline std::vector<Int> invariant_factors_mod(const IntMatrix& m, const Int& modulus) {
  if (!is_square(m)) throw DimensionError("invariant_factors_mod: matrix must be square");
  if (modulus <= 0) throw DomainError("invariant_factors_mod: modulus must be positive");
  const Index k = m.rows();
  if (modulus == 1) return std::vector<Int>(static_cast<size_t>(k), Int(1));

  IntMatrix s(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) s(i, j) = detail::balanced_mod(m(i, j), modulus);

  for (Index t = 0; t < k; ++t) {
    Index pi, pj;
    if (!detail::find_pivot(s, t, pi, pj)) break;  // remaining factors are the modulus
    for (;;) {
      if (pi != t) s.row(pi).swap(s.row(t));
      if (pj != t) s.col(pj).swap(s.col(t));

      bool clean = true;
      for (Index i = t + 1; i < k; ++i) {
        if (s(i, t) == 0) continue;
        const Int q = detail::balanced_quot(s(i, t), s(t, t));
        if (q != 0) {
          for (Index j = t; j < k; ++j)
            s(i, j) = detail::balanced_mod(s(i, j) - q * s(t, j), modulus);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < k; ++j) {
        if (s(t, j) == 0) continue;
        const Int q = detail::balanced_quot(s(t, j), s(t, t));
        if (q != 0) {
          for (Index i = t; i < k; ++i)
            s(i, j) = detail::balanced_mod(s(i, j) - q * s(i, t), modulus);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        detail::find_pivot(s, t, pi, pj);
        continue;
      }

      bool divides_all = true;
      for (Index i = t + 1; i < k && divides_all; ++i) {
        for (Index j = t + 1; j < k; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            for (Index c = t; c < k; ++c)
              s(t, c) = detail::balanced_mod(s(t, c) + s(i, c), modulus);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
      detail::find_pivot(s, t, pi, pj);
    }
  }

  std::vector<Int> factors;
  factors.reserve(static_cast<size_t>(k));
  for (Index t = 0; t < k; ++t) factors.push_back(gcd(Int(abs(s(t, t))), modulus));
  return factors;
}

/// Invariant factors of m (the diagonal of its Smith normal form). Square
/// nonsingular input goes through the modulo-determinant path; everything
/// else through the general decomposition.
template <typename Derived>
std::vector<Int> invariant_factors(const Eigen::MatrixBase<Derived>& m) {
  if (is_square(m) && m.rows() > 0) {
    const IntMatrix work = m.template cast<Int>();
    const Int d = det(work);
    if (d != 0) return invariant_factors_mod(work, abs(d));
  }
  return smith_normal_form(m).invariant_factors;
}

/// Decide whether v lies in the image lattice of the matrix behind snf,
/// i.e. whether m x = v is solvable over the integers.
inline bool in_image(const SmithDecomposition& snf, const IntVector& v) {
  if (v.size() != snf.u.cols())
    throw DimensionError("in_image: vector length does not match matrix rows");
  const IntVector y = snf.u * v;
  const Index rank_bound = std::min(snf.s.rows(), snf.s.cols());
  for (Index j = 0; j < y.size(); ++j) {
    if (j < rank_bound && snf.s(j, j) != 0) {
      if (y(j) % snf.s(j, j) != 0) return false;
    } else {
      if (y(j) != 0) return false;
    }
  }
  return true;
}

}  // namespace cuntzli
