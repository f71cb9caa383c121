#pragma once

#include "cuntzli/determinant.hpp"
#include "cuntzli/polynomial.hpp"
#include "cuntzli/scalars.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace cuntzli {

enum class RejectionReason {
  Singular,
  UnitCircleOrReciprocalPair,
  EigenvalueInsideDisk,
};

std::string to_string(RejectionReason reason);

/// Outcome of the exact dilation check for a square integer matrix.
/// approx_eigenvalues come from a floating companion-matrix solve and are
/// informational only; every verdict is decided in exact arithmetic.
struct DilationReport {
  bool is_dilation = false;
  Int det = 0;
  int det_sign = 0;  // sign(det); 0 only when det = 0
  IntPolynomial char_poly;
  std::optional<RejectionReason> rejection_reason;
  std::vector<std::complex<double>> approx_eigenvalues;
};

/// Monic characteristic polynomial det(z I - m) by the Faddeev-LeVerrier
/// trace recursion; the divisions by k are exact in the integers.
template <typename Derived>
IntPolynomial char_poly(const Eigen::MatrixBase<Derived>& m) {
  if (!is_square(m)) throw DimensionError("char_poly: matrix must be square");
  const Index d = m.rows();
  std::vector<Int> coeffs(static_cast<size_t>(d) + 1, Int(0));
  coeffs[static_cast<size_t>(d)] = 1;
  if (d > 0) {
    const IntMatrix a = m.template cast<Int>();
    const IntMatrix id = IntMatrix::Identity(d, d);
    IntMatrix nk = a;
    for (Index k = 1; k <= d; ++k) {
      Int tr = 0;
      for (Index i = 0; i < d; ++i) tr += nk(i, i);
      coeffs[static_cast<size_t>(d - k)] = -tr / k;
      if (k < d) nk = a * (nk + coeffs[static_cast<size_t>(d - k)] * id);
    }
  }
  return IntPolynomial(std::move(coeffs));
}

/// Cayley transform (w-1)^deg * p((w+1)/(w-1)). Roots inside the open unit
/// disk map to the open left half-plane; the degree is preserved iff p(1) != 0.
IntPolynomial disk_to_halfplane(const IntPolynomial& p);

/// All roots in the open left half-plane, decided by the Hurwitz
/// leading-principal-minor criterion with exact integer determinants.
bool hurwitz_stable(const IntPolynomial& p);

/// All roots strictly inside the open unit disk, decided exactly.
bool schur_stable(const IntPolynomial& p);

/// Exact certification that every eigenvalue of a has modulus > 1:
/// (i) reject singular matrices; (ii) reject when gcd(p, p*) is nonconstant
/// for p the characteristic polynomial and p* its reversal (a common root
/// forces a root pair mu, 1/mu, so some eigenvalue has modulus <= 1, and any
/// unit-circle root of a real polynomial is such a common root); (iii) accept
/// iff the reversal p* is Schur stable. No tolerances anywhere.
DilationReport certify_dilation(const IntMatrix& a);

/// sign(det(a)) as +1 or -1; throws SingularMatrixError when det(a) = 0.
int det_sign(const IntMatrix& a);

}  // namespace cuntzli
