#include "cuntzli/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace cuntzli {

std::string to_string(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::Singular:
      return "singular";
    case RejectionReason::UnitCircleOrReciprocalPair:
      return "eigenvalue on unit circle or reciprocal pair";
    case RejectionReason::EigenvalueInsideDisk:
      return "eigenvalue inside disk";
  }
  return "unknown";
}

IntPolynomial disk_to_halfplane(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("disk_to_halfplane: zero polynomial");
  const int d = p.degree();
  // powers of (w + 1) and (w - 1)
  std::vector<IntPolynomial> plus(static_cast<size_t>(d) + 1);
  std::vector<IntPolynomial> minus(static_cast<size_t>(d) + 1);
  plus[0] = IntPolynomial::constant(1);
  minus[0] = IntPolynomial::constant(1);
  const IntPolynomial w_plus({Int(1), Int(1)});
  const IntPolynomial w_minus({Int(-1), Int(1)});
  for (int k = 1; k <= d; ++k) {
    plus[static_cast<size_t>(k)] = plus[static_cast<size_t>(k - 1)] * w_plus;
    minus[static_cast<size_t>(k)] = minus[static_cast<size_t>(k - 1)] * w_minus;
  }
  IntPolynomial q;
  for (int k = 0; k <= d; ++k) {
    q = q + p.coeff(k) * (plus[static_cast<size_t>(k)] * minus[static_cast<size_t>(d - k)]);
  }
  return q;
}

bool hurwitz_stable(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("hurwitz_stable: zero polynomial");
  const int m = p.degree();
  if (m == 0) return true;
  const IntPolynomial q = p.leading() > 0 ? p : -p;
  // descending-order coefficients a_0 = leading, ..., a_m = constant
  auto a = [&](int k) -> Int {
    if (k < 0 || k > m) return 0;
    return q.coeff(m - k);
  };
  IntMatrix h(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      h(i - 1, j - 1) = a(2 * j - i);
  // Hurwitz: all leading principal minors positive. Any nonpositive minor
  // certifies a root off the open left half-plane, so bail out early.
  for (int k = 1; k <= m; ++k) {
    if (det(h.topLeftCorner(k, k)) <= 0) return false;
  }
  return true;
}

bool schur_stable(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("schur_stable: zero polynomial");
  if (p.degree() == 0) return true;
  Int at_one = 0;
  for (int k = 0; k <= p.degree(); ++k) at_one += p.coeff(k);
  if (at_one == 0) return false;  // root at z = 1
  return hurwitz_stable(disk_to_halfplane(p));
}

namespace {

std::vector<std::complex<double>> approximate_roots(const IntPolynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  // Floating companion matrix of the monic polynomial; skip when the
  // coefficients do not fit a double. Informational only.
  std::vector<double> c(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    const Int& ck = p.coeff(k);
    if (abs(ck) > Int("1000000000000000000000000000000000000000000000000000000000000")) return {};
    c[static_cast<size_t>(k)] = ck.convert_to<double>();
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  // deterministic order: by real part, then imaginary part
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

}  // namespace

DilationReport certify_dilation(const IntMatrix& a) {
  if (!is_square(a)) throw DimensionError("certify_dilation: matrix must be square");
  if (a.rows() == 0) throw DimensionError("certify_dilation: dimension must be at least 1");

  DilationReport report;
  report.char_poly = char_poly(a);
  report.det = det(a);
  report.det_sign = sign_of(report.det);
  report.approx_eigenvalues = approximate_roots(report.char_poly);

  if (report.det == 0) {
    report.rejection_reason = RejectionReason::Singular;
    return report;
  }
  const IntPolynomial& p = report.char_poly;
  const IntPolynomial reversed = p.reversal();
  if (poly_gcd(p, reversed).degree() >= 1) {
    report.rejection_reason = RejectionReason::UnitCircleOrReciprocalPair;
    return report;
  }
  if (!schur_stable(reversed)) {
    report.rejection_reason = RejectionReason::EigenvalueInsideDisk;
    return report;
  }
  report.is_dilation = true;
  return report;
}

int det_sign(const IntMatrix& a) {
  const Int d = det(a);
  if (d == 0) throw SingularMatrixError("det_sign: matrix is singular");
  return sign_of(d);
}

}  // namespace cuntzli
