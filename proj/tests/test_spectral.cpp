#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuntzli/exterior.hpp"
#include "cuntzli/spectral.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <complex>

using namespace cuntzli;
using testing::Rng;

namespace {

IntMatrix make(Index n, std::initializer_list<long> entries) {
  IntMatrix m(n, n);
  auto it = entries.begin();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

// Floating companion-matrix roots; the non-authoritative comparison point.
std::vector<std::complex<double>> float_roots(const IntPolynomial& p) {
  const int d = p.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeff(i).convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

}  // namespace

TEST_CASE("IntPolynomial arithmetic and normalization") {
  const IntPolynomial p({Int(-2), Int(0), Int(1)});  // z^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "z^2 - 2");
  CHECK(p(Int(3)) == 7);
  CHECK((p * p).to_string() == "z^4 - 4z^2 + 4");
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial({Int(0), Int(0)}).is_zero());
  CHECK(p.reversal() == IntPolynomial({Int(1), Int(0), Int(-2)}));
  CHECK(geometric_sum(0).is_zero());
  CHECK(geometric_sum(1) == IntPolynomial({Int(1)}));
  CHECK(geometric_sum(3) == IntPolynomial({Int(1), Int(1), Int(1)}));
}

TEST_CASE("poly_gcd by primitive remainder sequences") {
  const IntPolynomial x({Int(0), Int(1)});
  const IntPolynomial x_minus_1({Int(-1), Int(1)});
  const IntPolynomial x_minus_2({Int(-2), Int(1)});
  CHECK(poly_gcd(x_minus_1 * x_minus_2, x_minus_1 * x) == x_minus_1);
  CHECK(poly_gcd(x_minus_1, x_minus_2).degree() == 0);
  CHECK(poly_gcd(IntPolynomial::zero(), x_minus_1) == x_minus_1);
  // contents participate
  CHECK(poly_gcd(Int(6) * x_minus_1, Int(4) * x_minus_1) == Int(2) * x_minus_1);
  // gcd of a palindromic polynomial with its reversal is itself
  const IntPolynomial palindromic({Int(1), Int(-3), Int(1)});
  CHECK(poly_gcd(palindromic, palindromic.reversal()) == palindromic);
}

TEST_CASE("char_poly frozen examples") {
  CHECK(char_poly(make(2, {0, 1, 2, 0})) == IntPolynomial({Int(-2), Int(0), Int(1)}));
  CHECK(char_poly(IntMatrix(IntMatrix::Identity(2, 2))) ==
        IntPolynomial({Int(1), Int(-2), Int(1)}));
  CHECK(char_poly(make(2, {2, 1, 1, 1})) == IntPolynomial({Int(1), Int(-3), Int(1)}));
  CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("char_poly constant term carries the determinant") {
  Rng rng(20240830);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = rng.uniform(1, 5);
    const IntMatrix a = rng.square(d, -6, 6);
    const IntPolynomial p = char_poly(a);
    REQUIRE(p.degree() == d);
    REQUIRE(p.leading() == 1);
    const Int expected = (d % 2 == 0) ? det(a) : Int(-det(a));
    REQUIRE(p.coeff(0) == expected);
  }
}

TEST_CASE("schur_stable spot checks") {
  // roots 1/2 and -1/2
  CHECK(schur_stable(IntPolynomial({Int(-1), Int(0), Int(4)})));
  // root exactly at 1
  CHECK_FALSE(schur_stable(IntPolynomial({Int(-1), Int(1)})));
  // roots 2, 1/2
  CHECK_FALSE(schur_stable(IntPolynomial({Int(1), Int(-5), Int(2)})));
  // reversal of z^2 - 2: roots +-1/sqrt(2)
  CHECK(schur_stable(IntPolynomial({Int(1), Int(0), Int(-2)})));
  CHECK(schur_stable(IntPolynomial({Int(5)})));  // no roots
  CHECK_THROWS_AS(schur_stable(IntPolynomial::zero()), DomainError);
}

TEST_CASE("hurwitz_stable spot checks") {
  // (w+1)(w+2) = w^2 + 3w + 2
  CHECK(hurwitz_stable(IntPolynomial({Int(2), Int(3), Int(1)})));
  // (w-1)(w+2) = w^2 + w - 2
  CHECK_FALSE(hurwitz_stable(IntPolynomial({Int(-2), Int(1), Int(1)})));
  // w^2 + 1: roots on the imaginary axis
  CHECK_FALSE(hurwitz_stable(IntPolynomial({Int(1), Int(0), Int(1)})));
  // (w+1)(w+2)(w+3) = w^3 + 6w^2 + 11w + 6
  CHECK(hurwitz_stable(IntPolynomial({Int(6), Int(11), Int(6), Int(1)})));
}

TEST_CASE("certify_dilation frozen verdicts") {
  const DilationReport single = certify_dilation(make(1, {2}));
  CHECK(single.is_dilation);
  CHECK(single.det_sign == 1);
  CHECK(!single.rejection_reason.has_value());

  // roots (3 +- sqrt(5))/2, one inside the disk: the char poly is palindromic
  const DilationReport golden = certify_dilation(make(2, {2, 1, 1, 1}));
  CHECK_FALSE(golden.is_dilation);
  CHECK(golden.rejection_reason == RejectionReason::UnitCircleOrReciprocalPair);

  // roots +- sqrt(2)
  const DilationReport root2 = certify_dilation(make(2, {0, 1, 2, 0}));
  CHECK(root2.is_dilation);
  CHECK(root2.det_sign == -1);

  // eigenvalue 1 sits on the unit circle
  const DilationReport unit = certify_dilation(make(2, {1, 0, 0, 2}));
  CHECK_FALSE(unit.is_dilation);
  CHECK(unit.rejection_reason == RejectionReason::UnitCircleOrReciprocalPair);

  const DilationReport zero = certify_dilation(make(1, {0}));
  CHECK_FALSE(zero.is_dilation);
  CHECK(zero.rejection_reason == RejectionReason::Singular);
  CHECK(zero.det_sign == 0);

  // eigenvalues 1 +- i with modulus sqrt(2)
  CHECK(certify_dilation(make(2, {1, 1, -1, 1})).is_dilation);

  CHECK(certify_dilation(make(2, {3, 0, 0, 5})).is_dilation);
  // char poly z^2 + 2, roots +- i sqrt(2)
  CHECK(certify_dilation(make(2, {0, 2, -1, 0})).is_dilation);

  CHECK_THROWS_AS(certify_dilation(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("rejection reason distinguishes strictly-inside eigenvalues") {
  // char poly z^2 - z - 1: roots phi and -1/phi, one strictly inside the
  // disk, none on the circle, no reciprocal pair
  const IntMatrix fib = make(2, {1, 1, 1, 0});
  const DilationReport report = certify_dilation(fib);
  CHECK_FALSE(report.is_dilation);
  CHECK(report.rejection_reason == RejectionReason::EigenvalueInsideDisk);
}

TEST_CASE("det_sign") {
  CHECK(det_sign(make(2, {2, 0, 0, 2})) == 1);
  CHECK(det_sign(make(2, {0, 1, 2, 0})) == -1);
  CHECK(det_sign(make(1, {-2})) == -1);
  CHECK_THROWS_AS(det_sign(make(2, {1, 1, 1, 1})), SingularMatrixError);
}

TEST_CASE("certify_dilation agrees with the floating oracle away from the circle") {
  Rng rng(20240831);
  int compared = 0;
  int attempts = 0;
  while (compared < 100 && attempts < 4000) {
    ++attempts;
    const int d = rng.uniform(1, 4);
    const IntMatrix a = rng.square(d, -4, 4);
    bool near_circle = false;
    bool all_outside = true;
    for (const auto& root : float_roots(char_poly(a))) {
      const double modulus = std::abs(root);
      if (std::abs(modulus - 1.0) < 1e-3) near_circle = true;
      if (modulus <= 1.0) all_outside = false;
    }
    if (near_circle) continue;
    ++compared;
    CAPTURE(attempts);
    REQUIRE(certify_dilation(a).is_dilation == all_outside);
  }
  REQUIRE(compared == 100);
}

TEST_CASE("accepted matrices have |det| >= 2") {
  Rng rng(20240832);
  int accepted = 0;
  for (int trial = 0; trial < 2000 && accepted < 40; ++trial) {
    const int d = rng.uniform(1, 3);
    const IntMatrix a = rng.square(d, -4, 4);
    const DilationReport report = certify_dilation(a);
    if (!report.is_dilation) continue;
    ++accepted;
    REQUIRE(abs(report.det) >= 2);
  }
  REQUIRE(accepted == 40);
}

TEST_CASE("accepted matrices have det(1 - eps A_n) != 0 for n >= 1, both signs") {
  Rng rng(20240833);
  int accepted = 0;
  for (int trial = 0; trial < 2000 && accepted < 25; ++trial) {
    const int d = rng.uniform(1, 4);
    const IntMatrix a = rng.square(d, -4, 4);
    if (!certify_dilation(a).is_dilation) continue;
    ++accepted;
    for (int n = 1; n <= d; ++n) {
      const IntMatrix power = exterior_power(a, n);
      const IntMatrix id = IntMatrix::Identity(power.rows(), power.cols());
      REQUIRE(det(IntMatrix(id - power)) != 0);
      REQUIRE(det(IntMatrix(id + power)) != 0);
    }
  }
  REQUIRE(accepted == 25);
}

TEST_CASE("certification is invariant under unimodular conjugation") {
  Rng rng(20240834);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const int d = rng.uniform(1, 4);
    const IntMatrix a = rng.square(d, -4, 4);
    const IntMatrix p = rng.unimodular(d);
    const IntMatrix conjugated = p * a * testing::unimodular_inverse(p);
    const DilationReport lhs = certify_dilation(a);
    const DilationReport rhs = certify_dilation(conjugated);
    ++checked;
    CAPTURE(trial);
    REQUIRE(lhs.char_poly == rhs.char_poly);  // similar matrices
    REQUIRE(lhs.is_dilation == rhs.is_dilation);
    REQUIRE(lhs.det == rhs.det);
  }
  REQUIRE(checked == 60);
}
