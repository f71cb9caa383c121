#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuntzli/exterior.hpp"
#include "cuntzli/spectral.hpp"
#include "oracles.hpp"

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

IntMatrix diag(std::initializer_list<long> entries) {
  IntMatrix m = IntMatrix::Zero(static_cast<Index>(entries.size()),
                                static_cast<Index>(entries.size()));
  Index i = 0;
  for (long x : entries) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("subset_basis enumerates n-subsets in lexicographic order") {
  const SubsetBasis b32 = subset_basis(3, 2);
  REQUIRE(b32.subsets == std::vector<Subset>{{1, 2}, {1, 3}, {2, 3}});

  for (int d = 0; d <= 5; ++d) {
    const SubsetBasis empty = subset_basis(d, 0);
    REQUIRE(empty.subsets == std::vector<Subset>{{}});
  }

  const SubsetBasis b41 = subset_basis(4, 1);
  REQUIRE(b41.subsets == std::vector<Subset>{{1}, {2}, {3}, {4}});

  CHECK_THROWS_AS(subset_basis(3, 4), DomainError);
  CHECK_THROWS_AS(subset_basis(3, -1), DomainError);

  for (int d = 0; d <= 6; ++d) {
    for (int n = 0; n <= d; ++n) {
      const SubsetBasis basis = subset_basis(d, n);
      REQUIRE(Int(basis.size()) == binomial(d, n));
      for (size_t i = 1; i < basis.subsets.size(); ++i) {
        REQUIRE(basis.subsets[i - 1] < basis.subsets[i]);
      }
      for (Index i = 0; i < basis.size(); ++i) {
        REQUIRE(basis.index_of(basis.subsets[static_cast<size_t>(i)]) == i);
      }
    }
  }
}

TEST_CASE("subset_sign") {
  for (int d = 1; d <= 6; ++d) {
    for (int n = 0; n <= d; ++n) {
      Subset first(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) first[static_cast<size_t>(i)] = i + 1;
      CHECK(subset_sign(first, d) == 1);  // identity permutation
    }
  }
  CHECK(subset_sign({2}, 2) == -1);
  CHECK(subset_sign({1, 3}, 3) == -1);
  CHECK(subset_sign({}, 3) == 1);
  CHECK_THROWS_AS(subset_sign({2, 2}, 3), DomainError);
  CHECK_THROWS_AS(subset_sign({4}, 3), DomainError);

  // parity of the inversion count of (K, K')
  Rng rng(20240820);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.uniform(1, 6);
    const int n = rng.uniform(0, d);
    const SubsetBasis basis = subset_basis(d, n);
    const Subset& k = basis.subsets[static_cast<size_t>(
        rng.uniform(0, static_cast<int>(basis.size()) - 1))];
    Subset perm = k;
    const Subset comp = complement_of(k, d);
    perm.insert(perm.end(), comp.begin(), comp.end());
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    REQUIRE(subset_sign(k, d) == (inversions % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("exterior_power conventions and frozen examples") {
  const IntMatrix a = make(2, {1, 2, 3, 4});
  CHECK(same_matrix(exterior_power(a, 0), make(1, {1})));
  CHECK(same_matrix(exterior_power(a, 1), a));
  CHECK(same_matrix(exterior_power(a, 2), make(1, {-2})));

  // diagonal minors are products, lex basis {1,2},{1,3},{2,3}
  CHECK(same_matrix(exterior_power(diag({2, 3, 5}), 2), diag({6, 10, 15})));

  for (int n = 0; n <= 4; ++n) {
    const IntMatrix id4 = IntMatrix::Identity(4, 4);
    const IntMatrix power = exterior_power(id4, n);
    CHECK(same_matrix(power, IntMatrix(IntMatrix::Identity(power.rows(), power.cols()))));
  }

  CHECK_THROWS_AS(exterior_power(a, 3), DomainError);
  CHECK_THROWS_AS(exterior_power(IntMatrix(2, 3), 1), DimensionError);
}

TEST_CASE("complement_matrix frozen examples") {
  // complements of singletons in d = 2: [[d, c], [b, a]]
  CHECK(same_matrix(complement_matrix(make(2, {7, 11, 13, 17}), 1), make(2, {17, 13, 11, 7})));
  const IntMatrix a = make(2, {1, 2, 3, 4});
  CHECK(same_matrix(complement_matrix(a, 2), make(1, {1})));  // C_d = [1]
  CHECK(same_matrix(complement_matrix(diag({2, 3, 5}), 1), diag({15, 10, 6})));
  CHECK(same_matrix(complement_matrix(a, 0), make(1, {-2})));  // full minor
}

TEST_CASE("b_tilde_matrix frozen examples") {
  // signs (+1, -1) on the basis {1}, {2}
  CHECK(same_matrix(b_tilde_matrix(make(2, {7, 11, 13, 17}), 1), make(2, {17, -13, -11, 7})));
  CHECK(same_matrix(b_tilde_matrix(make(2, {1, 2, 3, 4}), 2), make(1, {1})));
  CHECK(same_matrix(b_tilde_matrix(diag({2, 3, 5}), 1), diag({15, 10, 6})));
}

TEST_CASE("b_matrix applies the determinant sign") {
  CHECK(same_matrix(b_matrix(diag({2, 2}), 1), diag({2, 2})));
  // det -2 < 0 flips the signed complements
  CHECK(same_matrix(b_matrix(make(2, {0, 1, 2, 0}), 1), make(2, {0, 2, 1, 0})));
  CHECK(same_matrix(b_matrix(diag({2, 3}), 2), make(1, {1})));
  CHECK_THROWS_AS(b_matrix(make(2, {1, 1, 1, 1}), 1), SingularMatrixError);
}

TEST_CASE("hodge_matrix frozen examples") {
  CHECK(same_matrix(hodge_matrix(2, 1), make(2, {0, 1, 1, 0})));
  const IntMatrix u30 = hodge_matrix(3, 0);
  REQUIRE(u30.rows() == 1);
  REQUIRE(u30.cols() == 1);
  CHECK(u30(0, 0) == 1);
  CHECK(same_matrix(hodge_matrix(2, 0), make(1, {1})));
}

TEST_CASE("Cauchy-Binet functoriality on 200 random pairs") {
  Rng rng(20240821);
  for (int trial = 0; trial < 200; ++trial) {
    const Index d = rng.uniform(1, 4);
    const IntMatrix a = rng.square(d, -5, 5);
    const IntMatrix b = rng.square(d, -5, 5);
    for (int n = 0; n <= d; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      REQUIRE(same_matrix(exterior_power(IntMatrix(a * b), n),
                          IntMatrix(exterior_power(a, n) * exterior_power(b, n))));
    }
  }
}

TEST_CASE("Sylvester-Franke determinant identity") {
  Rng rng(20240822);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = rng.uniform(1, 4);
    const IntMatrix a = rng.square(d, -5, 5);
    const Int da = det(a);
    for (int n = 0; n <= d; ++n) {
      const Int exponent = binomial(d - 1, n - 1);
      Int expected = 1;
      for (Int e = 0; e < exponent; ++e) expected *= da;
      CAPTURE(trial);
      CAPTURE(n);
      REQUIRE(det(exterior_power(a, n)) == expected);
    }
  }
}

TEST_CASE("trace of the exterior power is an elementary symmetric function") {
  Rng rng(20240823);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = rng.uniform(1, 4);
    const IntMatrix a = rng.square(d, -5, 5);
    const IntPolynomial p = char_poly(a);
    for (int n = 0; n <= d; ++n) {
      const IntMatrix power = exterior_power(a, n);
      Int trace = 0;
      for (Index i = 0; i < power.rows(); ++i) trace += power(i, i);
      const Int expected = (n % 2 == 0) ? p.coeff(d - n) : Int(-p.coeff(d - n));
      CAPTURE(trial);
      CAPTURE(n);
      REQUIRE(trace == expected);
    }
  }
}

TEST_CASE("hodge conjugation sends complement minors to the dual exterior power") {
  Rng rng(20240824);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = rng.uniform(1, 5);
    const IntMatrix a = rng.square(d, -4, 4);
    for (int n = 0; n <= d; ++n) {
      const IntMatrix u = hodge_matrix(d, n);
      CAPTURE(trial);
      CAPTURE(n);
      // permutation matrix: inverse is the transpose
      REQUIRE(same_matrix(IntMatrix(u * u.transpose()),
                          IntMatrix(IntMatrix::Identity(u.rows(), u.rows()))));
      REQUIRE(same_matrix(IntMatrix(u * complement_matrix(a, n) * u.transpose()),
                          exterior_power(a, d - n)));
    }
  }
}

TEST_CASE("diag(subset signs) conjugates the signed complements to the plain ones") {
  Rng rng(20240825);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = rng.uniform(1, 5);
    const IntMatrix a = rng.square(d, -4, 4);
    for (int n = 0; n <= d; ++n) {
      const SubsetBasis basis = subset_basis(d, n);
      IntMatrix signs = IntMatrix::Zero(basis.size(), basis.size());
      for (Index i = 0; i < basis.size(); ++i)
        signs(i, i) = subset_sign(basis.subsets[static_cast<size_t>(i)], d);
      CAPTURE(trial);
      CAPTURE(n);
      // signs is an involution, so it is its own inverse
      REQUIRE(same_matrix(IntMatrix(signs * b_tilde_matrix(a, n) * signs),
                          complement_matrix(a, n)));
    }
  }
}
