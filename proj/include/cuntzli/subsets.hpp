#pragma once

#include "cuntzli/scalars.hpp"

#include <algorithm>
#include <vector>

namespace cuntzli {

/// Strictly increasing subset of {1, ..., d}, 1-based.
using Subset = std::vector<int>;

/// All n-element subsets of {1, ..., d} in lexicographic order; the index set
/// for the basis {e_I : |I| = n} of the n-th exterior power of Z^d.
struct SubsetBasis {
  int d = 0;
  int n = 0;
  std::vector<Subset> subsets;

  Index size() const { return static_cast<Index>(subsets.size()); }

  /// Lex rank of a subset within this basis.
  Index index_of(const Subset& k) const {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), k);
    if (it == subsets.end() || *it != k)
      throw DomainError("SubsetBasis: subset not in basis");
    return static_cast<Index>(it - subsets.begin());
  }
};

inline SubsetBasis subset_basis(int d, int n) {
  if (d < 0 || n < 0 || n > d) throw DomainError("subset_basis: require 0 <= n <= d");
  SubsetBasis basis;
  basis.d = d;
  basis.n = n;
  Subset current(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<size_t>(i)] = i + 1;
  for (;;) {
    basis.subsets.push_back(current);
    // next subset in lex order
    int i = n - 1;
    while (i >= 0 && current[static_cast<size_t>(i)] == d - (n - 1 - i)) --i;
    if (i < 0) break;
    ++current[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      current[static_cast<size_t>(j)] = current[static_cast<size_t>(j - 1)] + 1;
  }
  return basis;
}

inline void check_subset(const Subset& k, int d) {
  int prev = 0;
  for (int x : k) {
    if (x <= prev || x > d) throw DomainError("subset: must be strictly increasing within 1..d");
    prev = x;
  }
}

/// Increasing complement of k within {1, ..., d}.
inline Subset complement_of(const Subset& k, int d) {
  check_subset(k, d);
  Subset out;
  out.reserve(static_cast<size_t>(d) - k.size());
  size_t pos = 0;
  for (int x = 1; x <= d; ++x) {
    if (pos < k.size() && k[pos] == x) {
      ++pos;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

/// Sign of the permutation i -> k_i listing K and then its increasing
/// complement. Both halves are increasing, so the inversion count is
/// sum_i (k_i - i) over the elements of K.
inline int subset_sign(const Subset& k, int d) {
  check_subset(k, d);
  long long inversions = 0;
  for (size_t i = 0; i < k.size(); ++i) {
    inversions += k[i] - static_cast<int>(i) - 1;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace cuntzli
