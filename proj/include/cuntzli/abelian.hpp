#pragma once

#include "cuntzli/scalars.hpp"
#include "cuntzli/smith.hpp"

#include <string>
#include <vector>

namespace cuntzli {

/// Finitely generated abelian group in canonical (invariant factor) form:
/// Z^free_rank (+) Z/t1 (+) ... (+) Z/tk with 2 <= t1 | t2 | ... | tk.
/// Unit factors are dropped, so equality of canonical forms is isomorphism.
struct FinAbGroup {
  Index free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// Order of the torsion subgroup (product of the divisor chain).
  Int torsion_order() const {
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
  }

  bool operator==(const FinAbGroup& other) const = default;
};

/// Z^k / image(m) for square m, in canonical form: the zero invariant factors
/// contribute free rank, the factors > 1 the torsion chain.
template <typename Derived>
FinAbGroup cokernel(const Eigen::MatrixBase<Derived>& m) {
  if (!is_square(m)) throw DimensionError("cokernel: matrix must be square");
  FinAbGroup g;
  for (const Int& d : invariant_factors(m)) {
    if (d == 0)
      ++g.free_rank;
    else if (d > 1)
      g.torsion.push_back(d);
  }
  return g;
}

/// Isomorphism test on canonical forms: equal free ranks, identical chains.
inline bool groups_isomorphic(const FinAbGroup& g, const FinAbGroup& h) {
  return g.free_rank == h.free_rank && g.torsion == h.torsion;
}

/// Direct sum, re-canonicalized. The combined torsion coefficients are fed
/// through the Smith normal form of their diagonal matrix, which recombines
/// the primary components into a single divisor chain without factoring.
inline FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts) {
  FinAbGroup out;
  std::vector<Int> ts;
  for (const FinAbGroup& g : parts) {
    out.free_rank += g.free_rank;
    ts.insert(ts.end(), g.torsion.begin(), g.torsion.end());
  }
  if (ts.size() <= 1) {
    out.torsion = std::move(ts);
    return out;
  }
  IntMatrix diag = IntMatrix::Zero(static_cast<Index>(ts.size()), static_cast<Index>(ts.size()));
  for (Index i = 0; i < diag.rows(); ++i) diag(i, i) = ts[static_cast<size_t>(i)];
  for (const Int& d : invariant_factors(diag)) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

inline FinAbGroup direct_sum(const FinAbGroup& g, const FinAbGroup& h) {
  return direct_sum(std::vector<FinAbGroup>{g, h});
}

/// "Z^r (+) Z/t1 (+) ...", "Z" for rank one, "0" for the trivial group.
inline std::string to_string(const FinAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  if (g.free_rank == 1) {
    s = "Z";
  } else if (g.free_rank > 1) {
    s = "Z^" + std::to_string(g.free_rank);
  }
  for (const Int& t : g.torsion) {
    if (!s.empty()) s += " (+) ";
    s += "Z/" + t.str();
  }
  return s;
}

}  // namespace cuntzli
