#include "cuntzli/ktheory.hpp"

namespace cuntzli {

NotDilationError::NotDilationError(DilationReport report)
    : std::runtime_error("not an integer dilation matrix: " +
                         (report.rejection_reason ? to_string(*report.rejection_reason)
                                                  : std::string("unknown"))),
      report_(std::move(report)) {}

CertifiedDilation CertifiedDilation::certify(IntMatrix a) {
  DilationReport report = certify_dilation(a);
  if (!report.is_dilation) throw NotDilationError(std::move(report));
  return CertifiedDilation(std::move(a), std::move(report));
}

namespace {

void check_degree(const CertifiedDilation& a, int n, const char* who) {
  if (n < 0 || n > a.dimension()) throw DomainError(std::string(who) + ": require 0 <= n <= d");
}

void check_eps(int eps, const char* who) {
  if (eps != 1 && eps != -1) throw DomainError(std::string(who) + ": eps must be +1 or -1");
}

IntMatrix matrix_power(const IntMatrix& m, int r) {
  IntMatrix acc = IntMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < r; ++i) acc = acc * m;
  return acc;
}

// Exact inverse by Gauss-Jordan over the rationals.
RatMatrix rational_inverse(const IntMatrix& m) {
  const Index n = m.rows();
  RatMatrix work = m.cast<Rat>();
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("rational_inverse: matrix is singular");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rat scale = work(col, col);
    work.row(col) /= scale;
    inv.row(col) /= scale;
    for (Index row = 0; row < n; ++row) {
      if (row == col || work(row, col) == 0) continue;
      const Rat factor = work(row, col);
      work.row(row) -= factor * work.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  return inv;
}

FinAbGroup group_from_factors(const std::vector<Int>& factors) {
  FinAbGroup g;
  for (const Int& d : factors) {
    if (d == 0)
      ++g.free_rank;
    else if (d > 1)
      g.torsion.push_back(d);
  }
  return g;
}

KTheoryReport assemble(const CertifiedDilation& a, Presentation presentation) {
  const int d = a.dimension();
  const int eps = a.epsilon();

  KTheoryReport report;
  report.dimension = d;
  report.det = a.det();
  report.det_sign = eps;
  report.presentation = presentation;

  std::vector<FinAbGroup> even_parts;
  std::vector<FinAbGroup> odd_parts;
  for (int n = 0; n <= d; ++n) {
    IntMatrix derived = presentation == Presentation::AForm
                            ? IntMatrix(Int(eps) * exterior_power(a.matrix(), n))
                            : b_matrix(a.matrix(), n);
    const Index size = derived.rows();
    DegreeEntry entry;
    entry.n = n;
    entry.matrix = IntMatrix::Identity(size, size) - derived;
    entry.factors = invariant_factors(entry.matrix);
    entry.coker = group_from_factors(entry.factors);
    (n % 2 == 0 ? even_parts : odd_parts).push_back(entry.coker);
    report.per_degree.push_back(std::move(entry));
  }

  const FinAbGroup even_sum = direct_sum(even_parts);
  const FinAbGroup odd_sum = direct_sum(odd_parts);
  const FinAbGroup free_z{1, {}};
  const bool d_even = d % 2 == 0;
  const bool det_positive = eps > 0;

  if (presentation == Presentation::AForm) {
    if (d_even) {
      report.k0 = even_sum;
      report.k1 = det_positive ? direct_sum(odd_sum, free_z) : odd_sum;
      report.extra_free_summand = det_positive ? FreeSummandSlot::K1 : FreeSummandSlot::None;
    } else {
      report.k0 = det_positive ? direct_sum(odd_sum, free_z) : odd_sum;
      report.k1 = even_sum;
      report.extra_free_summand = det_positive ? FreeSummandSlot::K0 : FreeSummandSlot::None;
    }
  } else {
    // B-form: K0 collects the even degrees in every case; the explicit free
    // summand appears only for positive determinant, in K1 for even d and in
    // K0 for odd d.
    if (d_even) {
      report.k0 = even_sum;
      report.k1 = det_positive ? direct_sum(odd_sum, free_z) : odd_sum;
      report.extra_free_summand = det_positive ? FreeSummandSlot::K1 : FreeSummandSlot::None;
    } else {
      report.k0 = det_positive ? direct_sum(even_sum, free_z) : even_sum;
      report.k1 = odd_sum;
      report.extra_free_summand = det_positive ? FreeSummandSlot::K0 : FreeSummandSlot::None;
    }
  }
  return report;
}

}  // namespace

ColimitGroup gamma_group(const CertifiedDilation& a, int n) {
  check_degree(a, n, "gamma_group");
  ColimitGroup g;
  g.transition = exterior_power(a.matrix(), n);
  g.rank = g.transition.rows();
  g.degree = n;
  return g;
}

std::optional<std::pair<int, IntVector>> gamma_membership(const ColimitGroup& g,
                                                          const RatVector& v, int level_cap) {
  if (v.size() != g.rank) throw DomainError("gamma_membership: vector length must equal rank");

  const RatMatrix transition = g.transition.cast<Rat>();
  RatVector current = v;
  for (int r = 0; r <= level_cap; ++r) {
    bool integral = true;
    for (Index i = 0; i < current.size(); ++i) {
      if (denominator(current(i)) != 1) {
        integral = false;
        break;
      }
    }
    if (integral) {
      IntVector w(current.size());
      for (Index i = 0; i < current.size(); ++i) w(i) = numerator(current(i));
      return std::make_pair(r, std::move(w));
    }
    current = transition * current;
  }
  return std::nullopt;
}

std::pair<std::vector<ColimitGroup>, std::vector<ColimitGroup>> group_algebra_k(
    const CertifiedDilation& a) {
  std::vector<ColimitGroup> even;
  std::vector<ColimitGroup> odd;
  for (int n = 0; n <= a.dimension(); ++n) {
    (n % 2 == 0 ? even : odd).push_back(gamma_group(a, n));
  }
  return {std::move(even), std::move(odd)};
}

RatMatrix tau_action(const CertifiedDilation& a, int n) {
  check_degree(a, n, "tau_action");
  return rational_inverse(exterior_power(a.matrix(), n));
}

IntPolynomial bezout_witness(const CertifiedDilation& a, int n, int r) {
  check_degree(a, n, "bezout_witness");
  if (r < 0) throw DomainError("bezout_witness: require r >= 0");
  const IntPolynomial witness = geometric_sum(r);
  const IntMatrix t = exterior_power(a.matrix(), n);
  const IntMatrix id = IntMatrix::Identity(t.rows(), t.cols());
  const IntMatrix lhs = witness(t) * (id - t) + matrix_power(t, r);
  if (!same_matrix(lhs, id))
    throw std::logic_error("bezout_witness: geometric-sum identity failed");
  return witness;
}

bool stabilization_check(const CertifiedDilation& a, int n, int eps) {
  check_degree(a, n, "stabilization_check");
  check_eps(eps, "stabilization_check");
  const IntMatrix t = exterior_power(a.matrix(), n);
  const Index size = t.rows();
  const IntMatrix image_lattice = IntMatrix::Identity(size, size) - Int(eps) * t;
  const SmithDecomposition snf = smith_normal_form(image_lattice);
  const IntMatrix shifted = t - Int(eps) * IntMatrix::Identity(size, size);
  for (Index i = 0; i < size; ++i) {
    if (!in_image(snf, shifted.col(i))) return false;
  }
  return true;
}

std::vector<std::pair<int, FinAbGroup>> cokernel_table(const CertifiedDilation& a, int eps) {
  check_eps(eps, "cokernel_table");
  std::vector<std::pair<int, FinAbGroup>> table;
  for (int n = 0; n <= a.dimension(); ++n) {
    const IntMatrix t = exterior_power(a.matrix(), n);
    const IntMatrix m = IntMatrix::Identity(t.rows(), t.cols()) - Int(eps) * t;
    table.emplace_back(n, cokernel(m));
  }
  return table;
}

KTheoryReport k_groups(const CertifiedDilation& a) { return assemble(a, Presentation::AForm); }

KTheoryReport k_groups(const IntMatrix& a) {
  return k_groups(CertifiedDilation::certify(a));
}

KTheoryReport k_groups_via_b(const CertifiedDilation& a) {
  return assemble(a, Presentation::BForm);
}

KTheoryReport k_groups_via_b(const IntMatrix& a) {
  return k_groups_via_b(CertifiedDilation::certify(a));
}

bool cross_check_reports(const KTheoryReport& a_form, const KTheoryReport& b_form) {
  if (!groups_isomorphic(a_form.k0, b_form.k0)) return false;
  if (!groups_isomorphic(a_form.k1, b_form.k1)) return false;
  const int d = a_form.dimension;
  if (b_form.dimension != d) return false;
  // 1 - B_n is conjugate over Z to 1 - eps A_(d-n); the invariant factors
  // must match degree by degree, not just the assembled totals.
  for (int n = 0; n <= d; ++n) {
    if (b_form.per_degree[static_cast<size_t>(n)].factors !=
        a_form.per_degree[static_cast<size_t>(d - n)].factors)
      return false;
  }
  return true;
}

bool cross_check(const CertifiedDilation& a) {
  return cross_check_reports(k_groups(a), k_groups_via_b(a));
}

bool cross_check(const IntMatrix& a) { return cross_check(CertifiedDilation::certify(a)); }

}  // namespace cuntzli
