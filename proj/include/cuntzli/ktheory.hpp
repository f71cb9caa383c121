#pragma once

#include "cuntzli/abelian.hpp"
#include "cuntzli/exterior.hpp"
#include "cuntzli/polynomial.hpp"
#include "cuntzli/scalars.hpp"
#include "cuntzli/smith.hpp"
#include "cuntzli/spectral.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cuntzli {

/// Thrown when a K-group computation is asked for a matrix that fails
/// certification; carries the full report with the rejection reason.
class NotDilationError : public std::runtime_error {
 public:
  explicit NotDilationError(DilationReport report);
  const DilationReport& report() const { return report_; }

 private:
  DilationReport report_;
};

/// An integer matrix together with the proof that it is a dilation matrix.
/// Instances exist only for certified inputs, so downstream operations can
/// assume expansiveness without re-checking.
class CertifiedDilation {
 public:
  /// Certify a; throws NotDilationError (with the report) on rejection.
  static CertifiedDilation certify(IntMatrix a);

  const IntMatrix& matrix() const { return matrix_; }
  const DilationReport& report() const { return report_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }
  const Int& det() const { return report_.det; }
  /// epsilon = sign(det), the case selector for the K-group formulas.
  int epsilon() const { return report_.det_sign; }

 private:
  CertifiedDilation(IntMatrix a, DilationReport report)
      : matrix_(std::move(a)), report_(std::move(report)) {}

  IntMatrix matrix_;
  DilationReport report_;
};

/// Stationary inductive limit Gamma_n = union over r of A_n^-r Lambda^n(Z^d),
/// represented by its rank and transition matrix A_n; never materialized.
struct ColimitGroup {
  Index rank = 0;
  IntMatrix transition;
  int degree = 0;
};

ColimitGroup gamma_group(const CertifiedDilation& a, int n);

/// Least r <= level_cap with transition^r * v integral, together with that
/// integer vector; nullopt if no such level exists within the cap.
std::optional<std::pair<int, IntVector>> gamma_membership(const ColimitGroup& g,
                                                          const RatVector& v,
                                                          int level_cap = 64);

/// Gamma_n for n = 0..d grouped by parity: (even degrees, odd degrees).
std::pair<std::vector<ColimitGroup>, std::vector<ColimitGroup>> group_algebra_k(
    const CertifiedDilation& a);

/// Action induced on Gamma_n by the shift automorphism: the exact rational
/// inverse of the transition matrix A_n.
RatMatrix tau_action(const CertifiedDilation& a, int n);

/// The geometric-sum polynomial p_r(x) = 1 + x + ... + x^(r-1) satisfying
/// p_r(A_n)(1 - A_n) + A_n^r = 1; the matrix identity is verified exactly
/// before returning.
IntPolynomial bezout_witness(const CertifiedDilation& a, int n, int r);

/// Certify that A_n acts as eps * identity on coker(1 - eps A_n): for every
/// standard generator g, A_n g - eps g must lie in the image lattice of
/// (1 - eps A_n), decided by Smith-normal-form membership.
bool stabilization_check(const CertifiedDilation& a, int n, int eps);

/// coker(1 - eps A_n) for n = 0..d in canonical form. For the K-group
/// formulas eps must be sign(det); other values are allowed as diagnostics.
std::vector<std::pair<int, FinAbGroup>> cokernel_table(const CertifiedDilation& a, int eps);

enum class Presentation { AForm, BForm };
enum class FreeSummandSlot { None, K0, K1 };

struct DegreeEntry {
  int n = 0;
  IntMatrix matrix;  // 1 - eps A_n (A-form) or 1 - B_n (B-form)
  std::vector<Int> factors;
  FinAbGroup coker;
};

struct KTheoryReport {
  int dimension = 0;
  Int det = 0;
  int det_sign = 0;
  Presentation presentation = Presentation::AForm;
  std::vector<DegreeEntry> per_degree;  // n = 0..d
  FinAbGroup k0;
  FinAbGroup k1;
  FreeSummandSlot extra_free_summand = FreeSummandSlot::None;
};

/// K-groups of the Cuntz-Li algebra of a, assembled from the per-degree
/// cokernels coker(1 - eps A_n) with eps = sign(det a). The parity receiving
/// each sum and the placement of the explicit free summand depend on the
/// parity of d and on eps.
KTheoryReport k_groups(const CertifiedDilation& a);
KTheoryReport k_groups(const IntMatrix& a);

/// Same K-groups through the independent presentation by the signed
/// complement matrices B_n, assembled from coker(1 - B_n).
KTheoryReport k_groups_via_b(const CertifiedDilation& a);
KTheoryReport k_groups_via_b(const IntMatrix& a);

/// True iff the two presentations produce isomorphic (K0, K1) pairs and, per
/// degree, the invariant factors of (1 - B_n) equal those of (1 - eps A_(d-n)).
bool cross_check_reports(const KTheoryReport& a_form, const KTheoryReport& b_form);
bool cross_check(const CertifiedDilation& a);
bool cross_check(const IntMatrix& a);

}  // namespace cuntzli
