#pragma once

#include "cuntzli/scalars.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cuntzli {

/// Integer-coefficient polynomial, coefficients stored ascending by degree.
/// Normalized: the leading coefficient is nonzero; the zero polynomial has an
/// empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }
  static IntPolynomial monomial(int degree, Int c = Int(1)) {
    std::vector<Int> v(static_cast<size_t>(degree) + 1, Int(0));
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Int& coeff(int k) const {
    static const Int kZero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
  }
  const Int& leading() const { return coeffs_.back(); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  bool operator==(const IntPolynomial& other) const = default;

  IntPolynomial operator-() const {
    std::vector<Int> v = coeffs_;
    for (Int& c : v) c = -c;
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const Int& c, const IntPolynomial& p) {
    std::vector<Int> v = p.coeffs_;
    for (Int& x : v) x *= c;
    return IntPolynomial(std::move(v));
  }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (const Int& c : coeffs_) g = gcd(g, c);
    return g;
  }

  /// p / content(p) with positive leading coefficient; zero stays zero.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> v = coeffs_;
    for (Int& c : v) c /= g;
    return IntPolynomial(std::move(v));
  }

  /// Coefficient reversal z^deg * p(1/z).
  IntPolynomial reversal() const {
    std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(v));
  }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Matrix evaluation by Horner's rule; p(m) for square m.
  IntMatrix operator()(const IntMatrix& m) const {
    if (!is_square(m)) throw DimensionError("IntPolynomial: matrix argument must be square");
    IntMatrix acc = IntMatrix::Zero(m.rows(), m.cols());
    const IntMatrix id = IntMatrix::Identity(m.rows(), m.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * m + *it * id;
    }
    return acc;
  }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const Int& c = coeff(k);
      if (c == 0) continue;
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      const Int mag = abs(c);
      const bool unit = mag == 1 && k > 0;
      if (!unit) s += mag.str();
      if (k > 0) {
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

/// 1 + x + ... + x^(r-1); the zero polynomial for r = 0.
inline IntPolynomial geometric_sum(int r) {
  if (r < 0) throw DomainError("geometric_sum: require r >= 0");
  return IntPolynomial(std::vector<Int>(static_cast<size_t>(r), Int(1)));
}

namespace detail {

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + r with deg r < deg g.
inline IntPolynomial pseudo_rem(IntPolynomial f, const IntPolynomial& g) {
  const int dg = g.degree();
  while (!f.is_zero() && f.degree() >= dg) {
    const int shift = f.degree() - dg;
    const Int lead = f.leading();
    f = g.leading() * f - lead * (IntPolynomial::monomial(shift) * g);
  }
  return f;
}

}  // namespace detail

/// gcd over Z[x] by the primitive polynomial remainder sequence; the result is
/// primitive with positive leading coefficient, scaled by gcd of the contents.
inline IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part() * IntPolynomial::constant(b.content());
  if (b.is_zero()) return a.primitive_part() * IntPolynomial::constant(a.content());
  const Int scale = gcd(a.content(), b.content());
  IntPolynomial f = a.primitive_part();
  IntPolynomial g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPolynomial r = detail::pseudo_rem(f, g).primitive_part();
    f = std::move(g);
    g = std::move(r);
  }
  return scale * f;
}

}  // namespace cuntzli
