#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eala {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending order. Always trimmed: the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpq_class> coeffs);

  static QPolynomial constant(const mpq_class& c);
  static QPolynomial monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }
  const mpq_class& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t low_order() const;
  /// Divide by x^k; the k lowest coefficients must be zero.
  QPolynomial shifted_down(std::size_t k) const;
  QPolynomial shifted_up(std::size_t k) const;

  QPolynomial monic() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool has_integer_coefficients() const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const mpq_class& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division, b nonzero.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);
  QPolynomial rem(const QPolynomial& b) const { return divmod(*this, b).second; }

  /// Monic gcd; gcd(0, 0) = 0.
  friend QPolynomial gcd(QPolynomial a, QPolynomial b);

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Inverse of a modulo m, when gcd(a, m) = 1.
std::optional<QPolynomial> inverse_mod(const QPolynomial& a, const QPolynomial& m);

/// The n-th cyclotomic polynomial (cached, thread-safe).
const QPolynomial& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace eala
