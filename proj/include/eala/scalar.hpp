#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "eala/polynomial.hpp"

namespace eala {

/// How the parameter q is interpreted. Rational constants carry the generic
/// mode and combine with anything; two distinct explicit modes never mix.
class QMode {
 public:
  static constexpr int kGeneric = -1;
  static constexpr int kFormal = 0;

  QMode() = default;
  static QMode generic() { return QMode(kGeneric); }
  static QMode formal() { return QMode(kFormal); }
  /// Primitive n-th root of unity. Orders divisible by 8 are rejected because
  /// sqrt2 already lies in Q(zeta_8) and the pair representation would break.
  static QMode root_of_unity(int n);

  /// "formal", "root:n"; the generic mode prints as "generic".
  static QMode parse(std::string_view text);
  std::string to_string() const;

  bool is_generic() const { return order_ == kGeneric; }
  bool is_formal() const { return order_ == kFormal; }
  bool is_root_of_unity() const { return order_ > 0; }
  int order() const { return order_; }

  friend bool operator==(QMode a, QMode b) { return a.order_ == b.order_; }

 private:
  explicit QMode(int order) : order_(order) {}
  int order_ = kGeneric;
};

/// The explicit mode shared by a and b; throws std::invalid_argument if they differ.
QMode combine_modes(QMode a, QMode b);

/// Element of K_q: either q^shift * num / den over Q(q) (den monic, num and den
/// prime to q and to each other), or a residue modulo the cyclotomic polynomial.
class KqElement {
 public:
  KqElement() = default;
  KqElement(long c) : num_(QPolynomial::constant(c)) {}  // NOLINT
  KqElement(const mpq_class& c) : num_(QPolynomial::constant(c)) {}  // NOLINT

  /// q^k in the given (non-generic) mode.
  static KqElement q_power(std::int64_t k, QMode mode);
  /// A polynomial in q with the lowest exponent given by shift.
  static KqElement laurent(const QPolynomial& p, std::int64_t shift, QMode mode);

  QMode mode() const { return mode_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return mode_.is_generic(); }
  /// The value as a rational number when q does not occur.
  std::optional<mpq_class> as_rational() const;
  bool is_integer() const;
  /// Integer-coefficient Laurent polynomial (formal) or integral residue.
  bool is_integer_laurent() const;
  /// Number of nonzero monomials in the numerator.
  std::size_t term_count() const;
  bool has_denominator() const { return !den_.is_constant(); }

  std::int64_t shift() const { return shift_; }
  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }

  KqElement operator-() const;
  KqElement inverse() const;

  friend KqElement operator+(const KqElement& a, const KqElement& b);
  friend KqElement operator-(const KqElement& a, const KqElement& b);
  friend KqElement operator*(const KqElement& a, const KqElement& b);
  friend KqElement operator/(const KqElement& a, const KqElement& b) { return a * b.inverse(); }
  friend bool operator==(const KqElement& a, const KqElement& b) {
    return a.mode_ == b.mode_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  KqElement(QMode mode, std::int64_t shift, QPolynomial num, QPolynomial den);
  void normalize();

  QMode mode_;
  std::int64_t shift_ = 0;
  QPolynomial num_;
  QPolynomial den_ = QPolynomial::constant(1);
};

enum class IntegralityRing { Z, ZLaurent, ZSqrt2 };

std::string to_string(IntegralityRing ring);
/// "Z", "Z-Laurent", "Z-adjoin-sqrt2".
IntegralityRing parse_ring(std::string_view text);

/// a + b*sqrt2 with a, b in K_q.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : a_(c) {}  // NOLINT
  Scalar(const mpq_class& c) : a_(c) {}  // NOLINT
  Scalar(KqElement a) : a_(std::move(a)) {}  // NOLINT
  Scalar(KqElement a, KqElement b);

  static Scalar sqrt2() { return Scalar(KqElement(), KqElement(1)); }
  static Scalar q_power(std::int64_t k, QMode mode) { return Scalar(KqElement::q_power(k, mode)); }

  /// Parses the text rendering ("3*q^-2 - 1", "1 + sqrt2", "(q + 1)/(q^2 + 1)").
  static Scalar parse(std::string_view text, QMode mode);

  const KqElement& rational_part() const { return a_; }
  const KqElement& sqrt2_part() const { return b_; }
  QMode mode() const;

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const;
  std::optional<mpq_class> as_rational() const;
  bool is_integral(IntegralityRing ring) const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar conjugate() const { return Scalar(a_, -b_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  KqElement a_;
  KqElement b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace eala
