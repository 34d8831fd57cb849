#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eala/lattice.hpp"
#include "eala/scalar.hpp"

namespace eala {

enum class JordanFamily { Semilattice, QuantumPlus, Hermitian };

/// One of the three Jordan torus families, described by its support and the
/// multiplication coefficient m with x^a * x^b = m(a, b) x^(a+b).
class JordanTorusSpec {
 public:
  static JordanTorusSpec semilattice_torus(const Semilattice& s);
  static JordanTorusSpec quantum_plus(QMode mode);
  /// sign +1: Laurent polynomials with the identity involution; sign -1: the
  /// hermitian part of the quantum torus at q = -1.
  static JordanTorusSpec hermitian(int sign);
  /// "semilattice:S:v=2,cosets=00+10+01", "quantum:q=formal", "quantum:q=root:2",
  /// "hermitian:sign=-1", "laurent"; an optional "jordan=" prefix is accepted.
  static JordanTorusSpec parse(std::string_view descriptor);

  JordanFamily family() const { return family_; }
  int nu() const { return nu_; }
  int sign() const { return sign_; }
  const Semilattice& semilattice() const { return semilattice_; }
  /// The q-mode in which coefficients live: generic for semilattice tori,
  /// root:1 and root:2 for the two hermitian families.
  QMode q_mode() const { return mode_; }
  std::string descriptor() const;

  bool in_support(CosetClass c) const { return support_.contains(c); }
  bool in_support(const LatticeVector& v) const { return support_.contains(v); }
  /// The support as a union of cosets.
  const Semilattice& support() const { return support_; }
  std::vector<CosetClass> support_classes() const { return support_.classes(); }

  /// Families whose product comes from an associative quantum torus (right translations exist).
  bool is_quantum_like() const { return family_ != JordanFamily::Semilattice; }

  /// Gamma of the semilattice torus, including the injected fault if enabled.
  int class_gamma(CosetClass a, CosetClass b) const;
  Scalar mult_coeff(const LatticeVector& lambda, const LatticeVector& mu) const;

  /// Copy whose multiplication is deliberately wrong (Gamma(S1,S2) = 1); used to
  /// check that the verifiers detect a broken product.
  JordanTorusSpec with_fault() const;
  bool has_fault() const { return fault_; }

  friend bool operator==(const JordanTorusSpec& a, const JordanTorusSpec& b) {
    return a.family_ == b.family_ && a.semilattice_ == b.semilattice_ && a.mode_ == b.mode_ && a.sign_ == b.sign_ &&
           a.fault_ == b.fault_;
  }

 private:
  JordanFamily family_ = JordanFamily::Semilattice;
  int nu_ = 2;
  Semilattice semilattice_;
  Semilattice support_;
  QMode mode_;
  int sign_ = 0;
  bool fault_ = false;
};

/// eta(lambda, mu) = q^(mu_2 * lambda_1) for rank 2.
Scalar eta(const LatticeVector& lambda, const LatticeVector& mu, QMode mode);
/// Exponent of q in eta.
inline std::int64_t eta_exponent(const LatticeVector& lambda, const LatticeVector& mu) { return mu[1] * lambda[0]; }

/// Whether f(lambda, mu) = eta(lambda,mu)/eta(mu,lambda) is 1 for every mu.
bool rad_f_contains(const LatticeVector& lambda, QMode mode);
bool hermitian_support(const LatticeVector& lambda, int sign);

/// Finitely supported element sum c_a x^a.
class JordanElement {
 public:
  JordanElement() = default;
  static JordanElement monomial(const LatticeVector& lambda, Scalar c = Scalar(1));

  const std::map<LatticeVector, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const LatticeVector& lambda) const;
  void add_term(const LatticeVector& lambda, const Scalar& c);

  JordanElement operator-() const;
  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  JordanElement& operator*=(const Scalar& c);
  friend JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
  friend JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
  friend JordanElement operator*(const Scalar& c, JordanElement a) { return a *= c; }
  friend bool operator==(const JordanElement&, const JordanElement&) = default;

  /// "2*x^(1,0) + sqrt2*x^(0,1)".
  std::string to_string() const;

 private:
  std::map<LatticeVector, Scalar> terms_;
};

JordanElement multiply(const JordanTorusSpec& spec, const JordanElement& x, const JordanElement& y);
/// Coefficient of the unit x^0.
Scalar epsilon(const JordanElement& x);

/// Scalar multiple rendered as a prefix: "" for 1, "-" for -1, "c*" otherwise.
std::string coefficient_prefix(const Scalar& c);

}  // namespace eala
