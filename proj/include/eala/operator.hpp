#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eala/jordan.hpp"
#include "eala/lattice.hpp"
#include "eala/scalar.hpp"

namespace eala {

/// Closed-form coefficient function gamma -> sum over terms whose coset matches
/// coset_of(gamma) of c * q^(ell . gamma). Canonical: exponents reduced so that
/// distinct keys on one coset are linearly independent functions, no zero terms.
class CoeffFunction {
 public:
  struct Key {
    std::uint32_t coset = 0;
    LatticeVector ell;
    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  CoeffFunction() = default;
  CoeffFunction(int nu, QMode mode) : nu_(nu), mode_(mode) {}

  int nu() const { return nu_; }
  QMode mode() const { return mode_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(CosetClass coset, LatticeVector ell, const Scalar& c);
  Scalar evaluate(const LatticeVector& gamma) const;
  /// gamma -> c(gamma + sigma).
  CoeffFunction translated(const LatticeVector& sigma) const;

  CoeffFunction operator-() const;
  CoeffFunction& operator+=(const CoeffFunction& o);
  CoeffFunction& operator-=(const CoeffFunction& o);
  CoeffFunction& operator*=(const Scalar& c);
  friend CoeffFunction operator+(CoeffFunction a, const CoeffFunction& b) { return a += b; }
  friend CoeffFunction operator-(CoeffFunction a, const CoeffFunction& b) { return a -= b; }
  friend CoeffFunction operator*(const Scalar& c, CoeffFunction a) { return a *= c; }
  /// Pointwise product.
  friend CoeffFunction operator*(const CoeffFunction& a, const CoeffFunction& b);
  friend bool operator==(const CoeffFunction& a, const CoeffFunction& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int nu_ = 2;
  QMode mode_;
  std::map<Key, Scalar> terms_;
};

/// op(x^gamma) = c(gamma) x^(degree + gamma).
class HomOperator {
 public:
  HomOperator() = default;
  HomOperator(LatticeVector degree, CoeffFunction coeff) : degree_(degree), coeff_(std::move(coeff)) {}

  const LatticeVector& degree() const { return degree_; }
  const CoeffFunction& coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.is_zero(); }

  JordanElement apply(const JordanElement& x) const;

  friend HomOperator compose(const HomOperator& f, const HomOperator& g);
  friend HomOperator commutator(const HomOperator& f, const HomOperator& g);
  friend bool operator==(const HomOperator& a, const HomOperator& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.coeff_ == b.coeff_;
  }

 private:
  LatticeVector degree_;
  CoeffFunction coeff_;
};

/// Finite sum of homogeneous operators keyed by degree.
class OperatorSum {
 public:
  OperatorSum() = default;
  OperatorSum(int nu, QMode mode) : nu_(nu), mode_(mode) {}
  OperatorSum(const HomOperator& op);  // NOLINT

  int nu() const { return nu_; }
  QMode mode() const { return mode_; }
  const std::map<LatticeVector, CoeffFunction>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  HomOperator component(const LatticeVector& degree) const;

  void add(const HomOperator& op);
  JordanElement apply(const JordanElement& x) const;

  OperatorSum operator-() const;
  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator-=(const OperatorSum& o);
  OperatorSum& operator*=(const Scalar& c);
  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(const Scalar& c, OperatorSum a) { return a *= c; }
  friend bool operator==(const OperatorSum& a, const OperatorSum& b) { return a.parts_ == b.parts_; }

  friend OperatorSum compose(const OperatorSum& f, const OperatorSum& g);
  friend OperatorSum commutator(const OperatorSum& f, const OperatorSum& g);

  /// "deg (1,0): <coefficient function>; deg ...", or "0".
  std::string to_string() const;

 private:
  void add_part(const LatticeVector& degree, const CoeffFunction& c);
  int nu_ = 2;
  QMode mode_;
  std::map<LatticeVector, CoeffFunction> parts_;
};

/// L_{x^sigma}; zero if sigma is outside the support.
HomOperator left_mult(const JordanTorusSpec& spec, const LatticeVector& sigma);
OperatorSum left_mult(const JordanTorusSpec& spec, const JordanElement& x);
/// r_sigma(x^gamma) = eta(gamma, sigma) x^(gamma + sigma), restricted to the support.
/// Rejected for semilattice tori.
HomOperator right_translation(const JordanTorusSpec& spec, const LatticeVector& sigma);
/// chi^mu(x^gamma) = x^(gamma + mu) where both lie in the support.
HomOperator shift_operator(const JordanTorusSpec& spec, const LatticeVector& mu);
HomOperator identity_operator(const JordanTorusSpec& spec);

/// Splits E into L_{E(1)} and the remainder, which kills the unit.
struct LDSplit {
  JordanElement x;
  OperatorSum d;
};
LDSplit l_d_split(const JordanTorusSpec& spec, const OperatorSum& e);

}  // namespace eala
