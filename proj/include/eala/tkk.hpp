#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eala/jordan.hpp"
#include "eala/operator.hpp"

namespace eala {

/// x + E + y-bar in J + Instrl(J) + J-bar.
class TkkElement {
 public:
  TkkElement() = default;
  TkkElement(JordanElement plus, OperatorSum mid, JordanElement minus)
      : plus_(std::move(plus)), mid_(std::move(mid)), minus_(std::move(minus)) {}
  static TkkElement from_plus(JordanElement x) { return {std::move(x), {}, {}}; }
  static TkkElement from_mid(OperatorSum e) { return {{}, std::move(e), {}}; }
  static TkkElement from_minus(JordanElement y) { return {{}, {}, std::move(y)}; }

  const JordanElement& plus() const { return plus_; }
  const OperatorSum& mid() const { return mid_; }
  const JordanElement& minus() const { return minus_; }
  bool is_zero() const { return plus_.is_zero() && mid_.is_zero() && minus_.is_zero(); }

  /// Lambda-graded piece: x^lambda, the degree-lambda operators, y-bar^lambda.
  TkkElement component(const LatticeVector& lambda) const;
  /// Every lattice degree carrying a nonzero piece.
  std::vector<LatticeVector> degrees() const;

  TkkElement operator-() const;
  TkkElement& operator+=(const TkkElement& o);
  TkkElement& operator-=(const TkkElement& o);
  TkkElement& operator*=(const Scalar& c);
  friend TkkElement operator+(TkkElement a, const TkkElement& b) { return a += b; }
  friend TkkElement operator-(TkkElement a, const TkkElement& b) { return a -= b; }
  friend TkkElement operator*(const Scalar& c, TkkElement a) { return a *= c; }
  friend bool operator==(const TkkElement& a, const TkkElement& b) {
    return a.plus_ == b.plus_ && a.mid_ == b.mid_ && a.minus_ == b.minus_;
  }

  /// "(plus | mid | minus)".
  std::string to_string() const;

 private:
  JordanElement plus_;
  OperatorSum mid_;
  JordanElement minus_;
};

/// x triangle y = L_{xy} + [L_x, L_y].
OperatorSum triangle(const JordanTorusSpec& spec, const JordanElement& x, const JordanElement& y);
/// -L_{E(1)} + (E - L_{E(1)}).
OperatorSum involution(const JordanTorusSpec& spec, const OperatorSum& e);

TkkElement tkk_bracket(const JordanTorusSpec& spec, const TkkElement& a, const TkkElement& b);

/// Writes a degree-mu inner derivation as sum c_tau [L_{x^(mu+tau)}, L_{x^-tau}];
/// throws std::domain_error if the operator kills nothing it should or lies
/// outside the span of those commutators.
std::vector<std::pair<LatticeVector, Scalar>> commutator_presentation(const JordanTorusSpec& spec,
                                                                      const HomOperator& d);

/// (D, [L_a, L_b]) = eps((D a) b).
Scalar pair_with_commutator(const JordanTorusSpec& spec, const OperatorSum& d, const JordanElement& a,
                            const JordanElement& b);

/// Invariant form on Instrl(J): (L_x, L_y) = eps(xy), L-parts orthogonal to
/// inner derivations, derivations paired through a commutator presentation.
Scalar instrl_form(const JordanTorusSpec& spec, const OperatorSum& e1, const OperatorSum& e2);

/// (x1, z2) + (x2, z1) + (E1, E2).
Scalar tkk_form(const JordanTorusSpec& spec, const TkkElement& a, const TkkElement& b);

bool jacobi_check(const JordanTorusSpec& spec, const TkkElement& a, const TkkElement& b, const TkkElement& c);

/// Plus part for m = 1, mid for m = 0, minus for m = -1, zero otherwise.
TkkElement q_grading_component(const TkkElement& a, int m);

}  // namespace eala
