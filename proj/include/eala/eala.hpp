#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "eala/jordan.hpp"
#include "eala/tkk.hpp"

namespace eala {

/// chi^mu acts on the Jordan torus by x^l -> x^(l+mu); it is centroidal when it
/// maps the support onto itself and commutes with every left multiplication.
bool is_centroidal(const JordanTorusSpec& spec, const LatticeVector& mu);

/// chi^mu on TKK(J): shifts x and y-bar, composes on operators.
TkkElement shift_tkk(const JordanTorusSpec& spec, const LatticeVector& mu, const TkkElement& a);

struct CentralGradingGroup {
  int radius = 0;
  std::vector<LatticeVector> members;
  /// Closed under negation and under addition within the window.
  bool closed = false;
  /// "{0}", "L", "2L", "3L", ... when the members are n*Lambda cut to the window; "other" otherwise.
  std::string label;
};
CentralGradingGroup central_grading_group(const JordanTorusSpec& spec, int radius);

/// Basis label of D = SCDer(g) or of its graded dual. For mu != 0, index 0
/// names chi^mu d_{theta_mu} (resp. c^mu); for mu = 0, index 1 and 2 name
/// d_{theta_i} (resp. c^i).
struct DerKey {
  LatticeVector mu;
  int index = 0;
  friend auto operator<=>(const DerKey&, const DerKey&) = default;
  friend bool operator==(const DerKey&, const DerKey&) = default;
  std::string to_string() const;
};
/// Functional theta_mu, or theta_i for mu = 0.
IntegralFunctional der_theta(const DerKey& k);
/// The derivation that c^k pairs with: c^mu <-> chi^-mu, c^i <-> d_theta_i.
DerKey dual_key(const DerKey& c);

/// g + C + D with kappa = 0.
class EalaElement {
 public:
  EalaElement() = default;
  explicit EalaElement(TkkElement g) : g_(std::move(g)) {}
  static EalaElement derivation(const DerKey& k, const Scalar& c = Scalar(1));
  static EalaElement central(const DerKey& k, const Scalar& c = Scalar(1));

  const TkkElement& g() const { return g_; }
  const std::map<DerKey, Scalar>& c() const { return c_; }
  const std::map<DerKey, Scalar>& d() const { return d_; }
  bool is_zero() const { return g_.is_zero() && c_.empty() && d_.empty(); }
  /// Every lattice degree with a nonzero piece (c^mu has degree mu).
  std::vector<LatticeVector> degrees() const;
  void add_c(const DerKey& k, const Scalar& v);
  void add_d(const DerKey& k, const Scalar& v);

  EalaElement operator-() const;
  EalaElement& operator+=(const EalaElement& o);
  EalaElement& operator-=(const EalaElement& o);
  EalaElement& operator*=(const Scalar& s);
  friend EalaElement operator+(EalaElement a, const EalaElement& b) { return a += b; }
  friend EalaElement operator-(EalaElement a, const EalaElement& b) { return a -= b; }
  friend EalaElement operator*(const Scalar& s, EalaElement a) { return a *= s; }
  friend bool operator==(const EalaElement& a, const EalaElement& b) {
    return a.g_ == b.g_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

  std::string to_string() const;

 private:
  TkkElement g_;
  std::map<DerKey, Scalar> c_;
  std::map<DerKey, Scalar> d_;
};

/// Action of a derivation combination on g.
TkkElement apply_derivation(const JordanTorusSpec& spec, const std::map<DerKey, Scalar>& d, const TkkElement& x);
/// c_D(x, y) in the c basis: the functional d -> (d(x) | y).
std::map<DerKey, Scalar> central_cocycle(const JordanTorusSpec& spec, const TkkElement& x, const TkkElement& y);

EalaElement e_bracket(const JordanTorusSpec& spec, const EalaElement& a, const EalaElement& b);
Scalar e_form(const JordanTorusSpec& spec, const EalaElement& a, const EalaElement& b);

struct IsotropicDim {
  int op_dim = 0;
  int d_dim = 0;
  int c_dim = 0;
  /// op_dim did not grow when the tau window was enlarged by one.
  bool stable = false;
  int total() const { return op_dim + d_dim + c_dim; }
};

/// Dimension of the root space at the isotropic root sigma != 0: the span of
/// L_{x^sigma} and [L_{x^(sigma+tau)}, L_{x^-tau}] for |tau| <= tau_radius,
/// plus the derivation and dual parts.
IsotropicDim isotropic_dim(const JordanTorusSpec& spec, const LatticeVector& sigma, int tau_radius);

struct ClosedFormDim {
  int op_dim = 0;
  std::string tag;
};
/// Operator-part dimension predicted by the family and the class of sigma.
ClosedFormDim closed_form_dim(const JordanTorusSpec& spec, const LatticeVector& sigma);

/// ev(l)(d_theta) = theta(l) separates the points of the window.
bool evaluation_map_injective(const std::vector<IntegralFunctional>& d0, int radius);
bool check_permissible(const JordanTorusSpec& spec, int radius = 5);

}  // namespace eala
