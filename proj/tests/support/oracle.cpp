#include "support/oracle.hpp"

namespace eala::testing {

namespace {

Scalar assoc_coeff(const LatticeVector& a, const LatticeVector& b, QMode mode) {
  return Scalar::q_power(b[1] * a[0], mode);
}

Scalar jordan_coeff(const JordanTorusSpec& spec, const LatticeVector& a, const LatticeVector& b) {
  if (!spec.in_support(a) || !spec.in_support(b)) return Scalar();
  if (spec.family() == JordanFamily::Semilattice) return Scalar(spec.class_gamma(coset_of(a), coset_of(b)));
  return Scalar(mpq_class(1, 2)) * (assoc_coeff(a, b, spec.q_mode()) + assoc_coeff(b, a, spec.q_mode()));
}

}  // namespace

JordanElement oracle_apply(const JordanTorusSpec& spec, const OperatorExpr& expr, const JordanElement& x) {
  using Kind = OperatorExpr::Kind;
  JordanElement out;
  switch (expr.kind()) {
    case Kind::Left:
      for (const auto& [g, c] : x.terms()) out.add_term(expr.vector() + g, c * jordan_coeff(spec, expr.vector(), g));
      return out;
    case Kind::Right:
      for (const auto& [g, c] : x.terms())
        if (spec.in_support(g) && spec.in_support(g + expr.vector()))
          out.add_term(g + expr.vector(), c * assoc_coeff(g, expr.vector(), spec.q_mode()));
      return out;
    case Kind::Shift:
      for (const auto& [g, c] : x.terms())
        if (spec.in_support(g) && spec.in_support(g + expr.vector())) out.add_term(g + expr.vector(), c);
      return out;
    case Kind::Compose:
      return oracle_apply(spec, expr.children()[0], oracle_apply(spec, expr.children()[1], x));
    case Kind::Commutator: {
      const auto& a = expr.children()[0];
      const auto& b = expr.children()[1];
      return oracle_apply(spec, a, oracle_apply(spec, b, x)) - oracle_apply(spec, b, oracle_apply(spec, a, x));
    }
    case Kind::Sum:
      for (const auto& k : expr.children()) out += oracle_apply(spec, k, x);
      return out;
    case Kind::Scale: return expr.scalar() * oracle_apply(spec, expr.children()[0], x);
  }
  return out;
}

long oracle_compare(const JordanTorusSpec& spec, const OperatorExpr& expr, int radius) {
  const OperatorSum symbolic = lower(spec, expr);
  long n = 0;
  for (const auto& g : window(spec.nu(), radius)) {
    if (!spec.in_support(g)) continue;
    const JordanElement x = JordanElement::monomial(g);
    if (symbolic.apply(x) != oracle_apply(spec, expr, x)) return -1;
    ++n;
  }
  return n;
}

}  // namespace eala::testing
