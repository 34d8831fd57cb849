#include "support/sampling.hpp"

namespace eala::testing {

namespace {

KqElement random_kq(Rng& rng, QMode mode) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> expo(-3, 3);
  std::uniform_int_distribution<int> count(0, 3);
  KqElement out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    KqElement c(mpq_class(coef(rng), den(rng)));
    if (!mode.is_generic()) c = c * KqElement::q_power(expo(rng), mode);
    out = out + c;
  }
  if (!mode.is_generic() && std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
    KqElement d = KqElement::q_power(1, mode) + KqElement(coef(rng) == 0 ? 2 : 3);
    if (!d.is_zero()) out = out / d;
  }
  return out;
}

}  // namespace

Scalar random_scalar(Rng& rng, QMode mode) { return Scalar(random_kq(rng, mode), random_kq(rng, mode)); }

LatticeVector random_vector(Rng& rng, int rank, int radius) {
  std::uniform_int_distribution<int> d(-radius, radius);
  LatticeVector v(rank);
  for (int i = 0; i < rank; ++i) v[i] = d(rng);
  return v;
}

LatticeVector random_support_vector(Rng& rng, const JordanTorusSpec& spec, int radius) {
  for (;;) {
    LatticeVector v = random_vector(rng, spec.nu(), radius);
    if (spec.in_support(v)) return v;
  }
}

TkkElement random_tkk_element(Rng& rng, const JordanTorusSpec& spec, int radius) {
  const Scalar c(std::uniform_int_distribution<int>(1, 3)(rng));
  for (;;) {
    const LatticeVector l = random_vector(rng, spec.nu(), radius);
    TkkElement out;
    switch (std::uniform_int_distribution<int>(0, spec.is_quantum_like() ? 4 : 3)(rng)) {
      case 0:
        if (spec.in_support(l)) out = TkkElement::from_plus(JordanElement::monomial(l, c));
        break;
      case 1:
        if (spec.in_support(l)) out = TkkElement::from_minus(JordanElement::monomial(l, c));
        break;
      case 2: out = TkkElement::from_mid(c * OperatorSum(left_mult(spec, l))); break;
      case 3: {
        const LatticeVector t = random_vector(rng, spec.nu(), 1);
        out = TkkElement::from_mid(c * OperatorSum(commutator(left_mult(spec, l + t), left_mult(spec, -t))));
        break;
      }
      default: out = TkkElement::from_mid(c * OperatorSum(right_translation(spec, l))); break;
    }
    if (!out.is_zero()) return out;
  }
}

EalaElement random_eala_element(Rng& rng, const JordanTorusSpec& spec, int radius) {
  const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
  if (kind <= 1) return EalaElement(random_tkk_element(rng, spec, radius));
  const Scalar c(std::uniform_int_distribution<int>(1, 3)(rng));
  LatticeVector mu = random_vector(rng, spec.nu(), radius);
  if (!is_centroidal(spec, mu)) mu = LatticeVector::zero(spec.nu());
  const DerKey key{mu, mu.is_zero() ? std::uniform_int_distribution<int>(1, 2)(rng) : 0};
  return kind == 2 ? EalaElement::derivation(key, c) : EalaElement::central(key, c);
}

}  // namespace eala::testing
