#include <gtest/gtest.h>

#include "eala/tkk.hpp"
#include "support/sampling.hpp"

using namespace eala;
using eala::testing::Rng;

namespace {

JordanTorusSpec js() { return JordanTorusSpec::parse("semilattice:S:v=2,cosets=00+10+01"); }
JordanTorusSpec jl() { return JordanTorusSpec::parse("semilattice:S:full,v=2"); }
JordanTorusSpec kq() { return JordanTorusSpec::parse("quantum:q=formal"); }

std::vector<JordanTorusSpec> families() {
  return {js(),
          jl(),
          kq(),
          JordanTorusSpec::parse("quantum:q=root:2"),
          JordanTorusSpec::parse("quantum:q=root:3"),
          JordanTorusSpec::parse("hermitian:sign=-1"),
          JordanTorusSpec::parse("laurent")};
}

LatticeVector v(std::int64_t a, std::int64_t b) { return LatticeVector{a, b}; }
JordanElement x(std::int64_t a, std::int64_t b) { return JordanElement::monomial(v(a, b)); }
const LatticeVector kZero = LatticeVector::zero(2);

}  // namespace

TEST(Tkk, BracketExamples) {
  const auto spec = js();
  const auto one = TkkElement::from_plus(x(0, 0));
  const auto one_bar = TkkElement::from_minus(x(0, 0));
  EXPECT_TRUE(tkk_bracket(spec, TkkElement::from_plus(x(1, 0)), TkkElement::from_plus(x(0, 1))).is_zero());
  EXPECT_EQ(tkk_bracket(spec, one, one_bar), TkkElement::from_mid(left_mult(spec, kZero)));
  const auto l1 = TkkElement::from_mid(identity_operator(spec));
  EXPECT_EQ(tkk_bracket(spec, l1, TkkElement::from_plus(x(2, 1))), TkkElement::from_plus(x(2, 1)));
  EXPECT_EQ(tkk_bracket(spec, l1, TkkElement::from_minus(x(2, 1))), TkkElement::from_minus(-x(2, 1)));
}

TEST(Tkk, FormExamples) {
  const auto spec = js();
  EXPECT_EQ(tkk_form(spec, TkkElement::from_plus(x(1, 0)), TkkElement::from_minus(x(-1, 0))), Scalar(1));
  const auto l1 = TkkElement::from_mid(identity_operator(spec));
  EXPECT_EQ(tkk_form(spec, l1, l1), Scalar(1));
  EXPECT_TRUE(tkk_form(spec, TkkElement::from_plus(x(1, 0)), TkkElement::from_plus(x(-1, 0))).is_zero());
}

TEST(Tkk, QGrading) {
  const TkkElement a(x(1, 0), left_mult(jl(), v(0, 1)), x(2, 2));
  EXPECT_EQ(q_grading_component(a, 1), TkkElement::from_plus(x(1, 0)));
  EXPECT_EQ(q_grading_component(a, 0), TkkElement::from_mid(left_mult(jl(), v(0, 1))));
  EXPECT_EQ(q_grading_component(a, -1), TkkElement::from_minus(x(2, 2)));
  EXPECT_TRUE(q_grading_component(a, 2).is_zero());
}

TEST(Tkk, AlternatingAndJacobi) {
  Rng rng(31);
  for (const auto& spec : families()) {
    for (int i = 0; i < 30; ++i) {
      const auto a = eala::testing::random_tkk_element(rng, spec, 2);
      const auto b = eala::testing::random_tkk_element(rng, spec, 2);
      const auto c = eala::testing::random_tkk_element(rng, spec, 2);
      EXPECT_TRUE(tkk_bracket(spec, a, a).is_zero());
      EXPECT_EQ(tkk_bracket(spec, a, b), -tkk_bracket(spec, b, a));
      EXPECT_TRUE(jacobi_check(spec, a, b, c)) << spec.descriptor() << "\n"
                                               << a.to_string() << "\n"
                                               << b.to_string() << "\n"
                                               << c.to_string();
    }
  }
}

TEST(Tkk, GradingCompatibility) {
  Rng rng(32);
  for (const auto& spec : families()) {
    for (int i = 0; i < 40; ++i) {
      const auto a = eala::testing::random_tkk_element(rng, spec, 2);
      const auto b = eala::testing::random_tkk_element(rng, spec, 2);
      const auto c = tkk_bracket(spec, a, b);
      if (c.is_zero()) continue;
      const auto degs = c.degrees();
      ASSERT_EQ(degs.size(), 1U);
      EXPECT_EQ(degs.front(), a.degrees().front() + b.degrees().front());
      for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
          const auto part = tkk_bracket(spec, q_grading_component(a, m), q_grading_component(b, n));
          if (m + n < -1 || m + n > 1) EXPECT_TRUE(part.is_zero());
          else EXPECT_EQ(part, q_grading_component(part, m + n));
        }
    }
  }
}

TEST(Tkk, FormSymmetricAndInvariant) {
  Rng rng(33);
  for (const auto& spec : families()) {
    for (int i = 0; i < 30; ++i) {
      const auto a = eala::testing::random_tkk_element(rng, spec, 2);
      const auto b = eala::testing::random_tkk_element(rng, spec, 2);
      const auto c = eala::testing::random_tkk_element(rng, spec, 2);
      EXPECT_EQ(tkk_form(spec, a, b), tkk_form(spec, b, a)) << spec.descriptor();
      EXPECT_EQ(tkk_form(spec, tkk_bracket(spec, a, b), c), tkk_form(spec, a, tkk_bracket(spec, b, c)))
          << spec.descriptor() << "\n"
          << a.to_string() << "\n"
          << b.to_string() << "\n"
          << c.to_string();
    }
  }
}

TEST(Tkk, FormIndependentOfCommutatorPresentation) {
  // Both sides of [L_s, L_t] = [L_{s+t+t'}, L_{-t'}] pair identically with any D.
  for (const auto& spec : {js(), jl()}) {
    for (const auto& s : window(2, 2)) {
      if (!spec.in_support(s)) continue;
      for (const auto& t : window(2, 1)) {
        if (!spec.in_support(t)) continue;
        const LatticeVector tp = t + 2 * v(1, -1);
        const OperatorSum d = commutator(left_mult(spec, -s - v(1, 1)), left_mult(spec, -t + v(1, 1)));
        const Scalar lhs = pair_with_commutator(spec, d, JordanElement::monomial(s), JordanElement::monomial(t));
        const Scalar rhs = pair_with_commutator(spec, d, JordanElement::monomial(s + t + tp), JordanElement::monomial(-tp));
        EXPECT_EQ(lhs, rhs);
        const OperatorSum c = commutator(left_mult(spec, s), left_mult(spec, t));
        EXPECT_EQ(instrl_form(spec, d, c), lhs);
      }
    }
  }
}

TEST(Tkk, CommutatorPresentationReproducesOperator) {
  Rng rng(34);
  for (const auto& spec : families()) {
    for (int i = 0; i < 20; ++i) {
      const LatticeVector l = eala::testing::random_vector(rng, 2, 3);
      const LatticeVector t = eala::testing::random_vector(rng, 2, 2);
      const HomOperator d = commutator(left_mult(spec, l + t), left_mult(spec, -t));
      OperatorSum rebuilt(2, spec.q_mode());
      for (const auto& [tau, k] : commutator_presentation(spec, d))
        rebuilt += k * OperatorSum(commutator(left_mult(spec, l + tau), left_mult(spec, -tau)));
      EXPECT_EQ(rebuilt, OperatorSum(d));
    }
  }
  EXPECT_THROW(commutator_presentation(jl(), left_mult(jl(), v(1, 0))), std::domain_error);
}

TEST(Tkk, PairingAgainstUnitDual) {
  // ([x^s, 1-bar], [x-bar^-s, 1]) = -1: the isotropic pairing is nondegenerate.
  for (const auto& spec : families()) {
    for (const auto& s : window(2, 2)) {
      if (!spec.in_support(s)) continue;
      const auto a = tkk_bracket(spec, TkkElement::from_plus(JordanElement::monomial(s)), TkkElement::from_minus(x(0, 0)));
      const auto b = tkk_bracket(spec, TkkElement::from_minus(JordanElement::monomial(-s)), TkkElement::from_plus(x(0, 0)));
      EXPECT_EQ(tkk_form(spec, a, b), Scalar(-1) * spec.mult_coeff(s, -s)) << spec.descriptor() << " " << s.to_string();
    }
  }
}
