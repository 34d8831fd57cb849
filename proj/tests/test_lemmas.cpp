#include <gtest/gtest.h>

#include "eala/lemmas.hpp"

using namespace eala;

namespace {

void expect_all_pass(const LemmaReport& rep) {
  for (const auto& l : rep.lemmas) {
    EXPECT_GT(l.instances, 0U) << l.name;
    EXPECT_TRUE(l.passed()) << rep.family << " " << l.name << ": " << l.counterexamples.front();
  }
}

}  // namespace

TEST(Lemmas, RankTwoSemilattices) {
  expect_all_pass(verify_structure_lemmas(JordanTorusSpec::parse("semilattice:S:v=2,cosets=00+10+01"), 2, 1));
  expect_all_pass(verify_structure_lemmas(JordanTorusSpec::parse("semilattice:S:full,v=2"), 2, 1));
}

TEST(Lemmas, RankThreeSemilattices) {
  expect_all_pass(verify_structure_lemmas(JordanTorusSpec::parse("semilattice:S:full,v=3"), 2, 5));
  expect_all_pass(
      verify_structure_lemmas(JordanTorusSpec::parse("semilattice:S:v=3,cosets=000+100+010+001"), 2, 5));
  expect_all_pass(
      verify_structure_lemmas(JordanTorusSpec::parse("semilattice:S:v=3,cosets=000+100+010+001+110"), 2, 5));
}

TEST(Lemmas, SignTable) {
  const CosetClass z(2, 0), a(2, 1), b(2, 2);
  EXPECT_EQ(double_commutator_sign(a, a), 0);
  EXPECT_EQ(double_commutator_sign(z, a), 0);
  EXPECT_EQ(double_commutator_sign(a, z), 0);
  EXPECT_EQ(double_commutator_sign(a, b), 1);
}

TEST(Lemmas, FaultIsDetectedWithWitness) {
  const auto bad = JordanTorusSpec::parse("semilattice:S:full,v=2").with_fault();
  const LemmaReport rep = verify_structure_lemmas(bad, 2, 1);
  EXPECT_FALSE(rep.passed());
  bool witnessed = false;
  for (const auto& l : rep.lemmas)
    if (!l.passed()) witnessed = l.counterexamples.front().find("=(") != std::string::npos;
  EXPECT_TRUE(witnessed);
}

TEST(Lemmas, Deterministic) {
  const auto spec = JordanTorusSpec::parse("semilattice:S:full,v=3");
  const auto a = verify_structure_lemmas(spec.with_fault(), 2, 9);
  const auto b = verify_structure_lemmas(spec.with_fault(), 2, 9);
  ASSERT_EQ(a.lemmas.size(), b.lemmas.size());
  for (std::size_t i = 0; i < a.lemmas.size(); ++i) {
    EXPECT_EQ(a.lemmas[i].instances, b.lemmas[i].instances);
    EXPECT_EQ(a.lemmas[i].counterexamples, b.lemmas[i].counterexamples);
  }
}

TEST(Lemmas, RejectsOtherFamilies) {
  EXPECT_THROW(verify_structure_lemmas(JordanTorusSpec::parse("laurent"), 2, 1), std::invalid_argument);
}
