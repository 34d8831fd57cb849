#include <gtest/gtest.h>

#include "eala/lattice.hpp"

using namespace eala;

namespace {
const Semilattice kThree = Semilattice::parse("S:v=2,cosets=00+10+01");
const Semilattice kFull = Semilattice::parse("S:full,v=2");
CosetClass cls(const char* s) { return CosetClass::parse(s); }
}  // namespace

TEST(Lattice, CosetOf) {
  EXPECT_EQ(coset_of(LatticeVector{0, 0}).to_string(), "00");
  EXPECT_EQ(coset_of(LatticeVector{3, 2}).to_string(), "10");
  EXPECT_EQ(coset_of(LatticeVector{-1, -1}).to_string(), "11");
  EXPECT_EQ(coset_of(LatticeVector{1, 0} + LatticeVector{0, 3}), cls("10") + cls("01"));
}

TEST(Lattice, GammaValues) {
  EXPECT_EQ(gamma(cls("00"), cls("00"), kThree), 1);
  EXPECT_EQ(gamma(cls("10"), cls("01"), kThree), 0);
  EXPECT_EQ(gamma(cls("11"), cls("10"), kThree), 0);
  EXPECT_EQ(gamma(cls("10"), cls("10"), kThree), 1);
  EXPECT_EQ(gamma(cls("00"), cls("01"), kThree), 1);
  EXPECT_EQ(gamma(cls("11"), cls("11"), kFull), 1);
}

TEST(Lattice, GammaIdentitiesAllRanks) {
  for (int nu = 1; nu <= 3; ++nu) {
    for (std::uint32_t mask = 1; mask < (1U << (1U << nu)); mask += 2) {
      std::vector<CosetClass> classes;
      for (auto c : CosetClass::all(nu))
        if ((mask >> c.bits()) & 1U) classes.push_back(c);
      Semilattice s;
      try {
        s = Semilattice::from_classes(nu, classes);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (auto a : CosetClass::all(nu)) {
        for (auto b : CosetClass::all(nu)) {
          EXPECT_EQ(gamma(a, b, s), gamma(b, a, s));
          if (s.contains(a) && s.contains(b) && !s.contains(a + b)) EXPECT_EQ(gamma(a, b, s), 0);
        }
      }
      const CosetClass zero(nu, 0);
      for (auto i : s.classes()) {
        EXPECT_EQ(gamma(zero, zero + i, s), 1);
        EXPECT_EQ(gamma(i, zero + i, s), 1);
        for (auto j : s.classes()) EXPECT_EQ(gamma(i, j + j, s), 1);
      }
      // S is stable under shifts by twice its span.
      for (const auto& v : window(nu, 2))
        if (s.contains(v))
          for (const auto& w : window(nu, 1)) EXPECT_TRUE(s.contains(v + 2 * w));
    }
  }
}

TEST(Lattice, SemilatticeValidation) {
  EXPECT_THROW(Semilattice::parse("S:v=2,cosets=00"), std::invalid_argument);
  EXPECT_THROW(Semilattice::parse("S:v=2,cosets=10+01"), std::invalid_argument);
  EXPECT_THROW(Semilattice::parse("S:v=2,cosets=00+11"), std::invalid_argument);
  EXPECT_THROW(Semilattice::parse("T:v=2"), std::invalid_argument);
  EXPECT_NO_THROW(Semilattice::parse("S:v=2,cosets=00+11+10"));
  EXPECT_EQ(kThree.descriptor(), "S:v=2,cosets=00+10+01");
  EXPECT_EQ(kFull.descriptor(), "S:full,v=2");
  EXPECT_EQ(Semilattice::parse("S:v=2,cosets=00+10+01+11"), kFull);
}

TEST(Lattice, ThetaSigma) {
  EXPECT_EQ(theta_sigma(LatticeVector{1, 0}).coeffs(), (LatticeVector{0, -1}));
  EXPECT_EQ(theta_sigma(LatticeVector{1, 0})(LatticeVector{1, 0}), 0);
  EXPECT_EQ(theta_sigma(LatticeVector{1, 1}).coeffs(), (LatticeVector{1, -1}));
  EXPECT_EQ(theta_sigma(LatticeVector{2, 2}).coeffs(), (LatticeVector{2, -2}));
  EXPECT_THROW(theta_sigma(LatticeVector{0, 0}), std::invalid_argument);
}

TEST(Lattice, ThetaIdentities) {
  for (const auto& mu : window(2, 3)) {
    if (mu.is_zero()) continue;
    EXPECT_EQ(theta_sigma(mu)(mu), 0);
    for (const auto& nu : window(2, 3)) {
      if (nu.is_zero()) continue;
      EXPECT_EQ(theta_sigma(mu)(nu), -theta_sigma(nu)(mu));
      if (!(mu + nu).is_zero()) EXPECT_EQ(theta_sigma(mu) + theta_sigma(nu), theta_sigma(mu + nu));
    }
  }
}

TEST(Lattice, RootWindows) {
  const auto r0 = roots_in_window(kFull, 0);
  ASSERT_EQ(r0.size(), 3U);
  EXPECT_EQ(r0[0].to_string(), "-a+(0,0)");
  EXPECT_EQ(r0[1].to_string(), "(0,0)");
  EXPECT_EQ(r0[2].to_string(), "a+(0,0)");
  const auto r1 = roots_in_window(kThree, 1);
  EXPECT_NE(std::find(r1.begin(), r1.end(), Root{0, LatticeVector{1, 1}}), r1.end());
  EXPECT_EQ(std::find(r1.begin(), r1.end(), Root{1, LatticeVector{1, 1}}), r1.end());
  // 9 isotropic points; S misses the four points of class 11.
  EXPECT_EQ(r1.size(), 9U + 5U + 5U);
  EXPECT_EQ(Root::parse("-a+(1,-2)"), (Root{-1, LatticeVector{1, -2}}));
}

TEST(Lattice, AxiomsOnWindows) {
  for (const auto& s : {kThree, kFull}) {
    for (int radius : {1, 2, 3}) {
      const AxiomReport rep = check_ears_axioms_window(s, radius);
      EXPECT_TRUE(rep.passed());
      ASSERT_EQ(rep.checks.size(), 8U);
      EXPECT_EQ(rep.checks[4].status, "structural");
      for (const auto& c : rep.checks) EXPECT_NE(c.status, "fail") << c.axiom << " " << c.witness;
    }
  }
}

TEST(Lattice, RootStringThroughAlpha) {
  // beta = alpha + lambda along alpha: {i : beta + i alpha in R} = {-2, -1, 0}.
  const Root beta{1, LatticeVector{2, 0}};
  std::vector<int> hits;
  for (int i = -3; i <= 3; ++i)
    if (is_root(kThree, beta.m + i, beta.lambda)) hits.push_back(i);
  EXPECT_EQ(hits, (std::vector<int>{-2, -1, 0}));
}

TEST(Lattice, ParseVectors) {
  EXPECT_EQ(LatticeVector::parse("(1,-2)"), (LatticeVector{1, -2}));
  EXPECT_EQ(LatticeVector::parse(" ( 3 , 4 ) "), (LatticeVector{3, 4}));
  EXPECT_THROW(LatticeVector::parse("1,2"), std::invalid_argument);
  EXPECT_EQ(window(2, 1).size(), 9U);
  EXPECT_EQ(window(3, 2).size(), 125U);
}
