#include <gtest/gtest.h>

#include "eala/chevalley.hpp"
#include "support/sampling.hpp"

using namespace eala;

namespace {

JordanTorusSpec js() { return JordanTorusSpec::parse("semilattice:S:v=2,cosets=00+10+01"); }
JordanTorusSpec jl() { return JordanTorusSpec::parse("semilattice:S:full,v=2"); }
JordanTorusSpec kq() { return JordanTorusSpec::parse("quantum:q=formal"); }

LatticeVector v(std::int64_t a, std::int64_t b) { return LatticeVector{a, b}; }
const LatticeVector kZero = LatticeVector::zero(2);

std::vector<std::string> names(const std::vector<BasisLabel>& row) {
  std::vector<std::string> out;
  for (const auto& l : row) out.push_back(l.to_string());
  return out;
}

EalaElement value(const JordanTorusSpec& spec, const char* label) {
  return label_value(spec, BasisLabel::parse(label));
}

}  // namespace

TEST(Chevalley, LabelRoundTrip) {
  for (const char* text : {"Xplus (1,1)", "Xminus (-2,0)", "Lop (0,1)", "Comm (1,1) by (0,1)", "Rdiff (1,0)",
                           "Rop (1,1)", "Halpha", "DegDer 1", "ChiDer (2,0)", "Dual (2,-2)", "Dual0 2"})
    EXPECT_EQ(BasisLabel::parse(text).to_string(), text);
  EXPECT_THROW(BasisLabel::parse("Xplus"), std::invalid_argument);
  EXPECT_THROW(BasisLabel::parse("DegDer 3"), std::invalid_argument);
  EXPECT_THROW(BasisLabel::parse("Comm (1,1)"), std::invalid_argument);
  EXPECT_THROW(BasisLabel::parse("Nope (1,1)"), std::invalid_argument);
  EXPECT_EQ(BasisLabel::parse("Xminus (1,2)").root(), (Root{-1, v(1, 2)}));
  EXPECT_EQ(BasisLabel::parse("Dual0 1").root(), (Root{0, kZero}));
}

TEST(Chevalley, TableRows) {
  using V = std::vector<std::string>;
  EXPECT_EQ(names(table_row(js(), Root{0, v(1, 1)})), V{"Comm (1,1) by (0,1)"});
  EXPECT_EQ(names(table_row(js(), Root{0, v(1, 0)})), V{"Lop (1,0)"});
  EXPECT_EQ(names(table_row(js(), Root{0, v(2, 0)})), (V{"Lop (2,0)", "ChiDer (2,0)", "Dual (2,0)"}));
  EXPECT_EQ(names(table_row(jl(), Root{0, v(0, 1)})), (V{"Lop (0,1)", "Comm (0,1) by (1,0)"}));
  EXPECT_EQ(names(table_row(jl(), Root{0, v(1, 0)})), (V{"Lop (1,0)", "Comm (1,0) by (0,1)"}));
  EXPECT_EQ(names(table_row(jl(), Root{0, v(1, 1)})), (V{"Lop (1,1)", "Comm (1,1) by (0,1)"}));
  const auto root2 = JordanTorusSpec::parse("quantum:q=root:2");
  EXPECT_EQ(names(table_row(root2, Root{0, v(2, 0)})), (V{"Lop (2,0)", "ChiDer (2,0)", "Dual (2,0)"}));
  EXPECT_EQ(names(table_row(root2, Root{0, v(1, 0)})), (V{"Lop (1,0)", "Rdiff (1,0)"}));
  const auto herm = JordanTorusSpec::parse("hermitian:sign=-1");
  EXPECT_EQ(names(table_row(herm, Root{0, v(1, 1)})), V{"Rop (1,1)"});
  EXPECT_EQ(names(table_row(herm, Root{0, v(1, 0)})), V{"Lop (1,0)"});
  EXPECT_EQ(names(table_row(js(), Root{0, kZero})), (V{"Halpha", "DegDer 1", "DegDer 2", "Dual0 1", "Dual0 2"}));
  EXPECT_EQ(names(table_row(js(), Root{1, v(1, 1)})), V{});
  EXPECT_EQ(names(table_row(js(), Root{-1, v(1, 0)})), V{"Xminus (1,0)"});
}

TEST(Chevalley, SuppressedRowsFollowCentroidTest) {
  for (const auto& spec : {js(), jl(), kq(), JordanTorusSpec::parse("laurent")}) {
    std::vector<SuppressedRow> suppressed;
    for (const auto& l : window(2, 3)) {
      if (l.is_zero()) continue;
      const std::size_t before = suppressed.size();
      table_row(spec, Root{0, l}, &suppressed);
      EXPECT_EQ(suppressed.size() - before, is_centroidal(spec, l) ? 0U : 2U) << spec.descriptor() << l.to_string();
    }
  }
}

TEST(Chevalley, RowSizesMatchIsotropicDims) {
  for (const auto& spec : {js(), jl(), kq(), JordanTorusSpec::parse("quantum:q=root:2"),
                           JordanTorusSpec::parse("hermitian:sign=-1"), JordanTorusSpec::parse("laurent")}) {
    const auto basis = ChevalleyBasis::build(spec, 2);
    for (const auto& l : window(2, 2)) {
      if (l.is_zero()) continue;
      EXPECT_EQ(static_cast<int>(basis.row(Root{0, l}).size()), isotropic_dim(spec, l, 2).total())
          << spec.descriptor() << " " << l.to_string();
    }
  }
}

TEST(Chevalley, ExpressExamples) {
  const auto spec = jl();
  const auto basis = ChevalleyBasis::build(spec, 2);
  const Root zero{0, kZero};
  EXPECT_EQ(*basis.express(value(spec, "Halpha"), zero), (std::vector<Scalar>{1, 0, 0, 0, 0}));
  const EalaElement h = e_bracket(spec, value(spec, "Xplus (0,0)"), value(spec, "Xminus (0,0)"));
  EXPECT_EQ(*basis.express(h, zero), (std::vector<Scalar>{1, 0, 0, 0, 0}));
  const EalaElement c = EalaElement(TkkElement::from_mid(
      OperatorSum(commutator(left_mult(spec, v(1, 1)), left_mult(spec, v(-1, 0))))));
  EXPECT_EQ(*basis.express(c, Root{0, v(0, 1)}), (std::vector<Scalar>{0, 1}));
  EXPECT_FALSE(basis.express(value(spec, "Xplus (1,0)"), Root{0, v(1, 0)}));
  EXPECT_FALSE(basis.express(value(spec, "Lop (1,0)"), Root{0, v(0, 1)}));
}

TEST(Chevalley, ExpressRecoversCombinations) {
  eala::testing::Rng rng(51);
  for (const auto& spec : {js(), jl(), kq(), JordanTorusSpec::parse("hermitian:sign=-1")}) {
    const auto basis = ChevalleyBasis::build(spec, 2);
    for (const auto& root : roots_in_window(spec.support(), 2)) {
      const auto& row = basis.row(root);
      std::vector<Scalar> coeffs;
      EalaElement sum;
      for (const auto& e : row) {
        coeffs.emplace_back(std::uniform_int_distribution<long>(-3, 3)(rng));
        sum += coeffs.back() * e.value;
      }
      EXPECT_EQ(*basis.express(sum, root), coeffs) << spec.descriptor() << " " << root.to_string();
    }
  }
}

TEST(Chevalley, BracketExamples) {
  const auto spec = jl();
  const auto basis = ChevalleyBasis::build(spec, 3);
  const EalaElement b = e_bracket(spec, value(spec, "ChiDer (2,0)"), value(spec, "Xplus (1,1)"));
  EXPECT_EQ(*basis.express(b, Root{1, v(3, 1)}), std::vector<Scalar>{-2});
  EXPECT_TRUE(e_bracket(spec, value(spec, "Lop (1,0)"), value(spec, "Lop (1,0)")).is_zero());
}

TEST(Chevalley, LeftCommutatorsRewriteToBasisElements) {
  // [L_{x^a}, L_{x^b}] for a, b in distinct nonzero classes is 0 or +-1 times a basis element.
  for (const auto& spec : {js(), jl()}) {
    const auto basis = ChevalleyBasis::build(spec, 3);
    for (const auto& a : window(2, 1))
      for (const auto& b : window(2, 1)) {
        if (!spec.in_support(a) || !spec.in_support(b) || coset_of(a) == coset_of(b)) continue;
        if (coset_of(a).is_zero() || coset_of(b).is_zero()) continue;
        const EalaElement c = EalaElement(
            TkkElement::from_mid(OperatorSum(commutator(left_mult(spec, a), left_mult(spec, b)))));
        const auto coeffs = basis.express(c, Root{0, a + b});
        ASSERT_TRUE(coeffs) << spec.descriptor() << a.to_string() << b.to_string();
        int nonzero = 0;
        for (const auto& x : *coeffs) {
          if (x.is_zero()) continue;
          ++nonzero;
          EXPECT_TRUE(x == Scalar(1) || x == Scalar(-1)) << x.to_string();
        }
        EXPECT_LE(nonzero, 1);
      }
  }
}

TEST(Chevalley, IntegralOverZ) {
  for (const char* d : {"semilattice:S:v=2,cosets=00+10+01", "semilattice:S:full,v=2", "hermitian:sign=-1", "laurent",
                        "quantum:q=root:1", "quantum:q=root:2"}) {
    const auto spec = JordanTorusSpec::parse(d);
    const auto report = verify_integrality(ChevalleyBasis::build(spec, 2), IntegralityRing::Z);
    EXPECT_GT(report.pairs, 0U);
    EXPECT_EQ(report.skipped, 0U);
    EXPECT_TRUE(report.passed()) << d << ": " << report.failures.size() << " failures, first "
                                 << report.failures.front().left << " , " << report.failures.front().right << " -> "
                                 << report.failures.front().bad;
  }
}

TEST(Chevalley, FormalQHalvesAreNotIntegral) {
  const auto report = verify_integrality(ChevalleyBasis::build(kq(), 1), IntegralityRing::Z);
  EXPECT_FALSE(report.passed());
}

TEST(Chevalley, FaultIsDetected) {
  const auto report = verify_integrality(ChevalleyBasis::build(jl().with_fault(), 1), IntegralityRing::Z);
  EXPECT_FALSE(report.passed());
}

TEST(Chevalley, SkippedTargetsAreCounted) {
  const auto basis = ChevalleyBasis::build(jl(), 1);
  const auto all = verify_integrality(basis, IntegralityRing::Z, 1);
  const auto cut = verify_integrality(basis, IntegralityRing::Z, 1, 1);
  EXPECT_EQ(all.pairs, basis.elements().size() * basis.elements().size());
  EXPECT_GT(cut.skipped, 0U);
  EXPECT_EQ(cut.pairs + cut.skipped, all.pairs);
}

TEST(Chevalley, RootPairingIsMinusOne) {
  for (const auto& spec : {js(), jl(), kq(), JordanTorusSpec::parse("quantum:q=root:3"),
                           JordanTorusSpec::parse("hermitian:sign=-1"), JordanTorusSpec::parse("laurent")}) {
    for (const auto& s : window(2, 2)) {
      if (!spec.in_support(s)) continue;
      EXPECT_TRUE(verify_root_pairing(spec, s)) << spec.descriptor() << " " << s.to_string();
    }
  }
  EXPECT_THROW(root_pairing(js(), v(1, 1)), std::invalid_argument);
}

TEST(Chevalley, RightTranslationAgainstCommutator) {
  const auto herm = JordanTorusSpec::parse("hermitian:sign=-1");
  for (const auto& l : window(2, 2)) {
    if (herm.in_support(l)) continue;
    const auto s = right_translation_ratio(herm, l);
    ASSERT_TRUE(s) << l.to_string();
    EXPECT_TRUE(*s == Scalar(1) || *s == Scalar(-1) || *s == Scalar(mpq_class(1, 2)) || *s == Scalar(mpq_class(-1, 2)))
        << l.to_string() << " " << s->to_string();
  }
}
