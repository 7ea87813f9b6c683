#include <gtest/gtest.h>

#include "bomega/text.hpp"
#include "bomega/topology.hpp"
#include "bomega/verification.hpp"

using namespace bomega;

namespace {

const AtomicFamily F013 = parse_family("0,1,3");

BrandtElem b(const char* s) { return parse_brandt(s); }
AcNbhd ac(const char* s) { return std::get<AcNbhd>(parse_nbhd(s)); }

}  // namespace

TEST(AcContains, Examples) {
  EXPECT_TRUE(ac_contains(ac("ac:(3,4)"), b("(3;1;5)")));
  EXPECT_FALSE(ac_contains(ac("ac:(3,4)"), b("(3;1;4)")));
  for (const char* s : {"ac:", "ac:(0,0)", "ac:(1,2)(3,4)"}) EXPECT_TRUE(ac_contains(ac(s), b("O")));
}

TEST(AcComplementSize, Examples) {
  EXPECT_EQ(ac_complement_size(ac("ac:(2,5)"), F013), 2u);
  EXPECT_EQ(ac_complement_size(ac("ac:"), F013), 0u);
  EXPECT_EQ(ac_complement_size(ac("ac:(0,0)(1,1)"), F013), 3u);
}

TEST(AcComplementSize, CountsElementsOutsideNeighbourhood) {
  const auto u = ac("ac:(0,3)(2,5)(4,4)(6,1)");
  std::size_t outside = 0;
  for (const auto& e : brandt_universe(F013, 8).elements) outside += !ac_contains(u, e);
  EXPECT_EQ(outside, ac_complement_size(u, F013));
}

TEST(ShiftContinuityAc, Examples) {
  EXPECT_TRUE(check_shift_continuity_ac(ac("ac:(2,5)"), b("(3;1;4)"), F013, 20).passed);
  EXPECT_TRUE(check_shift_continuity_ac(ac("ac:"), b("(7;3;4)"), F013, 20).passed);
  EXPECT_TRUE(check_shift_continuity_ac(ac("ac:(0,0)"), b("(0;0;0)"), F013, 20).passed);
  EXPECT_THROW(check_shift_continuity_ac(ac("ac:"), b("O"), F013, 5), InvalidElement);
}

TEST(ShiftContinuityAc, SmallerNeighbourhoodThanUKFails) {
  // Sanity of the harness: using u itself in place of U_K is not enough.
  const auto u = ac("ac:(2,5)");
  const auto x = b("(3;1;5)");
  bool escaped = false;
  for (const auto& e : brandt_universe(F013, 8).elements)
    if (ac_contains(u, e) && !ac_contains(u, brandt_multiply(e, x))) escaped = true;
  EXPECT_TRUE(escaped);
}

TEST(InversionAc, Examples) {
  EXPECT_TRUE(check_inversion_ac(ac("ac:(2,5)"), F013, 20).passed);
  EXPECT_EQ(ac_transposed(ac("ac:(2,5)")), ac("ac:(5,2)"));
  EXPECT_TRUE(check_inversion_ac(ac("ac:(1,3)(3,1)"), F013, 20).passed);
  EXPECT_TRUE(check_inversion_ac(ac("ac:(0,3)(1,4)"), F013, 15).passed);
}

TEST(Tau1Contains, Examples) {
  const Tau1Nbhd u{3};
  EXPECT_TRUE(tau1_contains(u, b("(5;1;7)")));
  EXPECT_FALSE(tau1_contains(u, b("(5;1;4)")));
  EXPECT_FALSE(tau1_contains(u, b("(2;0;9)")));
  EXPECT_TRUE(tau1_contains(u, b("O")));
}

TEST(ContinuityTau1, Examples) {
  const auto r = check_continuity_tau1(Tau1Nbhd{3}, b("(2;1;4)"), F013, 25);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.note, "annihilator threshold n = 5");
  EXPECT_TRUE(check_tau1_closure(Tau1Nbhd{3}, F013, 20).passed);
  EXPECT_TRUE(check_continuity_tau1(Tau1Nbhd{3}, b("O"), F013, 10).passed);
}

TEST(ContinuityTau1, AnnihilationFailsBelowThreshold) {
  // U_4 still meets row 4 = col(x), so x·U_4 is not {O}.
  const auto x = b("(2;1;4)");
  bool nonzero = false;
  for (const auto& e : brandt_universe(F013, 10).elements)
    if (tau1_contains(Tau1Nbhd{4}, e) && !brandt_multiply(x, e).is_zero()) nonzero = true;
  EXPECT_TRUE(nonzero);
}

TEST(PhiPsi, Examples) {
  EXPECT_EQ(phi(b("(3;1;5)")), b("(3;1;3)"));
  EXPECT_EQ(phi(b("(3;1;5)")), brandt_multiply(b("(3;1;5)"), brandt_invert(b("(3;1;5)"))));
  EXPECT_EQ(psi(b("(3;1;5)")), b("(5;1;5)"));
  EXPECT_EQ(psi(b("(3;1;5)")), brandt_multiply(brandt_invert(b("(3;1;5)")), b("(3;1;5)")));
  EXPECT_EQ(phi(b("(4;3;4)")), b("(4;3;4)"));
  EXPECT_EQ(phi(b("O")), b("O"));
}

TEST(PhiPsi, IdempotentOutputsAndRightIdentity) {
  for (const auto& x : brandt_universe(F013, 6).elements) {
    EXPECT_TRUE(is_brandt_idempotent(phi(x)));
    EXPECT_TRUE(is_brandt_idempotent(psi(x)));
    EXPECT_EQ(brandt_multiply(x, psi(x)), x);
    EXPECT_EQ(brandt_multiply(phi(x), x), x);
  }
}

TEST(PreimageCondition, Examples) {
  const std::vector<BrandtElem> m{b("(5;0;5)")};
  const auto r = check_preimage_avoidance(Tau1Nbhd{1}, m, F013, 20);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample);
  const auto w = parse_brandt(r.counterexample->front());
  EXPECT_TRUE(phi(w) == b("(5;0;5)") || psi(w) == b("(5;0;5)"));
  EXPECT_FALSE(preimage_condition_holds(Tau1Nbhd{1}, {b("(5;0;5)")}, F013, 20));
  // (5;0;7) is one such element.
  EXPECT_TRUE(tau1_contains(Tau1Nbhd{1}, b("(5;0;7)")));

  std::vector<IndexPair> touching;
  for (Nat i = 0; i <= 20; ++i) {
    touching.emplace_back(5, i);
    touching.emplace_back(i, 5);
  }
  EXPECT_TRUE(preimage_condition_holds(AcNbhd(touching), m, F013, 20));
  EXPECT_TRUE(preimage_condition_holds(Tau1Nbhd{0}, {}, F013, 20));
  EXPECT_THROW(preimage_condition_holds(Tau1Nbhd{0}, {b("(1;0;2)")}, F013, 5), InvalidElement);
}

TEST(FindZeroWitness, Examples) {
  EXPECT_EQ(find_zero_witness(b("(2;1;4)"), {b("(5;0;6)"), b("(4;1;7)")}), b("(5;0;6)"));
  EXPECT_EQ(find_zero_witness(b("(2;1;4)"), {b("(4;0;2)")}), std::nullopt);
  EXPECT_EQ(find_zero_witness(b("(2;1;4)"), {}), std::nullopt);
  EXPECT_THROW(find_zero_witness(b("O"), {}), InvalidElement);
}

TEST(ExtendedMultiply, Examples) {
  const auto y = ExtendedElem::adjoined();
  EXPECT_EQ(extended_multiply(y, y), ExtendedElem(b("O")));
  EXPECT_EQ(extended_multiply(y, b("(3;1;5)")), ExtendedElem(b("O")));
  EXPECT_EQ(extended_multiply(b("(3;1;5)"), y), ExtendedElem(b("O")));
  EXPECT_EQ(extended_multiply(b("(2;1;4)"), b("(4;3;5)")), ExtendedElem(b("(2;1;5)")));
}

TEST(ExtendedMultiply, Associative) { EXPECT_TRUE(check_extended_associativity(F013, 3).passed); }

TEST(MSequence, Examples) {
  const MSequence seq({b("(1;0;2)"), b("(3;1;4)"), b("(5;0;6)")}, F013);
  EXPECT_TRUE(mseq_nbhd_contains(seq, 2, b("(3;1;4)")));
  EXPECT_FALSE(mseq_nbhd_contains(seq, 3, b("(3;1;4)")));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(mseq_nbhd_contains(seq, n, ExtendedElem::adjoined()));
  EXPECT_THROW(mseq_nbhd_contains(seq, 0, b("(3;1;4)")), IndexOutOfRange);
  EXPECT_THROW(mseq_nbhd_contains(seq, 4, b("(3;1;4)")), IndexOutOfRange);
}

TEST(MSequence, Validation) {
  EXPECT_THROW(MSequence({b("(3;1;4)"), b("(4;0;6)")}, F013), InvalidElement);
  EXPECT_THROW(MSequence({b("(3;1;3)")}, F013), InvalidElement);
  EXPECT_THROW(MSequence({b("(1;3;4)")}, F013), InvalidElement);
  EXPECT_THROW(MSequence({b("O")}, F013), InvalidElement);
}

TEST(MSequence, NeighbourhoodsOfAdjoinedPointMultiplyToZero) {
  const MSequence seq({b("(1;0;2)"), b("(3;1;4)"), b("(5;0;6)"), b("(7;1;9)")}, F013);
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    std::vector<ExtendedElem> un{ExtendedElem::adjoined()};
    for (std::size_t p = n - 1; p < seq.size(); ++p) un.emplace_back(seq.entries()[p]);
    for (const auto& x : un)
      for (const auto& y : un) {
        const auto p = extended_multiply(x, y);
        EXPECT_TRUE(!p.is_adjoined() && p.inner().is_zero());
      }
  }
}

TEST(IsolationReport, Examples) {
  const auto r = isolation_report(F013, 3);
  EXPECT_EQ(r.at({3, 3}), 3u);
  EXPECT_EQ(r.at({0, 0}), 1u);
  EXPECT_EQ(r.at({2, 3}), 2u);
  EXPECT_EQ(r.size(), 16u);
  for (const auto& [rc, n] : isolation_report(parse_family("0"), 6)) EXPECT_EQ(n, 1u);
  for (const auto& [rc, n] : isolation_report(parse_family("+0"), 6)) EXPECT_EQ(n, std::min(rc.first, rc.second) + 1);
}

TEST(Neighbourhoods, PredicateMatchesEnumeratedFibers) {
  const auto u = ac("ac:(1,1)(2,4)");
  const Tau1Nbhd t{2};
  for (Nat r = 0; r <= 8; ++r)
    for (Nat c = 0; c <= 8; ++c) {
      const bool excluded = (r == 1 && c == 1) || (r == 2 && c == 4);
      for (const auto& e : fiber(r, c, F013)) {
        EXPECT_EQ(ac_contains(u, e), !excluded);
        EXPECT_EQ(tau1_contains(t, e), 2 <= r && r < c);
      }
    }
}
