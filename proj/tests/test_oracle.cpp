// The test oracles are themselves checked against hand-computed values.
#include "ttsupport/oracle.hpp"

#include <gtest/gtest.h>

using namespace ttsupport;
using oracle::ColimitKind;

TEST(Oracle, MinorsOnKnownMatrices) {
  EXPECT_EQ(oracle::invariant_factors_by_minors(IntMatrix{{2, 4}, {6, 8}}), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(oracle::invariant_factors_by_minors(IntMatrix{{0, 0}, {0, 0}}), std::vector<BigInt>{});
  EXPECT_EQ(oracle::invariant_factors_by_minors(IntMatrix{{6, 0, 0}, {0, 10, 0}}), (std::vector<BigInt>{2, 30}));
}

TEST(Oracle, Members) {
  const std::vector<BigInt> universe{2, 3, 5, 7};
  EXPECT_EQ(oracle::members(PrimeSet::cofinite({3}), universe), (std::set<BigInt>{2, 5, 7}));
  EXPECT_EQ(oracle::members(PrimeSet::finite({3, 11}), universe), (std::set<BigInt>{3}));
}

TEST(Oracle, ColimitOfPruferStages) {
  const auto c = oracle::colimit(oracle::stage_system(Cyclic::prufer(PrimeSet::finite({2})), 2, 13), 6, 13);
  EXPECT_EQ(c.kind, ColimitKind::Prufer);
  EXPECT_EQ(oracle::colimit(oracle::stage_system(Cyclic::prufer(PrimeSet::finite({2})), 3, 13), 6, 13).kind,
            ColimitKind::Zero);
}

TEST(Oracle, ColimitOfTorsionIsStable) {
  const auto c = oracle::colimit(oracle::stage_system(Cyclic::torsion(3, 2), 3, 13), 6, 13);
  EXPECT_EQ(c.kind, ColimitKind::Stable);
  EXPECT_EQ(c.order, 9);
}

TEST(Oracle, ColimitOfLocalisation) {
  const auto c = oracle::colimit(oracle::stage_system(Cyclic::free(PrimeSet::finite({2, 5})), 3, 13), 6, 13);
  EXPECT_EQ(c.kind, ColimitKind::Localization);
  EXPECT_EQ(c.inverted, (std::set<BigInt>{2, 5}));
}

TEST(Oracle, TorOfPruferWithTorsion) {
  // Tor(Z(2^inf), Z/4) = Z/4: stages grow then stabilise.
  const oracle::TorSystem t{oracle::stage_system(Cyclic::prufer(PrimeSet::finite({2})), 2, 13),
                            oracle::stage_system(Cyclic::torsion(2, 2), 2, 13)};
  const auto c = oracle::colimit(t, 6, 13);
  EXPECT_EQ(c.kind, ColimitKind::Stable);
  EXPECT_EQ(c.order, 4);
}

TEST(Oracle, KoszulPPart) {
  EXPECT_EQ(oracle::koszul_p_part(PrimeSet::finite({2}), 2, 6, 13).kind, ColimitKind::Prufer);
  EXPECT_EQ(oracle::koszul_p_part(PrimeSet::finite({2}), 3, 6, 13).kind, ColimitKind::Zero);
  EXPECT_EQ(oracle::koszul_p_part(PrimeSet::cofinite({3}), 5, 4, 13).kind, ColimitKind::Prufer);
  EXPECT_EQ(oracle::koszul_p_part(PrimeSet::cofinite({3}), 3, 4, 13).kind, ColimitKind::Zero);
}

TEST(Oracle, ExpectedPPartVocabulary) {
  Module m;
  m.add(Cyclic::torsion(2, 3));
  m.add(Cyclic::torsion(3, 1));
  const auto at2 = oracle::expected_p_part(m, 2, 13);
  EXPECT_EQ(at2.kind, ColimitKind::Stable);
  EXPECT_EQ(at2.order, 8);
  EXPECT_EQ(oracle::expected_p_part(m, 5, 13).kind, ColimitKind::Zero);
}

TEST(Oracle, ResolutionHomology) {
  Module m;
  m.add(Cyclic::torsion(2, 1));
  m.add(Cyclic::torsion(3, 1));
  EXPECT_EQ(homology(oracle::resolution(6)).at(0), m);
}

TEST(Oracle, IndecomposablesOfSums) {
  const PerfectComplex c = direct_sum(cone(scalar_on_unit(12)), shift(PerfectComplex::unit(), 1));
  const auto types = oracle::indecomposables(c);
  EXPECT_EQ(types, (std::set<oracle::Indecomposable>{{true, 0, 0}, {false, 2, 2}, {false, 3, 1}}));
}

TEST(Oracle, ThickGenerationMoves) {
  auto z = [](long n) { return cone(scalar_on_unit(n)); };
  EXPECT_TRUE(oracle::thick_generated(z(8), {z(2)}));
  EXPECT_TRUE(oracle::thick_generated(z(2), {z(8)}));
  EXPECT_TRUE(oracle::thick_generated(z(30), {PerfectComplex::unit()}));
  EXPECT_FALSE(oracle::thick_generated(PerfectComplex::unit(), {z(6)}));
  EXPECT_FALSE(oracle::thick_generated(z(5), {z(6)}));
}

TEST(Oracle, TorsionExtensionIsAChainMap) {
  for (unsigned k = 2; k <= 4; ++k) {
    const ChainMap f = oracle::torsion_extension(3, k);
    GradedModule want;
    want.add(0, Cyclic::torsion(3, 1));
    EXPECT_EQ(homology(cone(f)), want) << k;
  }
}
