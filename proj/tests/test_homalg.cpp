#include "ttsupport/complex.hpp"
#include "ttsupport/oracle.hpp"
#include "ttsupport/random.hpp"
#include "ttsupport/snf.hpp"

#include <gtest/gtest.h>

using namespace ttsupport;

namespace {

GradedModule graded(long degree, const Cyclic& c, unsigned long mult = 1) {
  GradedModule g;
  g.add(degree, c, mult);
  return g;
}

const Cyclic Z = Cyclic::integers();

void expect_snf_invariants(const IntMatrix& m) {
  const SNFResult s = snf(m);
  EXPECT_EQ(s.U * m * s.V, s.D) << m.to_string();
  EXPECT_EQ(abs_value(determinant(s.U)), 1);
  EXPECT_EQ(abs_value(determinant(s.V)), 1);
  for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
    EXPECT_EQ(s.invariant_factors[i + 1] % s.invariant_factors[i], 0);
}

}  // namespace

TEST(Snf, Identity) {
  const SNFResult s = snf(IntMatrix{{1, 0}, {0, 1}});
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(s.invariant_factors, (std::vector<BigInt>{1, 1}));
}

TEST(Snf, TwoByTwoAgreesWithMinors) {
  const IntMatrix m{{2, 4}, {6, 8}};
  EXPECT_EQ(invariant_factors(m), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(oracle::invariant_factors_by_minors(m), (std::vector<BigInt>{2, 4}));
  expect_snf_invariants(m);
}

TEST(Snf, ZeroMatrixHasNoInvariantFactors) {
  EXPECT_TRUE(invariant_factors(IntMatrix{{0}}).empty());
  EXPECT_TRUE(invariant_factors(IntMatrix(3, 2)).empty());
}

TEST(Snf, RectangularAndRankDeficient) {
  for (const IntMatrix& m : {IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, IntMatrix{{1, 2, 3}, {2, 4, 6}},
                             IntMatrix{{0, 0}, {0, 5}, {0, 10}}, IntMatrix{{6, 10, 15}}}) {
    EXPECT_EQ(invariant_factors(m), oracle::invariant_factors_by_minors(m)) << m.to_string();
    expect_snf_invariants(m);
  }
  EXPECT_EQ(invariant_factors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<BigInt>{2, 6, 12}));
}

TEST(Snf, HugeEntriesStayExact) {
  const BigInt big = ttsupport::parse_bigint("1000000000000000000000007");
  IntMatrix m(2, 2);
  m(0, 0) = big * 6;
  m(0, 1) = big * 4;
  m(1, 0) = 9;
  m(1, 1) = 6;
  expect_snf_invariants(m);
  EXPECT_EQ(invariant_factors(m), oracle::invariant_factors_by_minors(m));
}

TEST(Snf, RandomMatricesAgreeWithMinors) {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix m = gen::random_matrix(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4));
    EXPECT_EQ(invariant_factors(m), oracle::invariant_factors_by_minors(m)) << m.to_string();
    expect_snf_invariants(m);
  }
}

TEST(Complex, RejectsBadShapesAndNonComplexes) {
  EXPECT_THROW(PerfectComplex({{0, 1}, {1, 2}}, {{0, IntMatrix{{1}}}}), complex_error);
  EXPECT_THROW(PerfectComplex({{0, 1}, {1, 1}, {2, 1}}, {{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}}), complex_error);
}

TEST(Homology, MultiplicationByTwo) {
  EXPECT_EQ(homology(PerfectComplex::two_term(2)), graded(1, Cyclic::torsion(2, 1)));
}

TEST(Homology, UnitAndIsomorphism) {
  EXPECT_EQ(homology(PerfectComplex::unit()), graded(0, Z));
  EXPECT_TRUE(homology(PerfectComplex::two_term(1)).is_zero());
  EXPECT_TRUE(homology(PerfectComplex::two_term(-1)).is_zero());
}

TEST(Homology, CompositeTorsionSplitsIntoPrimaryParts) {
  GradedModule want;
  want.add(1, Cyclic::torsion(2, 2));
  want.add(1, Cyclic::torsion(3, 1));
  EXPECT_EQ(homology(PerfectComplex::two_term(-12)), want);
}

TEST(Homology, FreeRankFromKernel) {
  // Z^2 --[1 1]--> Z: H^0 = Z, H^1 = 0.
  EXPECT_EQ(homology(PerfectComplex({{0, 2}, {1, 1}}, {{0, IntMatrix{{1, 1}}}})), graded(0, Z));
}

TEST(Tensor, UnitIsNeutral) {
  const PerfectComplex c({{-1, 2}, {0, 2}}, {{-1, IntMatrix{{2, 4}, {0, 9}}}});
  EXPECT_EQ(homology(tensor_chain(PerfectComplex::unit(), c)), homology(c));
  EXPECT_EQ(homology(tensor_chain(c, PerfectComplex::unit())), homology(c));
}

TEST(Tensor, CoprimeTorsionVanishes) {
  EXPECT_TRUE(homology(tensor_chain(PerfectComplex::two_term(2), PerfectComplex::two_term(3))).is_zero());
}

TEST(Tensor, TwoTorsionWithItself) {
  GradedModule want;
  want.add(1, Cyclic::torsion(2, 1));
  want.add(2, Cyclic::torsion(2, 1));
  EXPECT_EQ(homology(tensor_chain(PerfectComplex::two_term(2), PerfectComplex::two_term(2))), want);
}

TEST(Tensor, HomologyIsSymmetricOnRandomPairs) {
  gen::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const PerfectComplex a = gen::random_complex(rng, 3, 3), b = gen::random_complex(rng, 3, 3);
    EXPECT_EQ(homology(tensor_chain(a, b)), homology(tensor_chain(b, a)));
  }
}

TEST(Cone, IdentityHasNoHomology) { EXPECT_TRUE(homology(cone(scalar_on_unit(1))).is_zero()); }

TEST(Cone, MultiplicationByN) {
  for (long n : {2L, 6L, 9L, 30L}) {
    GradedModule want;
    want.add(0, cyclic_decomposition(n));
    EXPECT_EQ(homology(cone(scalar_on_unit(n))), want) << n;
  }
}

TEST(Cone, ZeroMapIsSumWithShift) {
  GradedModule want;
  want.add(-1, Z);
  want.add(0, Z);
  EXPECT_EQ(homology(cone(scalar_on_unit(0))), want);
}

TEST(Cone, ChainMapMustCommute) {
  EXPECT_THROW(ChainMap(PerfectComplex::two_term(2), PerfectComplex::two_term(3), {{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}}),
               complex_error);
}

TEST(Shift, InverseShiftsAndReindexing) {
  gen::Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const PerfectComplex c = gen::random_complex(rng);
    EXPECT_EQ(shift(shift(c, 1), -1), c);
    for (long k : {-2L, 1L, 3L}) {
      const GradedModule h = homology(c), hs = homology(shift(c, k));
      for (const auto& [n, m] : h.degrees()) EXPECT_EQ(hs.at(n - k), m);
    }
  }
  EXPECT_EQ(homology(shift(PerfectComplex::unit(), 3)), graded(-3, Z));
}
