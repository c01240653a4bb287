#include "ttsupport/modcalc.hpp"
#include "ttsupport/oracle.hpp"
#include "ttsupport/random.hpp"

#include <gtest/gtest.h>

using namespace ttsupport;

namespace {

Module one(const Cyclic& c) {
  Module m;
  m.add(c);
  return m;
}

GradedModule graded(long degree, const Cyclic& c, unsigned long mult = 1) {
  GradedModule g;
  g.add(degree, c, mult);
  return g;
}

}  // namespace

TEST(Tables, TorsionWithTorsion) {
  EXPECT_EQ(tensor_mod(Cyclic::torsion(2, 2), Cyclic::torsion(2, 1)), one(Cyclic::torsion(2, 1)));
  EXPECT_EQ(tor_mod(Cyclic::torsion(2, 2), Cyclic::torsion(2, 1)), one(Cyclic::torsion(2, 1)));
  EXPECT_TRUE(tensor_mod(Cyclic::torsion(2, 1), Cyclic::torsion(3, 1)).is_zero());
  EXPECT_TRUE(tor_mod(Cyclic::torsion(2, 1), Cyclic::torsion(3, 1)).is_zero());
}

TEST(Tables, PruferWithLocalisation) {
  EXPECT_EQ(tensor_mod(Cyclic::prufer(PrimeSet::finite({2, 3})), Cyclic::free(PrimeSet::finite({3}))),
            one(Cyclic::prufer(PrimeSet::finite({2}))));
  EXPECT_EQ(tor_mod(Cyclic::prufer(PrimeSet::finite({2})), Cyclic::prufer(PrimeSet::all())),
            one(Cyclic::prufer(PrimeSet::finite({2}))));
}

TEST(Tables, TorsionChainLevelAgreement) {
  // Z/4 presented by Z --4--> Z; tensoring the resolution with Z/2 gives Z/2 in two degrees.
  const GradedModule h = homology(tensor_chain(oracle::resolution(4), oracle::resolution(2)));
  EXPECT_EQ(h.at(0), one(Cyclic::torsion(2, 1)));
  EXPECT_EQ(h.at(-1), one(Cyclic::torsion(2, 1)));
}

TEST(Tables, AgreeWithTruncationOracle) {
  const std::vector<Cyclic> cs{Cyclic::integers(),
                               Cyclic::free(PrimeSet::finite({2})),
                               Cyclic::free(PrimeSet::cofinite({3})),
                               Cyclic::torsion(2, 2),
                               Cyclic::torsion(3, 1),
                               Cyclic::prufer(PrimeSet::finite({2, 3})),
                               Cyclic::prufer(PrimeSet::all())};
  for (const auto& a : cs)
    for (const auto& b : cs)
      for (long p : {2L, 3L}) {
        const auto sa = oracle::stage_system(a, p, 13), sb = oracle::stage_system(b, p, 13);
        const auto got_t = oracle::colimit(oracle::tensor_system(sa, sb), 6, 13);
        const auto got_tor = oracle::colimit(oracle::TorSystem{sa, sb}, 6, 13);
        EXPECT_TRUE(oracle::same(got_t, oracle::expected_p_part(tensor_mod(a, b), p, 13)))
            << a.to_string() << " (x) " << b.to_string() << " at " << p << ": " << got_t.to_string();
        EXPECT_TRUE(oracle::same(got_tor, oracle::expected_p_part(tor_mod(a, b), p, 13)))
            << "Tor " << a.to_string() << ", " << b.to_string() << " at " << p << ": " << got_tor.to_string();
      }
}

TEST(Tables, SymmetricOnRandomCyclics) {
  gen::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const Cyclic a = gen::random_cyclic(rng), b = gen::random_cyclic(rng);
    EXPECT_EQ(tensor_mod(a, b), tensor_mod(b, a));
    EXPECT_EQ(tor_mod(a, b), tor_mod(b, a));
  }
}

TEST(Kunneth, TorsionSquared) {
  GradedModule want;
  want.add(-1, Cyclic::torsion(2, 1));
  want.add(0, Cyclic::torsion(2, 1));
  EXPECT_EQ(kunneth(graded(0, Cyclic::torsion(2, 1)), graded(0, Cyclic::torsion(2, 1))), want);
}

TEST(Kunneth, PruferIdempotent) {
  const GradedModule g = graded(1, Cyclic::prufer(PrimeSet::finite({2})));
  EXPECT_EQ(kunneth(g, g), g);
}

TEST(Kunneth, MatchesChainLevelTensor) {
  gen::Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const PerfectComplex a = gen::random_complex(rng, 3, 3), b = gen::random_complex(rng, 3, 3);
    EXPECT_EQ(homology(tensor_chain(a, b)), kunneth(homology(a), homology(b)));
  }
}

TEST(Kunneth, UnitCommutativityAssociativity) {
  gen::Rng rng(23);
  const GradedModule unit = graded(0, Cyclic::integers());
  for (int i = 0; i < 100; ++i) {
    const GradedModule x = gen::random_graded(rng), y = gen::random_graded(rng), z = gen::random_graded(rng);
    EXPECT_EQ(kunneth(unit, x), x);
    EXPECT_EQ(kunneth(x, y), kunneth(y, x));
    EXPECT_EQ(kunneth(kunneth(x, y), z), kunneth(x, kunneth(y, z)));
  }
}

TEST(Support, Cyclics) {
  EXPECT_EQ(supp_mod(one(Cyclic::integers())), PointSet::everything());
  Module m;
  m.add(Cyclic::torsion(2, 3));
  m.add(Cyclic::torsion(3, 1));
  EXPECT_EQ(supp_mod(m), (PointSet{false, PrimeSet::finite({2, 3})}));
  EXPECT_EQ(supp_mod(one(Cyclic::prufer(PrimeSet::cofinite({5})))), (PointSet{false, PrimeSet::cofinite({5})}));
  EXPECT_EQ(supp_mod(one(Cyclic::rationals())), PointSet::only(SpecZPoint::generic()));
}

TEST(Support, ResidueFieldProbe) {
  // (p) in supp M iff M (x)^L Z/p != 0.
  const std::vector<Cyclic> cs{Cyclic::torsion(2, 3), Cyclic::torsion(3, 1), Cyclic::prufer(PrimeSet::cofinite({5})),
                               Cyclic::free(PrimeSet::finite({7}))};
  for (const auto& c : cs)
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      const bool detected = !tensor_mod(c, Cyclic::torsion(p, 1)).is_zero() || !tor_mod(c, Cyclic::torsion(p, 1)).is_zero();
      EXPECT_EQ(supp_mod(one(c)).contains(SpecZPoint::closed(p)), detected) << c.to_string() << " at " << p;
    }
  for (const auto& c : cs)
    EXPECT_EQ(supp_mod(one(c)).generic, !tensor_mod(c, Cyclic::rationals()).is_zero()) << c.to_string();
}

TEST(Graded, Operations) {
  EXPECT_TRUE(is_zero(GradedModule{}));
  EXPECT_EQ(shift_graded(graded(0, Cyclic::integers()), 2), graded(-2, Cyclic::integers()));
  EXPECT_EQ(sum_graded(graded(0, Cyclic::torsion(2, 1)), graded(0, Cyclic::torsion(2, 1))), graded(0, Cyclic::torsion(2, 1), 2));
}

TEST(Graded, PruferFamiliesMerge) {
  Module m;
  m.add(Cyclic::prufer(PrimeSet::finite({2})));
  m.add(Cyclic::prufer(PrimeSet::finite({3})));
  EXPECT_EQ(m, one(Cyclic::prufer(PrimeSet::finite({2, 3}))));
}

TEST(Graded, Printing) {
  GradedModule g;
  g.add(0, Cyclic::torsion(2, 1));
  g.add(0, Cyclic::torsion(3, 1));
  EXPECT_EQ(g.to_string(), "{0: [Z/2^1 + Z/3^1]}");
  EXPECT_EQ(GradedModule{}.to_string(), "0");
}
