#include "ttsupport/balmer.hpp"
#include "ttsupport/oracle.hpp"
#include "ttsupport/random.hpp"

#include <gtest/gtest.h>

using namespace ttsupport;

namespace {

GradedModule graded(long degree, const Cyclic& c) {
  GradedModule g;
  g.add(degree, c);
  return g;
}

SpclSubset closed(PrimeSet s) { return SpclSubset::closed(std::move(s)); }

const SpecZPoint generic = SpecZPoint::generic();
SpecZPoint at(long p) { return SpecZPoint::closed(p); }

}  // namespace

TEST(Idempotents, ClosedForms) {
  EXPECT_EQ(gamma_V(closed(PrimeSet::finite({2}))).value, graded(1, Cyclic::prufer(PrimeSet::finite({2}))));
  EXPECT_EQ(l_V(closed(PrimeSet::cofinite({2}))).value, graded(0, Cyclic::free(PrimeSet::cofinite({2}))));
  EXPECT_EQ(gamma_V(SpclSubset::all()).value, graded(0, Cyclic::integers()));
  EXPECT_TRUE(l_V(SpclSubset::all()).value.is_zero());
  EXPECT_TRUE(gamma_V(SpclSubset::empty()).value.is_zero());
  EXPECT_EQ(l_V(SpclSubset::empty()).value, graded(0, Cyclic::integers()));
}

TEST(Idempotents, DisjointSubsetsAreOrthogonal) {
  EXPECT_TRUE(kunneth(gamma_V(closed(PrimeSet::finite({2}))).value, gamma_V(closed(PrimeSet::finite({3}))).value).is_zero());
}

TEST(Idempotents, GammaOfFiniteSetMatchesKoszulOracle) {
  for (long p : {2L, 3L, 5L, 7L}) {
    const PrimeSet s = PrimeSet::finite({p});
    const Module h1 = gamma_V(closed(s)).value.at(1);
    for (long q : {2L, 3L, 5L, 7L, 11L})
      EXPECT_TRUE(oracle::same(oracle::koszul_p_part(s, q, 6, 13), oracle::expected_p_part(h1, q, 13))) << p << " at " << q;
  }
}

TEST(Idempotents, LawsOverSmallFamily) {
  std::vector<SpclSubset> family{SpclSubset::all(), SpclSubset::empty(), closed(PrimeSet::all())};
  for (long p : {2L, 3L, 5L}) {
    family.push_back(closed(PrimeSet::finite({p})));
    family.push_back(closed(PrimeSet::cofinite({p})));
  }
  for (const auto& v : family) EXPECT_TRUE(idempotent_laws(v).ok()) << idempotent_laws(v).to_text();
}

TEST(Idempotents, AtPoints) {
  EXPECT_EQ(gamma_point(at(2)).value, graded(1, Cyclic::prufer(PrimeSet::finite({2}))));
  EXPECT_EQ(gamma_point(generic).value, graded(0, Cyclic::rationals()));
  EXPECT_EQ(gamma_point(at(2)).label(), "Gamma_(2)1");
}

TEST(Support, Objects) {
  EXPECT_EQ(supp_object(graded(0, Cyclic::integers())), PointSet::everything());
  GradedModule x;
  x.add(0, Cyclic::torsion(2, 2));
  x.add(0, Cyclic::torsion(3, 1));
  EXPECT_EQ(supp_object(x), (PointSet{false, PrimeSet::finite({2, 3})}));
  EXPECT_TRUE(supp_object(GradedModule{}).is_empty());
}

TEST(Support, AgreesWithPointwiseDetection) {
  gen::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const GradedModule x = gen::random_graded(rng);
    const PointSet s = supp_object(x);
    for (const auto& pt : probe_points(x, 20))
      EXPECT_EQ(s.contains(pt), !kunneth(gamma_point(pt).value, x).is_zero()) << x.to_string() << " at " << pt.to_string();
  }
}

TEST(Support, SeparationOnRandomPairs) {
  gen::Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const SpclSubset v = gen::random_spcl_subset(rng);
    const GradedModule x = gen::random_graded(rng);
    EXPECT_EQ(supp_object(kunneth(gamma_V(v).value, x)), intersect(supp_object(x), v.points()));
    EXPECT_EQ(supp_object(kunneth(l_V(v).value, x)), intersect(supp_object(x), v.points().complement()));
  }
}

TEST(Triangle, ClosedSubsets) {
  for (const auto& v : {closed(PrimeSet::finite({2})), SpclSubset::all(), closed(PrimeSet::all()), SpclSubset::empty()}) {
    const Report r = localization_triangle_check(v);
    EXPECT_TRUE(r.ok()) << r.to_text();
  }
}

TEST(Triangle, CokernelIsPruferOracle) {
  // Z[1/2]/Z is the colimit of Z/2^k.
  const Module coker = gamma_V(closed(PrimeSet::finite({2}))).value.at(1);
  const oracle::Colimit want = oracle::colimit(oracle::stage_system(Cyclic::prufer(PrimeSet::finite({2})), 2, 13), 6, 13);
  EXPECT_TRUE(oracle::same(want, oracle::expected_p_part(coker, 2, 13)));
}

TEST(LocalToGlobal, TorsionSix) {
  GradedModule x;
  x.add(0, Cyclic::torsion(2, 1));
  x.add(0, Cyclic::torsion(3, 1));
  EXPECT_EQ(kunneth(gamma_point(at(2)).value, x), graded(0, Cyclic::torsion(2, 1)));
  EXPECT_EQ(kunneth(gamma_point(at(3)).value, x), graded(0, Cyclic::torsion(3, 1)));
  EXPECT_TRUE(kunneth(gamma_point(at(5)).value, x).is_zero());
  EXPECT_TRUE(kunneth(gamma_point(generic).value, x).is_zero());
  EXPECT_TRUE(ltg_check(x).ok());
}

TEST(LocalToGlobal, ZeroAndRationals) {
  EXPECT_TRUE(ltg_check(GradedModule{}).ok());
  const GradedModule q = graded(0, Cyclic::rationals());
  EXPECT_EQ(supp_object(q), PointSet::only(generic));
  EXPECT_EQ(kunneth(gamma_point(generic).value, q), q);
  EXPECT_TRUE(ltg_check(q).ok());
}

TEST(LocalToGlobal, ZeroDetectionOnNearZeroObjects) {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const GradedModule x = i % 2 ? gen::random_near_zero(rng) : gen::random_graded(rng);
    EXPECT_EQ(is_zero(x), supp_object(x).is_empty()) << x.to_string();
  }
}

TEST(ResidueField, Examples) {
  GradedModule want;
  want.add(-1, Cyclic::torsion(2, 1));
  want.add(0, Cyclic::torsion(2, 1));
  EXPECT_EQ(kunneth(residue_field(at(2)), graded(0, Cyclic::torsion(2, 2))), want);
  EXPECT_EQ(kunneth(residue_field(at(2)), graded(1, Cyclic::prufer(PrimeSet::finite({2})))), graded(0, Cyclic::torsion(2, 1)));
  EXPECT_EQ(kunneth(residue_field(generic), graded(0, Cyclic::rationals())), graded(0, Cyclic::rationals()));
  EXPECT_TRUE(residue_check(at(2), graded(0, Cyclic::torsion(2, 2))).ok());
  EXPECT_TRUE(residue_check(generic, graded(0, Cyclic::rationals())).ok());
}

TEST(Localising, SigmaTau) {
  const LocSubcatCode w{PointSet{false, PrimeSet::finite({2})}};
  EXPECT_TRUE(tau_loc(w, graded(0, Cyclic::torsion(2, 5))));
  EXPECT_FALSE(tau_loc(w, graded(0, Cyclic::integers())));
  EXPECT_EQ(sigma_loc(tau_generators(w)), w);
  const LocSubcatCode everything{PointSet::everything()};
  EXPECT_EQ(sigma_loc(tau_generators(everything)), everything);
  EXPECT_EQ(sigma_loc({}), LocSubcatCode{});
}

TEST(Primes, PointToPrime) {
  const ThickIdeal p2 = point_to_prime(at(2));
  EXPECT_TRUE(p2.contains(multiplication_cone(3)));
  EXPECT_FALSE(p2.contains(multiplication_cone(2)));
  EXPECT_FALSE(p2.contains(PerfectComplex::unit()));
}

TEST(Primes, RoundTrip) {
  for (const auto& x : {generic, at(2), at(3), at(5), at(7), at(101)}) EXPECT_EQ(prime_to_point(point_to_prime(x)), x);
  EXPECT_EQ(prime_to_point(ThickIdeal(closed(PrimeSet::all()))), generic);
}

TEST(Primes, NonPrimeSubsetsAreRejectedWithWitness) {
  try {
    prime_to_point(ThickIdeal(closed(PrimeSet::finite({2, 3}))));
    FAIL() << "expected not_prime_error";
  } catch (const not_prime_error& e) {
    ASSERT_TRUE(e.witness().has_value());
    const auto& [k, l] = *e.witness();
    const ThickIdeal ideal(closed(PrimeSet::finite({2, 3})));
    EXPECT_TRUE(ideal.contains(tensor_chain(k, l)));
    EXPECT_FALSE(ideal.contains(k));
    EXPECT_FALSE(ideal.contains(l));
  }
  EXPECT_THROW(prime_to_point(ThickIdeal(SpclSubset::all())), not_prime_error);
}

TEST(Thick, Membership) {
  EXPECT_TRUE(thick_membership(multiplication_cone(4), {multiplication_cone(2)}));
  EXPECT_FALSE(thick_membership(multiplication_cone(2), {multiplication_cone(3)}));
  EXPECT_FALSE(thick_membership(PerfectComplex::unit(), {multiplication_cone(2)}));
}

TEST(Thick, ExtensionWitness) {
  // Z/2 -> Z/4 -> Z/2 realised by a cone.
  const ChainMap f = oracle::torsion_extension(2, 2);
  EXPECT_EQ(homology(f.source()), homology(multiplication_cone(2)));
  EXPECT_EQ(homology(f.target()), homology(multiplication_cone(4)));
  GradedModule z2;
  z2.add(0, Cyclic::torsion(2, 1));
  EXPECT_EQ(homology(cone(f)), z2);
  EXPECT_TRUE(oracle::thick_generated(multiplication_cone(4), {multiplication_cone(2)}));
  EXPECT_FALSE(oracle::thick_generated(multiplication_cone(2), {multiplication_cone(3)}));
}
