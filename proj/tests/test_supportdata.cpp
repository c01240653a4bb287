#include "ttsupport/random.hpp"
#include "ttsupport/supportdata.hpp"
#include "ttsupport/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ttsupport;

namespace {

ObjectMask bits(const Catalogue& c, std::initializer_list<const char*> names) {
  ObjectMask m = 0;
  for (const char* n : names) m |= ObjectMask{1} << *c.index_of(n);
  return m;
}

// Thick tensor-ideal straight from the definition, over every table entry.
bool ideal_by_definition(const Catalogue& c, ObjectMask s) {
  auto in = [&](std::size_t k) { return (s >> k & 1u) != 0; };
  if (!in(c.zero())) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (in(k) != in(c.shift(k))) return false;
    if (in(k))
      for (std::size_t l = 0; l < c.size(); ++l)
        if (!in(c.tensor(k, l))) return false;
  }
  for (const auto& [k, l] : c.summands())
    if (in(k) && !in(l)) return false;
  for (const auto& t : c.triangles())
    if (in(t[0]) + in(t[1]) + in(t[2]) == 2) return false;
  return true;
}

bool prime_by_definition(const Catalogue& c, ObjectMask p) {
  if (!ideal_by_definition(c, p) || (p >> c.unit() & 1u)) return false;
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t l = 0; l < c.size(); ++l)
      if ((p >> c.tensor(k, l) & 1u) && !(p >> k & 1u) && !(p >> l & 1u)) return false;
  return true;
}

std::vector<ObjectMask> brute(const Catalogue& c, bool primes) {
  std::vector<ObjectMask> out;
  for (ObjectMask s = 0; s < (ObjectMask{1} << c.size()); ++s)
    if (primes ? prime_by_definition(c, s) : ideal_by_definition(c, s)) out.push_back(s);
  return out;
}

std::vector<ObjectMask> sorted(std::vector<ObjectMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Catalogue field_like() {
  Catalogue::Tables t;
  t.names = {"0", "U"};
  t.zero = 0;
  t.unit = 1;
  t.tensor = {{0, 0}, {0, 1}};
  return Catalogue(std::move(t));
}

}  // namespace

TEST(Catalogue, FiveObjectModelHasTwoPrimes) {
  const Catalogue c = verify::five_object_model();
  const auto primes = enumerate_primes(c);
  EXPECT_EQ(sorted(primes), sorted({bits(c, {"0", "A"}), bits(c, {"0", "B"})}));
  EXPECT_EQ(enumerate_ideals(c).size(), 4u);
}

TEST(Catalogue, SingleTriangleModelHasThirdPrime) {
  // Without a triangle splitting the unit, {0, A, B, A+B} is also prime.
  const Catalogue c = verify::five_object_model(false);
  EXPECT_EQ(sorted(enumerate_primes(c)), sorted({bits(c, {"0", "A"}), bits(c, {"0", "B"}), bits(c, {"0", "A", "B", "A+B"})}));
}

TEST(Catalogue, FieldLikeModel) {
  const Catalogue c = field_like();
  EXPECT_EQ(enumerate_primes(c), (std::vector<ObjectMask>{bits(c, {"0"})}));
}

TEST(Catalogue, EnumerationAgreesWithDefinitionOnRandomCatalogues) {
  gen::Rng rng(314);
  for (int i = 0; i < 40; ++i) {
    const Catalogue c = gen::random_catalogue(rng, 10, 3);
    EXPECT_EQ(sorted(enumerate_ideals(c)), brute(c, false));
    EXPECT_EQ(sorted(enumerate_primes(c)), brute(c, true));
    EXPECT_EQ(sorted(enumerate_primes(c, 3)), brute(c, true));
    EXPECT_TRUE(prime_facts(c).ok()) << prime_facts(c).to_text();
  }
}

TEST(Catalogue, TrianglesAreRotationClosed) {
  const Catalogue c = verify::five_object_model();
  for (const auto& t : c.triangles()) {
    const Catalogue::Triple rotated{t[1], t[2], c.shift(t[0])};
    EXPECT_NE(std::find(c.triangles().begin(), c.triangles().end(), rotated), c.triangles().end());
  }
}

TEST(Catalogue, RejectsInvalidTables) {
  Catalogue::Tables t;
  t.names = {"0", "U", "A"};
  t.zero = 0;
  t.unit = 1;
  t.tensor = {{0, 0, 0}, {0, 1, 2}, {0, 1, 2}};  // not symmetric
  EXPECT_THROW(Catalogue{t}, catalogue_error);
  t.tensor = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  t.names = {"0", "U", "U"};
  EXPECT_THROW(Catalogue{t}, catalogue_error);
  t.names = {"0", "U", "A"};
  t.shift = {1, 0, 2};  // moves zero
  EXPECT_THROW(Catalogue{t}, catalogue_error);
  t.shift.clear();
  t.triangles = {{0, 1, 7}};
  EXPECT_THROW(Catalogue{t}, catalogue_error);
}

TEST(SupportDatum, SpectrumSatisfiesAxioms) {
  const Catalogue c = verify::five_object_model();
  const SupportDatum d = spc_support(c);
  EXPECT_TRUE(check_axioms(d, c).ok()) << check_axioms(d, c).to_text();
  // sigma(A (x) B) = sigma(0) = empty = sigma(A) n sigma(B)
  const auto a = *c.index_of("A"), b = *c.index_of("B");
  EXPECT_EQ(d.sigma[c.tensor(a, b)], PointMask{0});
  EXPECT_EQ(d.sigma[a] & d.sigma[b], PointMask{0});
}

TEST(SupportDatum, CorruptedUnitFailsAxiomA) {
  const Catalogue c = verify::five_object_model();
  SupportDatum d = spc_support(c);
  d.sigma[c.unit()] = 1;
  const Report r = check_axioms(d, c);
  ASSERT_FALSE(r.ok());
  const auto& checks = r.checks();
  const auto bad = std::find_if(checks.begin(), checks.end(), [](const Check& k) { return k.failed(); });
  EXPECT_EQ(bad->name, "(a) sigma(1) = X");
}

TEST(UniversalMap, IdentityFromSpectrum) {
  const Catalogue c = verify::five_object_model();
  const SupportDatum d = spc_support(c);
  const UniversalMap f = universal_map(d, c);
  EXPECT_TRUE(f.report.ok()) << f.report.to_text();
  ASSERT_EQ(f.image.size(), f.primes.size());
  for (std::size_t x = 0; x < f.image.size(); ++x) EXPECT_EQ(f.image[x], f.primes[x]);
  EXPECT_EQ(f.morphism_count, std::optional<std::size_t>(1));
}

TEST(UniversalMap, TwoPointDiscreteSpace) {
  const Catalogue c = verify::five_object_model();
  SupportDatum d{FiniteSpace::discrete(2), std::vector<PointMask>(c.size(), 0)};
  d.sigma[*c.index_of("U")] = 3;
  d.sigma[*c.index_of("A")] = 1;
  d.sigma[*c.index_of("B")] = 2;
  d.sigma[*c.index_of("A+B")] = 3;
  const UniversalMap f = universal_map(d, c);
  EXPECT_TRUE(f.report.ok()) << f.report.to_text();
  EXPECT_EQ(f.image, (std::vector<ObjectMask>{bits(c, {"0", "B"}), bits(c, {"0", "A"})}));
}

TEST(UniversalMap, EmptySupportOnNonzeroObjectIsAdvisory) {
  const Catalogue c = verify::five_object_model();
  SupportDatum d{FiniteSpace::discrete(1), std::vector<PointMask>(c.size(), 0)};
  d.sigma[*c.index_of("U")] = 1;
  d.sigma[*c.index_of("A")] = 1;
  d.sigma[*c.index_of("A+B")] = 1;
  const UniversalMap f = universal_map(d, c);
  EXPECT_TRUE(f.report.ok()) << f.report.to_text();
  const auto& checks = f.report.checks();
  EXPECT_TRUE(std::any_of(checks.begin(), checks.end(), [](const Check& k) { return k.status == Check::Status::Advisory; }));
}

TEST(Classification, FiveObjectModelBijection) {
  const Classification cl = classify(verify::five_object_model());
  EXPECT_EQ(cl.ideals.size(), 4u);
  EXPECT_EQ(cl.subsets.size(), 4u);
  EXPECT_TRUE(cl.report.ok()) << cl.report.to_text();
}

TEST(FiniteSpace, ThomasonLatticeOfChain) {
  // x <= y: up-closed subsets are {}, {y}, {x, y}.
  const FiniteSpace s({0b11, 0b10}, {"x", "y"});
  EXPECT_EQ(thomason_lattice(s), (std::vector<PointMask>{0, 0b10, 0b11}));
  EXPECT_THROW(FiniteSpace({0b11, 0b11}, {"x", "y"}), catalogue_error);
}
