#include "ttsupport/bigint.hpp"

#include <gtest/gtest.h>

#include <numeric>

using ttsupport::BigInt;

namespace {

bool trial_division_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(BigInt, ParsesSignedDecimal) {
  EXPECT_EQ(ttsupport::parse_bigint("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
  EXPECT_EQ(ttsupport::parse_bigint("+7"), 7);
  EXPECT_THROW(ttsupport::parse_bigint(""), std::invalid_argument);
  EXPECT_THROW(ttsupport::parse_bigint("-"), std::invalid_argument);
  EXPECT_THROW(ttsupport::parse_bigint("12a"), std::invalid_argument);
  EXPECT_THROW(ttsupport::parse_bigint(" 1"), std::invalid_argument);
}

TEST(BigInt, PrimalityAgreesWithTrialDivisionBelowTenThousand) {
  for (unsigned long long n = 0; n < 10000; ++n) EXPECT_EQ(ttsupport::is_prime(n), trial_division_prime(n)) << n;
}

TEST(BigInt, PrimalityOnHardComposites) {
  // Carmichael numbers and strong pseudoprimes to several small bases.
  for (const char* n : {"561", "41041", "3215031751", "3825123056546413051", "318665857834031151167461"})
    EXPECT_FALSE(ttsupport::is_prime(ttsupport::parse_bigint(n))) << n;
}

TEST(BigInt, PrimalityOnMersennePrimes) {
  for (unsigned e : {31u, 61u, 89u, 107u, 127u}) {
    const BigInt m = (BigInt(1) << e) - 1;
    EXPECT_TRUE(ttsupport::is_prime(m)) << e;
  }
  EXPECT_FALSE(ttsupport::is_prime((BigInt(1) << 67) - 1));
}

TEST(BigInt, FactorizationMultipliesBack) {
  for (const char* text : {"1", "360", "600851475143", "147573952589676412927", "-1001"}) {
    const BigInt n = ttsupport::parse_bigint(text);
    BigInt product = 1;
    BigInt last = 0;
    for (const auto& [p, e] : ttsupport::factorize(n)) {
      EXPECT_TRUE(ttsupport::is_prime(p));
      EXPECT_GT(p, last);
      last = p;
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    EXPECT_EQ(product, ttsupport::abs_value(n)) << text;
  }
  EXPECT_THROW(ttsupport::factorize(0), std::invalid_argument);
}

TEST(BigInt, SplitsSemiprimeOfTwoLargePrimes) {
  const BigInt p = (BigInt(1) << 31) - 1, q = 1000003;
  const auto f = ttsupport::factorize(p * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, q);
  EXPECT_EQ(f[1].first, p);
}

TEST(BigInt, PrimeLists) {
  const auto small = ttsupport::primes_up_to(30);
  EXPECT_EQ(small, (std::vector<BigInt>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(ttsupport::first_primes(10), small);
  EXPECT_EQ(ttsupport::primes_up_to(1000).size(), 168u);
}

TEST(BigInt, GcdIsNonNegative) {
  EXPECT_EQ(ttsupport::gcd(-12, 18), 6);
  EXPECT_EQ(ttsupport::gcd(0, -5), 5);
  EXPECT_EQ(ttsupport::gcd(0, 0), 0);
}
