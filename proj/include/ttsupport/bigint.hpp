#ifndef TTSUPPORT_BIGINT_HPP
#define TTSUPPORT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ttsupport {

using BigInt = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Whitespace is not accepted.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid digit in integer literal '" + std::string(text) + "'");
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt abs_value(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

namespace detail {

inline constexpr std::array<unsigned, 13> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17,
                                                               19, 23, 29, 31, 37, 41};

// n odd, n > 41.
inline bool miller_rabin_round(const BigInt& n, const BigInt& base) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  BigInt x = boost::multiprecision::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

inline int jacobi(BigInt a, BigInt n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

inline BigInt half_mod(const BigInt& x, const BigInt& n) {
  return (x & 1) == 0 ? BigInt(x >> 1) : BigInt((x + n) >> 1);
}

// Strong Lucas probable-prime test with Selfridge parameters. n odd, not a square.
inline bool strong_lucas(const BigInt& n) {
  BigInt d = 5;
  for (;;) {
    const int j = jacobi(d, n);
    if (j == -1) break;
    if (j == 0 && abs_value(d) != n) return false;
    d = d > 0 ? BigInt(-(d + 2)) : BigInt(-d + 2);
  }
  const BigInt q = (1 - d) / 4;
  BigInt k = n + 1;
  unsigned s = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++s;
  }
  // Left-to-right binary ladder on the odd part k.
  BigInt u = 1, v = 1, qk = mod_floor(q, n);
  const BigInt dm = mod_floor(d, n);
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(k));
  for (int b = static_cast<int>(bits) - 1; b >= 0; --b) {
    u = (u * v) % n;
    v = mod_floor(v * v - 2 * qk, n);
    qk = (qk * qk) % n;
    if (boost::multiprecision::bit_test(k, static_cast<unsigned>(b))) {
      const BigInt u2 = half_mod(mod_floor(u + v, n), n);
      const BigInt v2 = half_mod(mod_floor(dm * u + v, n), n);
      u = u2;
      v = v2;
      qk = mod_floor(qk * q, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qk, n);
    if (v == 0) return true;
    qk = (qk * qk) % n;
  }
  return false;
}

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

}  // namespace detail

/// Deterministic primality for all inputs below 3.3e24 (trial division, then Miller-Rabin
/// on the first 13 prime bases). Larger inputs also pass a strong Lucas test (BPSW).
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if ((n & 1) == 0) return false;
  if (n < (BigInt(1) << 32)) {
    const auto m = static_cast<std::uint64_t>(n);
    for (std::uint64_t f = 3; f * f <= m; f += 2)
      if (m % f == 0) return false;
    return true;
  }
  for (unsigned p : detail::kMillerRabinBases)
    if (n % p == 0) return false;
  for (unsigned p : detail::kMillerRabinBases)
    if (!detail::miller_rabin_round(n, BigInt(p))) return false;
  static const BigInt deterministic_limit = parse_bigint("3317044064679887385961981");
  if (n < deterministic_limit) return true;
  const BigInt r = detail::isqrt(n);
  if (r * r == n) return false;
  return detail::strong_lucas(n);
}

namespace detail {

inline BigInt pollard_brent(const BigInt& n, unsigned seed) {
  if ((n & 1) == 0) return 2;
  BigInt y = seed + 1, c = seed + 2, g = 1, r = 1, q = 1, x, ys;
  const unsigned m = 64;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  do {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    do {
      ys = y;
      for (unsigned i = 0; i < m && k + i < r; ++i) {
        y = f(y);
        q = (q * abs_value(x - y)) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs_value(x - ys), n);
    } while (g == 1);
  }
  return g;
}

inline void factor_into(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned seed = 0;; ++seed) {
    const BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace detail

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
inline std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  BigInt m = abs_value(n);
  std::vector<BigInt> primes;
  for (unsigned p = 2; p < 1000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  detail::factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<BigInt, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

/// Primes in [2, bound], ascending.
inline std::vector<BigInt> primes_up_to(unsigned bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<BigInt> out;
  for (unsigned i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.emplace_back(i);
    for (unsigned long j = static_cast<unsigned long>(i) * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

/// First `count` primes, ascending.
inline std::vector<BigInt> first_primes(std::size_t count) {
  std::vector<BigInt> out;
  for (unsigned n = 2; out.size() < count; ++n)
    if (is_prime(BigInt(n))) out.emplace_back(n);
  return out;
}

}  // namespace ttsupport

#endif  // TTSUPPORT_BIGINT_HPP
