#ifndef TTSUPPORT_RANDOM_HPP
#define TTSUPPORT_RANDOM_HPP

// Seeded generators for the property suites. Every generator draws only from the engine
// it is handed, so a (seed, suite, case) triple reproduces its inputs exactly.

#include "ttsupport/complex.hpp"
#include "ttsupport/supportdata.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ttsupport::gen {

using Rng = std::mt19937_64;

/// Engine for one case of one suite.
inline Rng case_rng(std::uint64_t seed, std::string_view suite, std::uint64_t id) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : suite) h = (h ^ ch) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
  return Rng(seq);
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(items.size()) - 1))];
}

/// Small primes used as the main pool, plus a few large ones that exercise BigInt paths.
inline const std::vector<BigInt>& prime_pool() {
  static const std::vector<BigInt> pool = first_primes(10);
  return pool;
}

inline const std::vector<BigInt>& large_primes() {
  static const std::vector<BigInt> pool = {BigInt(1009), BigInt(65537), BigInt(2147483647),
                                           parse_bigint("2305843009213693951"),
                                           parse_bigint("618970019642690137449562111")};
  return pool;
}

inline BigInt random_prime(Rng& rng, double large = 0.05) {
  return coin(rng, large) ? pick(rng, large_primes()) : pick(rng, prime_pool());
}

inline std::vector<BigInt> random_primes(Rng& rng, std::size_t max_count) {
  std::vector<BigInt> out;
  const long n = uniform(rng, 0, static_cast<long>(max_count));
  for (long i = 0; i < n; ++i) out.push_back(random_prime(rng));
  return out;
}

enum class SetShape { Empty, Finite, Cofinite };

inline PrimeSet random_prime_set(Rng& rng, SetShape shape) {
  switch (shape) {
    case SetShape::Empty: return coin(rng) ? PrimeSet::empty() : PrimeSet::all();
    case SetShape::Finite: return PrimeSet::finite(random_primes(rng, 4));
    case SetShape::Cofinite: return PrimeSet::cofinite(random_primes(rng, 4));
  }
  return {};
}

inline PrimeSet random_prime_set(Rng& rng) {
  return random_prime_set(rng, static_cast<SetShape>(uniform(rng, 0, 2)));
}

inline PrimeSet random_nonempty_prime_set(Rng& rng) {
  for (;;) {
    PrimeSet s = random_prime_set(rng);
    if (!s.is_empty()) return s;
  }
}

inline SpecZPoint random_point(Rng& rng) {
  return coin(rng, 0.2) ? SpecZPoint::generic() : SpecZPoint::closed(random_prime(rng));
}

inline SpclSubset random_spcl_subset(Rng& rng) {
  return coin(rng, 0.1) ? SpclSubset::all() : SpclSubset::closed(random_prime_set(rng));
}

inline Cyclic random_cyclic(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return Cyclic::free(random_prime_set(rng));
    case 1: return Cyclic::prufer(random_nonempty_prime_set(rng));
    default: return Cyclic::torsion(random_prime(rng), static_cast<unsigned>(uniform(rng, 1, 3)));
  }
}

inline Module random_module(Rng& rng, std::size_t max_terms = 3) {
  Module m;
  const long n = uniform(rng, 1, static_cast<long>(max_terms));
  for (long i = 0; i < n; ++i) m.add(random_cyclic(rng), static_cast<unsigned long>(uniform(rng, 1, 2)));
  return m;
}

inline GradedModule random_graded(Rng& rng) {
  GradedModule x;
  const long n = uniform(rng, 0, 3);
  for (long i = 0; i < n; ++i) x.add(uniform(rng, -2, 2), random_module(rng));
  return x;
}

/// Objects at or near zero: products that vanish for support reasons, and tiny nonzero
/// objects concentrated at a single large prime or at the generic point.
inline GradedModule random_near_zero(Rng& rng) {
  const BigInt p = random_prime(rng, 0.0);
  BigInt q = random_prime(rng, 0.0);
  while (q == p) q = random_prime(rng, 0.0);
  GradedModule a, b;
  switch (uniform(rng, 0, 5)) {
    case 0: return {};
    case 1:  // Z/p (x) Z/q
      a.add(0, Cyclic::torsion(p, 2));
      b.add(uniform(rng, -1, 1), Cyclic::torsion(q, 1));
      return kunneth(a, b);
    case 2:  // Z/p (x) Z[1/p]
      a.add(0, Cyclic::torsion(p, 1));
      b.add(0, Cyclic::free(PrimeSet::finite({p})));
      return kunneth(a, b);
    case 3:  // Q (x) Prufer
      a.add(0, Cyclic::rationals());
      b.add(1, Cyclic::prufer(random_nonempty_prime_set(rng)));
      return kunneth(a, b);
    case 4:
      a.add(uniform(rng, -2, 2), Cyclic::torsion(pick(rng, large_primes()), 1));
      return a;
    default:
      a.add(uniform(rng, -2, 2), Cyclic::rationals());
      return a;
  }
}

/// Integer matrix with entries in [-bound, bound].
inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 9) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

/// Random perfect complex with at most `max_length` nonzero degrees, ranks at most
/// `max_rank` and entries in [-bound, bound].
///
/// Each degree's basis is split into coordinates hit by the incoming differential and
/// coordinates read by the outgoing one, which forces d o d = 0; elementary basis changes
/// that keep every entry within the bound then mix the two parts.
inline PerfectComplex random_complex(Rng& rng, std::size_t max_length = 4, std::size_t max_rank = 4, long bound = 9) {
  const long length = uniform(rng, 1, static_cast<long>(max_length));
  const long lo = uniform(rng, -2, 1);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(length));
  for (auto& r : ranks) r = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rank)));
  // split[n]: first `split[n]` coordinates receive d^{n-1}, the rest feed d^n.
  std::vector<std::size_t> split(ranks.size());
  for (std::size_t n = 0; n < ranks.size(); ++n)
    split[n] = n == 0 ? 0 : static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks[n])));
  std::vector<IntMatrix> d;
  for (std::size_t n = 0; n + 1 < ranks.size(); ++n) {
    IntMatrix m(ranks[n + 1], ranks[n]);
    for (std::size_t i = 0; i < split[n + 1]; ++i)
      for (std::size_t j = split[n]; j < ranks[n]; ++j) m(i, j) = uniform(rng, -bound, bound);
    d.push_back(std::move(m));
  }
  auto within = [&](const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (abs_value(m(i, j)) > bound) return false;
    return true;
  };
  // Basis change in degree n: e_i' = e_i + s e_j. Rows of d^{n-1}: row j += s row i...
  // expressed as the matching row operation on d^{n-1} and inverse column operation on d^n.
  const long mixes = uniform(rng, 0, 6);
  for (long t = 0; t < mixes; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, length - 1));
    if (ranks[n] < 2) continue;
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks[n]) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks[n]) - 2));
    if (j >= i) ++j;
    const BigInt s = coin(rng) ? 1 : -1;
    std::optional<IntMatrix> in, out;
    if (n > 0) {
      in = d[n - 1];
      in->add_row(j, i, s);
    }
    if (n + 1 < ranks.size()) {
      out = d[n];
      out->add_col(i, j, BigInt(-s));
    }
    if ((in && !within(*in)) || (out && !within(*out))) continue;
    if (in) d[n - 1] = *in;
    if (out) d[n] = *out;
  }
  std::map<long, std::size_t> rank_map;
  std::map<long, IntMatrix> diff_map;
  for (std::size_t n = 0; n < ranks.size(); ++n) rank_map[lo + static_cast<long>(n)] = ranks[n];
  for (std::size_t n = 0; n < d.size(); ++n) diff_map[lo + static_cast<long>(n)] = d[n];
  return PerfectComplex(rank_map, diff_map);
}

/// A chain map out of or into `c`: a scalar, a scalar plus a null-homotopic map, or the
/// inclusion of a cycle Sigma^{-k} 1 -> c.
inline ChainMap random_chain_map(Rng& rng, const PerfectComplex& c) {
  const long mode = uniform(rng, 0, 2);
  if (mode == 2 && !c.is_empty()) {
    std::vector<long> degrees;
    for (const auto& [n, r] : c.ranks()) degrees.push_back(n);
    const long k = pick(rng, degrees);
    const IntMatrix& dk = c.differential(k);
    IntMatrix v(c.rank(k), 1);
    if (dk.rows() == 0 || dk.cols() == 0) {
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = uniform(rng, -3, 3);
    } else {
      const SNFResult s = snf(dk);
      for (std::size_t col = s.rank(); col < s.V.cols(); ++col) {
        const BigInt a = uniform(rng, -2, 2);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) += a * s.V(i, col);
      }
    }
    const PerfectComplex source = shift(PerfectComplex::unit(), -k);
    return ChainMap(source, c, {{k, v}});
  }
  std::map<long, IntMatrix> f;
  const BigInt scalar = uniform(rng, -3, 3);
  for (const auto& [n, r] : c.ranks()) {
    IntMatrix m = IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i) m(i, i) = scalar;
    f[n] = std::move(m);
  }
  if (mode == 1) {
    // f + d h + h d with h^n : C^n -> C^{n-1}.
    std::map<long, IntMatrix> h;
    for (const auto& [n, r] : c.ranks()) h[n] = random_matrix(rng, c.rank(n - 1), r, 2);
    for (const auto& [n, r] : c.ranks()) {
      if (c.rank(n - 1) > 0) f[n] = f[n] + c.differential(n - 1) * h[n];
      if (c.rank(n + 1) > 0) f[n] = f[n] + h[n + 1] * c.differential(n);
    }
  }
  return ChainMap(c, c, f);
}

/// A valid catalogue of `count` objects built from supports on `points` points.
///
/// Objects carry a support from an intersection-closed family (always including the
/// empty and the full support); tensor is intersection, the unit is a distinguished
/// object of full support. Summand pairs and triangles satisfy the support conditions and
/// are closed under tensoring with every object, so the tables behave like a genuine
/// tensor triangulated category at the level of supports.
inline Catalogue random_catalogue(Rng& rng, std::size_t count = 12, std::size_t points = 4) {
  using Support = std::uint32_t;
  const Support full = (Support{1} << points) - 1;
  std::vector<Support> family{0, full};
  const long extra = uniform(rng, 1, 4);
  for (long i = 0; i < extra; ++i) family.push_back(static_cast<Support>(uniform(rng, 1, full - 1)));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      const Support s = family[i] & family[j];
      if (std::find(family.begin(), family.end(), s) == family.end()) family.push_back(s);
    }
  std::sort(family.begin(), family.end());
  if (family.size() + 1 > count) family.resize(count - 1);  // keep 0 and the smallest ones
  if (std::find(family.begin(), family.end(), full) == family.end()) family.back() = full;
  // Re-close after truncation.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < family.size() && !grew; ++i)
      for (std::size_t j = 0; j < family.size() && !grew; ++j) {
        const Support s = family[i] & family[j];
        if (std::find(family.begin(), family.end(), s) == family.end()) {
          family.push_back(s);
          grew = true;
        }
      }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  // Object 0 = zero, object 1 = unit, then one representative per support, then copies.
  std::vector<Support> support{0, full};
  std::vector<std::size_t> rep_index(family.size());
  for (std::size_t f = 0; f < family.size(); ++f) {
    if (family[f] == 0) {
      rep_index[f] = 0;
      continue;
    }
    rep_index[f] = support.size();
    support.push_back(family[f]);
  }
  while (support.size() < count) support.push_back(family[static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(family.size()) - 1))]);
  const std::size_t n = support.size();
  auto rep = [&](Support s) {
    return rep_index[static_cast<std::size_t>(std::find(family.begin(), family.end(), s) - family.begin())];
  };

  Catalogue::Tables t;
  t.zero = 0;
  t.unit = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = i == 0 ? "0" : i == 1 ? "1" : "X" + std::to_string(i);
    t.names.push_back(name);
  }
  t.tensor.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t.tensor[a][b] = a == 1 ? b : b == 1 ? a : rep(support[a] & support[b]);

  auto tensor_all = [&](auto&& emit, const std::vector<std::size_t>& objs) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> out;
      for (std::size_t o : objs) out.push_back(t.tensor[o][x]);
      emit(out);
    }
  };
  const long summand_count = uniform(rng, 1, 4);
  for (long i = 0; i < summand_count; ++i) {
    const std::size_t a = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n) - 1));
    const std::size_t b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if ((support[b] & ~support[a]) != 0) continue;
    tensor_all([&](const std::vector<std::size_t>& o) { t.summands.emplace_back(o[0], o[1]); }, {a, b});
  }
  const long triangle_count = uniform(rng, 1, 5);
  for (long i = 0; i < triangle_count; ++i) {
    std::array<std::size_t, 3> tri{};
    for (auto& v : tri) v = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const Support s0 = support[tri[0]], s1 = support[tri[1]], s2 = support[tri[2]];
    if ((s0 & ~(s1 | s2)) || (s1 & ~(s0 | s2)) || (s2 & ~(s0 | s1))) continue;
    tensor_all([&](const std::vector<std::size_t>& o) { t.triangles.push_back({o[0], o[1], o[2]}); },
               {tri[0], tri[1], tri[2]});
  }
  return Catalogue(std::move(t));
}

}  // namespace ttsupport::gen

#endif  // TTSUPPORT_RANDOM_HPP
