#ifndef TTSUPPORT_COMPLEX_HPP
#define TTSUPPORT_COMPLEX_HPP

// Perfect complexes over Z: bounded complexes of finite-rank free modules with integer
// differentials, cohomological indexing (d^n : C^n -> C^{n+1}), Sigma lowering degree.

#include "ttsupport/modcalc.hpp"
#include "ttsupport/snf.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttsupport {

class complex_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PerfectComplex {
 public:
  PerfectComplex() = default;

  /// Validates shapes and d^{n+1} d^n = 0. Missing differentials are zero maps.
  PerfectComplex(const std::map<long, std::size_t>& ranks, const std::map<long, IntMatrix>& differentials) {
    for (const auto& [n, r] : ranks)
      if (r) ranks_[n] = r;
    for (const auto& [n, d] : differentials) {
      if (d.rows() != rank(n + 1) || d.cols() != rank(n))
        throw complex_error("differential d^" + std::to_string(n) + " has shape " + d.shape() + ", expected " +
                            std::to_string(rank(n + 1)) + "x" + std::to_string(rank(n)));
      if (!d.empty() && !d.is_zero()) diffs_[n] = d;
    }
    for (const auto& [n, d] : diffs_) {
      auto next = diffs_.find(n + 1);
      if (next != diffs_.end() && !(next->second * d).is_zero())
        throw complex_error("d^" + std::to_string(n + 1) + " * d^" + std::to_string(n) + " != 0");
    }
  }

  static PerfectComplex unit() { return PerfectComplex({{0, 1}}, {}); }
  /// Z --a--> Z in degrees 0 and 1.
  static PerfectComplex two_term(const BigInt& a) {
    IntMatrix d(1, 1);
    d(0, 0) = a;
    return PerfectComplex({{0, 1}, {1, 1}}, {{0, d}});
  }

  std::size_t rank(long n) const {
    auto it = ranks_.find(n);
    return it == ranks_.end() ? 0 : it->second;
  }
  /// d^n as a rank(n+1) x rank(n) matrix.
  IntMatrix differential(long n) const {
    auto it = diffs_.find(n);
    return it == diffs_.end() ? IntMatrix(rank(n + 1), rank(n)) : it->second;
  }

  bool is_empty() const { return ranks_.empty(); }
  /// Lowest/highest degree with nonzero rank. Precondition: !is_empty().
  long lo() const { return ranks_.begin()->first; }
  long hi() const { return ranks_.rbegin()->first; }
  const std::map<long, std::size_t>& ranks() const { return ranks_; }
  /// Nonzero differentials only.
  const std::map<long, IntMatrix>& differentials() const { return diffs_; }

  friend bool operator==(const PerfectComplex&, const PerfectComplex&) = default;

 private:
  std::map<long, std::size_t> ranks_;
  std::map<long, IntMatrix> diffs_;
};

/// Degreewise matrices f^n : A^n -> B^n commuting with the differentials.
class ChainMap {
 public:
  ChainMap(PerfectComplex source, PerfectComplex target, std::map<long, IntMatrix> components)
      : source_(std::move(source)), target_(std::move(target)) {
    for (auto& [n, f] : components) {
      if (f.rows() != target_.rank(n) || f.cols() != source_.rank(n))
        throw complex_error("chain map component f^" + std::to_string(n) + " has shape " + f.shape() +
                            ", expected " + std::to_string(target_.rank(n)) + "x" + std::to_string(source_.rank(n)));
      if (!f.empty()) components_[n] = std::move(f);
    }
    std::vector<long> degrees;
    for (const auto& [n, r] : source_.ranks()) degrees.push_back(n);
    for (const auto& [n, r] : target_.ranks()) degrees.push_back(n);
    for (long n : degrees) {
      // d_B f^n == f^{n+1} d_A
      if (!(target_.differential(n) * component(n) == component(n + 1) * source_.differential(n)))
        throw complex_error("not a chain map: square fails to commute in degree " + std::to_string(n));
    }
  }

  const PerfectComplex& source() const { return source_; }
  const PerfectComplex& target() const { return target_; }
  IntMatrix component(long n) const {
    auto it = components_.find(n);
    return it == components_.end() ? IntMatrix(target_.rank(n), source_.rank(n)) : it->second;
  }

 private:
  PerfectComplex source_, target_;
  std::map<long, IntMatrix> components_;
};

/// Multiplication by `a` on the unit complex Z.
inline ChainMap scalar_on_unit(const BigInt& a) {
  IntMatrix m(1, 1);
  m(0, 0) = a;
  return ChainMap(PerfectComplex::unit(), PerfectComplex::unit(), {{0, m}});
}

/// (Sigma^k C)^n = C^{n+k} with differential (-1)^k d.
inline PerfectComplex shift(const PerfectComplex& c, long k) {
  std::map<long, std::size_t> ranks;
  std::map<long, IntMatrix> diffs;
  for (const auto& [n, r] : c.ranks()) ranks[n - k] = r;
  for (const auto& [n, d] : c.differentials()) diffs[n - k] = (k % 2 == 0) ? d : IntMatrix(-d);
  return PerfectComplex(ranks, diffs);
}

/// Degreewise direct sum.
inline PerfectComplex direct_sum(const PerfectComplex& a, const PerfectComplex& b) {
  std::map<long, std::size_t> ranks = a.ranks();
  for (const auto& [n, r] : b.ranks()) ranks[n] += r;
  std::map<long, IntMatrix> diffs;
  for (const auto& [n, r] : ranks) {
    IntMatrix d(ranks.count(n + 1) ? ranks.at(n + 1) : 0, r);
    place_block(d, 0, 0, a.differential(n));
    place_block(d, a.rank(n + 1), a.rank(n), b.differential(n));
    diffs[n] = std::move(d);
  }
  return PerfectComplex(ranks, diffs);
}

/// Mapping cone: cone^n = A^{n+1} (+) B^n, d = [[-d_A, 0], [f, d_B]].
inline PerfectComplex cone(const ChainMap& f) {
  const PerfectComplex& a = f.source();
  const PerfectComplex& b = f.target();
  std::map<long, std::size_t> ranks;
  for (const auto& [n, r] : a.ranks()) ranks[n - 1] += r;
  for (const auto& [n, r] : b.ranks()) ranks[n] += r;
  std::map<long, IntMatrix> diffs;
  for (const auto& [n, r] : ranks) {
    const std::size_t rows = a.rank(n + 2) + b.rank(n + 1);
    IntMatrix d(rows, r);
    place_block(d, 0, 0, IntMatrix(-a.differential(n + 1)));
    place_block(d, a.rank(n + 2), 0, f.component(n + 1));
    place_block(d, a.rank(n + 2), a.rank(n + 1), b.differential(n));
    diffs[n] = std::move(d);
  }
  return PerfectComplex(ranks, diffs);
}

/// Total tensor complex, d(a (x) b) = da (x) b + (-1)^i a (x) db for a in degree i.
inline PerfectComplex tensor_chain(const PerfectComplex& a, const PerfectComplex& b) {
  std::map<long, std::size_t> ranks;
  // Block offsets of A^i (x) B^{n-i} inside (A (x) B)^n, blocks ordered by i.
  std::map<long, std::map<long, std::size_t>> offset;
  for (const auto& [i, ri] : a.ranks())
    for (const auto& [j, rj] : b.ranks()) {
      const long n = i + j;
      offset[n][i] = 0;
      ranks[n] += 0;
    }
  for (auto& [n, blocks] : offset) {
    std::size_t pos = 0;
    for (auto& [i, off] : blocks) {
      off = pos;
      pos += a.rank(i) * b.rank(n - i);
    }
    ranks[n] = pos;
  }
  std::map<long, IntMatrix> diffs;
  for (const auto& [n, blocks] : offset) {
    auto next = offset.find(n + 1);
    if (next == offset.end()) continue;
    IntMatrix d(ranks[n + 1], ranks[n]);
    for (const auto& [i, col] : blocks) {
      const long j = n - i;
      const std::size_t ri = a.rank(i), rj = b.rank(j);
      if (auto to = next->second.find(i + 1); to != next->second.end() && a.rank(i + 1))
        place_block(d, to->second, col, kronecker(a.differential(i), IntMatrix::identity(rj)));
      if (auto to = next->second.find(i); to != next->second.end() && b.rank(j + 1)) {
        IntMatrix block = kronecker(IntMatrix::identity(ri), b.differential(j));
        place_block(d, to->second, col, (i % 2 == 0) ? block : IntMatrix(-block));
      }
    }
    diffs[n] = std::move(d);
  }
  return PerfectComplex(ranks, diffs);
}

/// Decomposes a positive integer n into primary cyclics Z/p^k.
inline Module cyclic_decomposition(const BigInt& n) {
  Module out;
  if (n == 1) return out;
  for (const auto& [p, k] : factorize(n)) out.add(Cyclic::torsion(p, k));
  return out;
}

/// H^n = ker d^n / im d^{n-1}: free part of rank r_n - rk d^n - rk d^{n-1}, torsion read
/// off the invariant factors of d^{n-1} (C^n / ker d^n is free).
inline GradedModule homology(const PerfectComplex& c) {
  GradedModule out;
  if (c.is_empty()) return out;
  std::map<long, std::vector<BigInt>> factors;
  for (const auto& [n, d] : c.differentials()) factors[n] = invariant_factors(d);
  auto rank_of = [&](long n) -> std::size_t {
    auto it = factors.find(n);
    return it == factors.end() ? 0 : it->second.size();
  };
  for (const auto& [n, r] : c.ranks()) {
    const std::size_t free_rank = r - rank_of(n) - rank_of(n - 1);
    out.add(n, Cyclic::integers(), free_rank);
    if (auto it = factors.find(n - 1); it != factors.end())
      for (const auto& f : it->second) out.add(n, cyclic_decomposition(f));
  }
  return out;
}

}  // namespace ttsupport

#endif  // TTSUPPORT_COMPLEX_HPP
