#ifndef TTSUPPORT_ORACLE_HPP
#define TTSUPPORT_ORACLE_HPP

// Reference computations for verification. Nothing in the computational headers uses
// these; they reach the same answers by different routes.
//
//  - invariant factors from gcds of k x k minors;
//  - brute-force prime-set semantics over an explicit range of primes;
//  - per-prime truncation: a Prufer family, a localization or a stable Koszul complex is
//    replaced by a directed system of finite stages whose groups come from chain-level
//    homology and whose transition maps are applied element by element.

#include "ttsupport/complex.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ttsupport::oracle {

// ---- SNF

namespace detail {

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// d_k = D_k / D_{k-1} where D_k is the gcd of all k x k minors.
inline std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt previous = 1;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    BigInt g = 0;
    detail::for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      detail::for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = gcd(g, determinant(sub));
      });
    });
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// ---- prime sets

/// Explicit members of s among the primes in `universe`.
inline std::set<BigInt> members(const PrimeSet& s, const std::vector<BigInt>& universe) {
  std::set<BigInt> out;
  for (const auto& p : universe) {
    const bool listed = std::find(s.primes().begin(), s.primes().end(), p) != s.primes().end();
    if (listed == s.is_finite()) out.insert(p);
  }
  return out;
}

// ---- truncation systems

/// A directed system of cyclic groups G_k = Z/order(k) (order 0 meaning Z, 1 meaning 0)
/// with transition G_k -> G_{k+1}, x -> multiplier(k) * x.
struct CyclicSystem {
  std::function<BigInt(unsigned)> order;
  std::function<BigInt(unsigned)> multiplier;
};

/// p-primary stage of a cyclic at level k: Z[T^-1] -> (Z, x t_T), Z/q^e -> (Z/p^e if q=p),
/// Prufer(S) -> (Z/p^k, x p) if p in S. t_T multiplies the primes of T up to `bound`.
inline CyclicSystem stage_system(const Cyclic& c, const BigInt& p, unsigned bound) {
  switch (c.kind()) {
    case Cyclic::Kind::Free: {
      BigInt t = 1;
      for (const auto& q : members(c.primes(), primes_up_to(bound))) t *= q;
      return {[](unsigned) { return BigInt(0); }, [t](unsigned) { return t; }};
    }
    case Cyclic::Kind::Torsion: {
      const BigInt order = c.prime() == p ? BigInt(boost::multiprecision::pow(p, c.exponent())) : BigInt(1);
      return {[order](unsigned) { return order; }, [](unsigned) { return BigInt(1); }};
    }
    case Cyclic::Kind::Prufer: {
      if (!c.primes().contains(p)) return {[](unsigned) { return BigInt(1); }, [](unsigned) { return BigInt(1); }};
      return {[p](unsigned k) { return BigInt(boost::multiprecision::pow(p, k)); }, [p](unsigned) { return p; }};
    }
  }
  return {};
}

/// Free resolution of Z/n (n >= 2), Z (n = 0) or 0 (n = 1) as a perfect complex.
inline PerfectComplex resolution(const BigInt& n) {
  if (n == 0) return PerfectComplex::unit();
  if (n == 1) return PerfectComplex();
  return cone(scalar_on_unit(n));
}

/// Order of the cyclic group in degree `degree` of a graded module with at most one
/// summand there, read back as an integer (0 for Z, 1 for the zero group).
inline BigInt cyclic_order(const GradedModule& h, long degree) {
  const Module m = h.at(degree);
  if (m.is_zero()) return 1;
  BigInt order = 1;
  for (const auto& [c, mult] : m.terms()) {
    if (c.is_free() && c.primes().is_empty() && mult == 1 && m.terms().size() == 1) return 0;
    if (!c.is_torsion()) throw std::logic_error("cyclic_order: non-finite summand");
    for (unsigned long i = 0; i < mult; ++i) order *= boost::multiprecision::pow(c.prime(), c.exponent());
  }
  return order;
}

/// Tensor of two stage systems. Stage groups come from the chain-level derived tensor of
/// resolutions; the generator 1(x)1 moves by the product of the two multipliers.
inline CyclicSystem tensor_system(const CyclicSystem& a, const CyclicSystem& b) {
  return {[a, b](unsigned k) {
            return cyclic_order(homology(tensor_chain(resolution(a.order(k)), resolution(b.order(k)))), 0);
          },
          [a, b](unsigned k) { return BigInt(a.multiplier(k) * b.multiplier(k)); }};
}

/// Tor of two stage systems, Tor(Z/a, N) = N[a] inside N = Z/b. A map Z/a -> Z/a' given
/// by x c lifts to resolutions with degree-one component x (c a / a'); on N[a] the
/// transition is that factor times N's multiplier. The group is recorded as the order of
/// N (so elements are residues mod b) and the Tor order is checked against the chain
/// level in `colimit`.
struct TorSystem {
  CyclicSystem first, second;
};

enum class ColimitKind { Zero, Stable, Prufer, Localization, Unknown };

struct Colimit {
  ColimitKind kind = ColimitKind::Unknown;
  BigInt order;                 ///< Stable
  std::set<BigInt> inverted;    ///< Localization: primes dividing the transitions
  std::string to_string() const {
    switch (kind) {
      case ColimitKind::Zero: return "0";
      case ColimitKind::Stable: return "Z/" + order.str();
      case ColimitKind::Prufer: return "Prufer";
      case ColimitKind::Localization: {
        std::string s = "Z[1/{";
        bool first = true;
        for (const auto& p : inverted) {
          s += (first ? "" : ",") + p.str();
          first = false;
        }
        return s + "}]";
      }
      case ColimitKind::Unknown: return "?";
    }
    return "?";
  }
};

namespace detail {

// Elements of a finite stage as residues modulo `modulus`, with the map applied directly.
struct FiniteStage {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> elements;
  std::uint64_t multiplier = 1;  // to the next stage, reduced modulo its modulus
};

inline std::uint64_t narrow(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint32_t>::max()))
    throw std::out_of_range("oracle: stage too large for brute force");
  return static_cast<std::uint64_t>(v);
}

inline std::uint64_t reduce(const BigInt& v, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(BigInt(v % modulus));
}

inline Colimit classify_finite(const std::vector<FiniteStage>& stages) {
  const std::size_t n = stages.size();
  auto step = [&](std::size_t k, std::uint64_t x) { return (x * stages[k].multiplier) % stages[k + 1].modulus; };
  bool all_zero_groups = true;
  for (const auto& s : stages) all_zero_groups = all_zero_groups && s.elements.size() <= 1;
  if (all_zero_groups) return {ColimitKind::Zero, 0, {}};
  // Eventually zero: everything in the first third dies by the last stage.
  bool dies = true;
  for (std::size_t k = 0; dies && k + 1 < n && k <= n / 3; ++k)
    for (std::uint64_t x : stages[k].elements) {
      for (std::size_t j = k; j + 1 < n; ++j) x = step(j, x);
      if (x != 0) {
        dies = false;
        break;
      }
    }
  if (dies) return {ColimitKind::Zero, 0, {}};
  // Stable: the transitions of the second half are bijections.
  bool injective = true, bijective = true, growing = true;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<char> seen(stages[k + 1].modulus, 0);
    std::size_t distinct = 0;
    for (std::uint64_t x : stages[k].elements) {
      char& slot = seen[step(k, x)];
      if (!slot) ++distinct;
      slot = 1;
    }
    injective = injective && distinct == stages[k].elements.size();
    if (2 * (k + 1) >= n) bijective = bijective && distinct == stages[k].elements.size() && distinct == stages[k + 1].elements.size();
    growing = growing && stages[k + 1].elements.size() > stages[k].elements.size();
  }
  if (bijective) return {ColimitKind::Stable, BigInt(stages.back().elements.size()), {}};
  if (injective && growing) return {ColimitKind::Prufer, 0, {}};
  return {};
}

inline std::vector<std::uint64_t> all_residues(std::uint64_t modulus) {
  std::vector<std::uint64_t> out(modulus);
  for (std::uint64_t x = 0; x < modulus; ++x) out[x] = x;
  return out;
}

}  // namespace detail

/// Colimit of a tensor system over levels 1..levels. Infinite stages (Z) must stay
/// infinite; their colimit is Z with the primes dividing the transitions inverted.
inline Colimit colimit(const CyclicSystem& s, unsigned levels, unsigned bound) {
  if (s.order(1) == 0) {
    Colimit c{ColimitKind::Localization, 0, {}};
    for (unsigned k = 1; k <= levels; ++k) {
      if (s.order(k) != 0) return {};
      for (const auto& q : primes_up_to(bound))
        if (s.multiplier(k) % q == 0) c.inverted.insert(q);
    }
    return c;
  }
  std::vector<BigInt> orders;
  for (unsigned k = 1; k <= levels + 1; ++k) orders.push_back(s.order(k));
  std::vector<detail::FiniteStage> stages;
  for (unsigned k = 1; k <= levels; ++k) {
    if (orders[k - 1] == 0) return {};
    const std::uint64_t n = detail::narrow(orders[k - 1]);
    const std::uint64_t next = orders[k] == 0 ? 1 : detail::narrow(orders[k]);
    stages.push_back({n, detail::all_residues(n), detail::reduce(s.multiplier(k), next)});
  }
  return detail::classify_finite(stages);
}

/// Colimit of Tor stages, cross-checking each stage's order against chain-level homology.
inline Colimit colimit(const TorSystem& t, unsigned levels, unsigned bound) {
  (void)bound;
  std::vector<detail::FiniteStage> stages;
  for (unsigned k = 1; k <= levels; ++k) {
    const BigInt a = t.first.order(k), b = t.second.order(k);
    const BigInt chain = cyclic_order(homology(tensor_chain(resolution(a), resolution(b))), -1);
    if (a == 0 || b == 0) {
      if (chain != 1) return {};
      stages.push_back({1, {0}, 0});
      continue;
    }
    const std::uint64_t bb = detail::narrow(b), aa = detail::reduce(a, bb);
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t x = 0; x < bb; ++x)
      if ((aa * x) % bb == 0) kernel.push_back(x);
    if (BigInt(kernel.size()) != chain) return {};
    const BigInt a_next = t.first.order(k + 1), b_next = t.second.order(k + 1);
    const BigInt lift = t.first.multiplier(k) * a / a_next;
    const std::uint64_t next = b_next == 0 ? 1 : detail::narrow(b_next);
    stages.push_back({bb, std::move(kernel), detail::reduce(BigInt(lift * t.second.multiplier(k)), next)});
  }
  // Stages that were recorded as the zero group map into modulus 1.
  for (std::size_t k = 0; k + 1 < stages.size(); ++k)
    if (stages[k + 1].modulus == 1) stages[k].multiplier = 0;
  return detail::classify_finite(stages);
}

/// p-primary part of a table answer, in the same vocabulary.
inline Colimit expected_p_part(const Module& m, const BigInt& p, unsigned bound) {
  Colimit out{ColimitKind::Zero, 0, {}};
  for (const auto& [c, mult] : m.terms()) {
    if (mult != 1) return {};
    Colimit piece;
    switch (c.kind()) {
      case Cyclic::Kind::Free:
        piece = {ColimitKind::Localization, 0, members(c.primes(), primes_up_to(bound))};
        break;
      case Cyclic::Kind::Torsion:
        if (c.prime() != p) continue;
        piece = {ColimitKind::Stable, boost::multiprecision::pow(p, c.exponent()), {}};
        break;
      case Cyclic::Kind::Prufer:
        if (!c.primes().contains(p)) continue;
        piece = {ColimitKind::Prufer, 0, {}};
        break;
    }
    if (out.kind != ColimitKind::Zero) return {};
    out = piece;
  }
  return out;
}

inline bool same(const Colimit& a, const Colimit& b) {
  return a.kind == b.kind && (a.kind != ColimitKind::Stable || a.order == b.order) &&
         (a.kind != ColimitKind::Localization || a.inverted == b.inverted);
}

/// p-part of H^1 of the stable Koszul complex Z -> Z[S^-1], truncated to Z --t^k--> Z with
/// t the product of the primes of S up to `bound`. H^0 of every stage must vanish.
inline Colimit koszul_p_part(const PrimeSet& s, const BigInt& p, unsigned levels, unsigned bound) {
  BigInt t = 1;
  for (const auto& q : members(s, primes_up_to(bound))) t *= q;
  // Stage k is H^1 of Z --t^k--> Z. Its p-part Z/p^e sits inside as the multiples of
  // t^k / p^e; elements are recorded by their index i <-> i t^k / p^e.
  std::vector<BigInt> steps, sizes;
  for (unsigned k = 1; k <= levels + 1; ++k) {
    const BigInt tk = boost::multiprecision::pow(t, k);
    const GradedModule h = homology(PerfectComplex::two_term(tk));
    if (!h.at(0).is_zero()) return {};
    BigInt pe = 1;
    const Module top = h.at(1);
    for (const auto& [c, mult] : top.terms())
      if (c.is_torsion() && c.prime() == p) pe = boost::multiprecision::pow(p, c.exponent());
    sizes.push_back(pe);
    steps.push_back(tk / pe);
  }
  std::vector<detail::FiniteStage> stages;
  for (unsigned k = 0; k < levels; ++k) {
    // (1, x t) maps Z --t^k--> Z to Z --t^{k+1}--> Z; on H^1 it is x -> t x.
    const BigInt image = steps[k] * t;
    if (image % steps[k + 1] != 0) return {};
    const std::uint64_t n = detail::narrow(sizes[k]);
    stages.push_back({n, detail::all_residues(n), detail::reduce(BigInt(image / steps[k + 1]), detail::narrow(sizes[k + 1]))});
  }
  return detail::classify_finite(stages);
}

// ---- thick subcategories of perfect complexes

/// Indecomposable summand types of a finitely generated homology: Z or Z/p^k.
struct Indecomposable {
  bool free = false;
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
  friend auto operator<=>(const Indecomposable& a, const Indecomposable& b) {
    if (a.free != b.free) return a.free <=> b.free;
    if (a.prime != b.prime) return a.prime < b.prime ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.exponent <=> b.exponent;
  }
};

inline std::set<Indecomposable> indecomposables(const PerfectComplex& c) {
  std::set<Indecomposable> out;
  const GradedModule h = homology(c);
  for (const auto& [n, m] : h.degrees())
    for (const auto& [cyc, mult] : m.terms()) {
      if (cyc.is_torsion()) out.insert({false, cyc.prime(), cyc.exponent()});
      else if (cyc.is_free() && cyc.primes().is_empty()) out.insert({true, 0, 0});
      else throw std::logic_error("indecomposables: perfect complex with non-finitely-generated homology");
    }
  return out;
}

/// Membership in thick(gens) by forward generation. Complexes over Z split into shifted
/// homology, so thick(gens) is generated by the indecomposables of the generators, closed
/// under the moves (each realised by an explicit triangle):
///   Z        -> Z/n             (cone of x n on Z)
///   Z/p^a    -> Z/p             (summand of Z/p^a (x) cone(x p))
///   Z/p, Z/p^(k-1) -> Z/p^k     (Z/p^(k-1) -> Z/p^k -> Z/p)
/// The moves are applied inside the finite universe of types y can need.
inline bool thick_generated(const PerfectComplex& y, const std::vector<PerfectComplex>& gens) {
  std::set<Indecomposable> reach;
  for (const auto& g : gens)
    for (const auto& t : indecomposables(g)) reach.insert(t);
  const std::set<Indecomposable> target = indecomposables(y);
  std::set<Indecomposable> universe = target;
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](const Indecomposable& t) { changed = reach.insert(t).second || changed; };
    const std::set<Indecomposable> current = reach;
    for (const auto& t : current) {
      if (t.free) {
        for (const auto& u : universe)
          if (!u.free) add(u);
      } else {
        add({false, t.prime, 1});
      }
    }
    for (const auto& u : universe)
      if (!u.free && reach.count({false, u.prime, 1}))
        for (unsigned k = 2; k <= u.exponent; ++k)
          if (reach.count({false, u.prime, k - 1})) add({false, u.prime, k});
  }
  for (const auto& t : target)
    if (!reach.count(t)) return false;
  return true;
}

/// The chain map cone(p^(k-1)) -> cone(p^k), 1 in degree -1 and p in degree 0, whose cone
/// realises Z/p^(k-1) -> Z/p^k -> Z/p.
inline ChainMap torsion_extension(const BigInt& p, unsigned k) {
  const BigInt lower = boost::multiprecision::pow(p, k - 1), upper = boost::multiprecision::pow(p, k);
  IntMatrix one(1, 1), times_p(1, 1);
  one(0, 0) = 1;
  times_p(0, 0) = p;
  return ChainMap(cone(scalar_on_unit(lower)), cone(scalar_on_unit(upper)), {{-1, one}, {0, times_p}});
}

}  // namespace ttsupport::oracle

#endif  // TTSUPPORT_ORACLE_HPP
