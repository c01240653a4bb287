#ifndef TTSUPPORT_MODCALC_HPP
#define TTSUPPORT_MODCALC_HPP

// Cyclic-module calculus over Z: localizations Z[T^-1], primary cyclics Z/p^k and
// Prufer families, with exact tensor/Tor tables and the Kunneth tensor of formal
// objects of D(Z).
//
// Isomorphism is structural equality of canonical forms. Finite direct sums of rank-one
// localizations, primary cyclics and Prufer groups decompose uniquely (up to iso and
// order of summands); the only non-uniqueness in the written form is the grouping of
// Prufer groups into families, which canonicalization fixes by storing the families as a
// nested chain of prime sets.

#include "ttsupport/znum.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ttsupport {

class Cyclic {
 public:
  enum class Kind { Free, Torsion, Prufer };

  /// Z[T^-1]. free(empty) is Z, free(all) is Q.
  static Cyclic free(PrimeSet inverted) { return Cyclic(Kind::Free, std::move(inverted), 0, 0); }
  static Cyclic integers() { return free(PrimeSet::empty()); }
  static Cyclic rationals() { return free(PrimeSet::all()); }
  /// Z/p^k, k >= 1.
  static Cyclic torsion(const BigInt& p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("Cyclic::torsion: " + p.str() + " is not a prime");
    if (k == 0) throw std::invalid_argument("Cyclic::torsion: exponent must be positive");
    return Cyclic(Kind::Torsion, {}, p, k);
  }
  /// Direct sum of Z(p^inf) over p in S; S must be nonempty.
  static Cyclic prufer(PrimeSet primes) {
    if (primes.is_empty()) throw std::invalid_argument("Cyclic::prufer: empty prime family");
    return Cyclic(Kind::Prufer, std::move(primes), 0, 0);
  }

  Kind kind() const { return kind_; }
  bool is_free() const { return kind_ == Kind::Free; }
  bool is_torsion() const { return kind_ == Kind::Torsion; }
  bool is_prufer() const { return kind_ == Kind::Prufer; }
  /// Inverted primes (Free) or the family (Prufer).
  const PrimeSet& primes() const { return primes_; }
  /// Torsion only.
  const BigInt& prime() const { return prime_; }
  unsigned exponent() const { return exponent_; }

  friend bool operator==(const Cyclic&, const Cyclic&) = default;
  friend bool operator<(const Cyclic& a, const Cyclic& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.kind_ == Kind::Torsion) {
      if (a.prime_ != b.prime_) return a.prime_ < b.prime_;
      return a.exponent_ < b.exponent_;
    }
    return a.primes_ < b.primes_;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Free:
        if (primes_.is_empty()) return "Z";
        if (primes_.is_all()) return "Q";
        return "Z[1/" + primes_.to_string() + "]";
      case Kind::Torsion:
        return "Z/" + prime_.str() + "^" + std::to_string(exponent_);
      case Kind::Prufer:
        return "Prufer" + primes_.to_string();
    }
    return {};
  }

 private:
  Cyclic(Kind kind, PrimeSet primes, BigInt prime, unsigned exponent)
      : kind_(kind), primes_(std::move(primes)), prime_(std::move(prime)), exponent_(exponent) {}

  Kind kind_;
  PrimeSet primes_;
  BigInt prime_;
  unsigned exponent_ = 0;
};

/// Finite direct sum of cyclics, kept canonical.
class Module {
 public:
  using Terms = std::map<Cyclic, unsigned long>;

  Module() = default;
  Module(std::initializer_list<Cyclic> summands) {
    for (const auto& c : summands) add(c);
  }

  void add(const Cyclic& c, unsigned long multiplicity = 1) {
    if (multiplicity == 0) return;
    terms_[c] += multiplicity;
    if (c.is_prufer()) normalize_prufer();
  }
  void add(const Module& other) {
    bool prufer = false;
    for (const auto& [c, mult] : other.terms_) {
      terms_[c] += mult;
      prufer = prufer || c.is_prufer();
    }
    if (prufer) normalize_prufer();
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t summand_count() const {
    std::size_t n = 0;
    for (const auto& [c, mult] : terms_) n += mult;
    return n;
  }

  friend bool operator==(const Module&, const Module&) = default;
  friend bool operator<(const Module& a, const Module& b) { return a.terms_ < b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [c, mult] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_string();
      if (mult > 1) out += "x" + std::to_string(mult);
    }
    return out;
  }

 private:
  // Rewrites the Prufer summands as a chain L1 >= L2 >= ... where Lk holds the primes
  // occurring in at least k families.
  void normalize_prufer() {
    std::vector<std::pair<PrimeSet, unsigned long>> families;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.is_prufer()) {
        families.emplace_back(it->first.primes(), it->second);
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    std::set<BigInt> listed;
    unsigned long default_count = 0;  // multiplicity of any unlisted prime
    for (const auto& [s, mult] : families) {
      listed.insert(s.primes().begin(), s.primes().end());
      if (s.is_cofinite()) default_count += mult;
    }
    std::map<BigInt, unsigned long> count;
    std::set<unsigned long> levels;
    if (default_count) levels.insert(default_count);
    for (const auto& p : listed) {
      unsigned long c = 0;
      for (const auto& [s, mult] : families)
        if (s.contains(p)) c += mult;
      count[p] = c;
      if (c) levels.insert(c);
    }
    // Layer L_k is constant for k in (previous level, level].
    unsigned long previous = 0;
    for (unsigned long level : levels) {
      std::vector<BigInt> members;
      for (const auto& [p, c] : count)
        if ((c >= level) != (default_count >= level)) members.push_back(p);
      PrimeSet layer = default_count >= level ? PrimeSet::cofinite(members) : PrimeSet::finite(members);
      if (!layer.is_empty()) terms_[Cyclic::prufer(std::move(layer))] += level - previous;
      previous = level;
    }
  }

  Terms terms_;
};

/// Formal object of D(Z): cohomological degree -> module, zero degrees omitted.
class GradedModule {
 public:
  using Degrees = std::map<long, Module>;

  GradedModule() = default;
  GradedModule(std::initializer_list<std::pair<const long, Module>> degrees) {
    for (const auto& [n, m] : degrees) add(n, m);
  }

  void add(long degree, const Module& m) {
    if (m.is_zero()) return;
    degrees_[degree].add(m);
  }
  void add(long degree, const Cyclic& c, unsigned long multiplicity = 1) {
    if (multiplicity == 0) return;
    degrees_[degree].add(c, multiplicity);
  }

  bool is_zero() const { return degrees_.empty(); }
  const Degrees& degrees() const { return degrees_; }
  Module at(long degree) const {
    auto it = degrees_.find(degree);
    return it == degrees_.end() ? Module() : it->second;
  }

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

  std::string to_string() const {
    if (degrees_.empty()) return "0";
    std::string out = "{";
    bool first = true;
    for (const auto& [n, m] : degrees_) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(n) + ": [" + m.to_string() + "]";
    }
    return out + "}";
  }

 private:
  Degrees degrees_;
};

/// a (x)_Z b.
inline Module tensor_mod(const Cyclic& a, const Cyclic& b) {
  using K = Cyclic::Kind;
  if (b.kind() < a.kind()) return tensor_mod(b, a);
  Module out;
  switch (a.kind()) {
    case K::Free:
      if (b.is_free()) out.add(Cyclic::free(unite(a.primes(), b.primes())));
      else if (b.is_torsion()) {
        if (!a.primes().contains(b.prime())) out.add(b);
      } else {
        PrimeSet rest = difference(b.primes(), a.primes());
        if (!rest.is_empty()) out.add(Cyclic::prufer(std::move(rest)));
      }
      break;
    case K::Torsion:
      if (b.is_torsion() && a.prime() == b.prime())
        out.add(Cyclic::torsion(a.prime(), std::min(a.exponent(), b.exponent())));
      break;
    case K::Prufer:
      break;
  }
  return out;
}

/// Tor_1^Z(a, b).
inline Module tor_mod(const Cyclic& a, const Cyclic& b) {
  using K = Cyclic::Kind;
  if (b.kind() < a.kind()) return tor_mod(b, a);
  Module out;
  switch (a.kind()) {
    case K::Free:
      break;
    case K::Torsion:
      if (b.is_torsion() && a.prime() == b.prime())
        out.add(Cyclic::torsion(a.prime(), std::min(a.exponent(), b.exponent())));
      else if (b.is_prufer() && b.primes().contains(a.prime()))
        out.add(a);
      break;
    case K::Prufer: {
      PrimeSet common = intersect(a.primes(), b.primes());
      if (!common.is_empty()) out.add(Cyclic::prufer(std::move(common)));
      break;
    }
  }
  return out;
}

namespace detail {

template <class Table>
Module bilinear(const Module& a, const Module& b, Table table) {
  Module out;
  for (const auto& [x, mx] : a.terms())
    for (const auto& [y, my] : b.terms()) {
      const Module piece = table(x, y);
      for (const auto& [c, mc] : piece.terms()) out.add(c, mc * mx * my);
    }
  return out;
}

}  // namespace detail

inline Module tensor_mod(const Module& a, const Module& b) {
  return detail::bilinear(a, b, [](const Cyclic& x, const Cyclic& y) { return tensor_mod(x, y); });
}
inline Module tor_mod(const Module& a, const Module& b) {
  return detail::bilinear(a, b, [](const Cyclic& x, const Cyclic& y) { return tor_mod(x, y); });
}

/// Derived tensor of formal objects: H^n = sum_{i+j=n} H^i (x) H^j + sum_{i+j=n+1} Tor(H^i, H^j).
inline GradedModule kunneth(const GradedModule& x, const GradedModule& y) {
  GradedModule out;
  for (const auto& [i, mi] : x.degrees())
    for (const auto& [j, mj] : y.degrees()) {
      out.add(i + j, tensor_mod(mi, mj));
      out.add(i + j - 1, tor_mod(mi, mj));
    }
  return out;
}

/// Sigma^k X, with (Sigma^k X)^n = X^{n+k}.
inline GradedModule shift_graded(const GradedModule& x, long k) {
  GradedModule out;
  for (const auto& [n, m] : x.degrees()) out.add(n - k, m);
  return out;
}

inline GradedModule sum_graded(const GradedModule& x, const GradedModule& y) {
  GradedModule out = x;
  for (const auto& [n, m] : y.degrees()) out.add(n, m);
  return out;
}

inline bool is_zero(const GradedModule& x) { return x.is_zero(); }

/// Homological support of a cyclic.
inline PointSet supp_mod(const Cyclic& c) {
  switch (c.kind()) {
    case Cyclic::Kind::Free:
      return {true, c.primes().complement()};
    case Cyclic::Kind::Torsion:
      return {false, PrimeSet::finite({c.prime()})};
    case Cyclic::Kind::Prufer:
      return {false, c.primes()};
  }
  return {};
}

inline PointSet supp_mod(const Module& m) {
  PointSet out;
  for (const auto& [c, mult] : m.terms()) out = unite(out, supp_mod(c));
  return out;
}

/// Union of the homological supports of all degrees.
inline PointSet supp_mod(const GradedModule& x) {
  PointSet out;
  for (const auto& [n, m] : x.degrees()) out = unite(out, supp_mod(m));
  return out;
}

}  // namespace ttsupport

#endif  // TTSUPPORT_MODCALC_HPP
