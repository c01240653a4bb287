#ifndef TTSUPPORT_ZNUM_HPP
#define TTSUPPORT_ZNUM_HPP

// Prime sets, points of Spec Z and the lattice of specialisation-closed subsets.
//
// Only finite and cofinite sets of closed points are representable. That class is
// closed under every operation the rest of the library needs (closures of points,
// finite unions of supports, complements) and keeps membership decidable.

#include "ttsupport/bigint.hpp"

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttsupport {

/// A finite or cofinite set of rational primes, stored canonically.
class PrimeSet {
 public:
  enum class Mode { Finite, Cofinite };

  PrimeSet() = default;

  static PrimeSet finite(std::vector<BigInt> primes) { return PrimeSet(Mode::Finite, std::move(primes)); }
  static PrimeSet cofinite(std::vector<BigInt> primes) { return PrimeSet(Mode::Cofinite, std::move(primes)); }
  static PrimeSet finite(std::initializer_list<long long> primes) { return finite(widen(primes)); }
  static PrimeSet cofinite(std::initializer_list<long long> primes) { return cofinite(widen(primes)); }
  static PrimeSet empty() { return PrimeSet(); }
  static PrimeSet all() { return PrimeSet(Mode::Cofinite, {}); }

  Mode mode() const { return mode_; }
  bool is_finite() const { return mode_ == Mode::Finite; }
  bool is_cofinite() const { return mode_ == Mode::Cofinite; }
  /// The finite list (Finite) or the excluded list (Cofinite).
  const std::vector<BigInt>& primes() const { return primes_; }

  bool is_empty() const { return is_finite() && primes_.empty(); }
  bool is_all() const { return is_cofinite() && primes_.empty(); }

  bool contains(const BigInt& p) const {
    const bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
    return is_finite() ? listed : !listed;
  }

  PrimeSet complement() const {
    PrimeSet out;
    out.mode_ = is_finite() ? Mode::Cofinite : Mode::Finite;
    out.primes_ = primes_;
    return out;
  }

  friend PrimeSet unite(const PrimeSet& a, const PrimeSet& b) {
    if (a.is_finite() && b.is_finite()) return raw(Mode::Finite, set_union(a.primes_, b.primes_));
    if (a.is_cofinite() && b.is_cofinite()) return raw(Mode::Cofinite, set_intersection(a.primes_, b.primes_));
    const PrimeSet& fin = a.is_finite() ? a : b;
    const PrimeSet& cof = a.is_finite() ? b : a;
    return raw(Mode::Cofinite, set_difference(cof.primes_, fin.primes_));
  }

  friend PrimeSet intersect(const PrimeSet& a, const PrimeSet& b) {
    if (a.is_finite() && b.is_finite()) return raw(Mode::Finite, set_intersection(a.primes_, b.primes_));
    if (a.is_cofinite() && b.is_cofinite()) return raw(Mode::Cofinite, set_union(a.primes_, b.primes_));
    const PrimeSet& fin = a.is_finite() ? a : b;
    const PrimeSet& cof = a.is_finite() ? b : a;
    return raw(Mode::Finite, set_difference(fin.primes_, cof.primes_));
  }

  friend PrimeSet difference(const PrimeSet& a, const PrimeSet& b) { return intersect(a, b.complement()); }

  /// Subset order.
  friend bool is_subset(const PrimeSet& a, const PrimeSet& b) { return difference(a, b).is_empty(); }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend bool operator<(const PrimeSet& a, const PrimeSet& b) {
    if (a.mode_ != b.mode_) return a.mode_ < b.mode_;
    return a.primes_ < b.primes_;
  }

  /// Some primes of the set, smallest first: the listed primes (Finite) or the first
  /// `count` primes not excluded (Cofinite).
  std::vector<BigInt> sample(std::size_t count) const {
    if (is_finite())
      return {primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(std::min(count, primes_.size()))};
    std::vector<BigInt> out;
    for (BigInt n = 2; out.size() < count; ++n)
      if (is_prime(n) && contains(n)) out.push_back(n);
    return out;
  }

  std::string to_string() const {
    std::string body = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i) body += ",";
      body += primes_[i].str();
    }
    body += "}";
    return is_finite() ? body : "cofinite" + body;
  }

 private:
  PrimeSet(Mode mode, std::vector<BigInt> primes) : mode_(mode), primes_(std::move(primes)) {
    for (const auto& p : primes_)
      if (!is_prime(p)) throw std::invalid_argument("PrimeSet: " + p.str() + " is not a prime");
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  }

  // Inputs already canonical.
  static PrimeSet raw(Mode mode, std::vector<BigInt> primes) {
    PrimeSet out;
    out.mode_ = mode;
    out.primes_ = std::move(primes);
    return out;
  }

  static std::vector<BigInt> widen(std::initializer_list<long long> values) {
    return {values.begin(), values.end()};
  }

  static std::vector<BigInt> set_union(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<BigInt> set_intersection(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<BigInt> set_difference(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Mode mode_ = Mode::Finite;
  std::vector<BigInt> primes_;
};

/// A point of Spec Z: the generic point (0) or a closed point (p).
class SpecZPoint {
 public:
  static SpecZPoint generic() { return SpecZPoint(); }
  static SpecZPoint closed(const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("SpecZPoint: " + p.str() + " is not a prime");
    SpecZPoint x;
    x.prime_ = p;
    return x;
  }

  bool is_generic() const { return !prime_.has_value(); }
  bool is_closed() const { return prime_.has_value(); }
  /// Precondition: is_closed().
  const BigInt& prime() const { return *prime_; }

  friend bool operator==(const SpecZPoint&, const SpecZPoint&) = default;
  friend bool operator<(const SpecZPoint& a, const SpecZPoint& b) {
    if (a.is_generic() || b.is_generic()) return a.is_generic() && !b.is_generic();
    return a.prime() < b.prime();
  }

  std::string to_string() const { return is_generic() ? "(0)" : "(" + prime_->str() + ")"; }

 private:
  SpecZPoint() = default;
  std::optional<BigInt> prime_;
};

/// An arbitrary representable subset of Spec Z: the generic point or not, plus a
/// finite/cofinite set of closed points. Used for supports and Neeman codes, which
/// need not be specialisation closed.
struct PointSet {
  bool generic = false;
  PrimeSet closed;

  static PointSet none() { return {}; }
  static PointSet everything() { return {true, PrimeSet::all()}; }
  static PointSet only(const SpecZPoint& x) {
    return x.is_generic() ? PointSet{true, {}} : PointSet{false, PrimeSet::finite({x.prime()})};
  }

  bool is_empty() const { return !generic && closed.is_empty(); }
  bool contains(const SpecZPoint& x) const { return x.is_generic() ? generic : closed.contains(x.prime()); }

  PointSet complement() const { return {!generic, closed.complement()}; }
  friend PointSet unite(const PointSet& a, const PointSet& b) {
    return {a.generic || b.generic, unite(a.closed, b.closed)};
  }
  friend PointSet intersect(const PointSet& a, const PointSet& b) {
    return {a.generic && b.generic, intersect(a.closed, b.closed)};
  }
  friend bool is_subset(const PointSet& a, const PointSet& b) {
    return (!a.generic || b.generic) && is_subset(a.closed, b.closed);
  }
  friend bool operator==(const PointSet&, const PointSet&) = default;

  std::string to_string() const {
    if (closed.is_finite()) {
      std::string out = "{";
      bool first = true;
      if (generic) {
        out += "(0)";
        first = false;
      }
      for (const auto& p : closed.primes()) {
        if (!first) out += ",";
        out += "(" + p.str() + ")";
        first = false;
      }
      return out + "}";
    }
    std::string out = generic ? "{(0)} u " : "";
    out += "{(p) : p not in {";
    for (std::size_t i = 0; i < closed.primes().size(); ++i) {
      if (i) out += ",";
      out += closed.primes()[i].str();
    }
    return out + "}}";
  }
};

/// A specialisation-closed (equivalently Thomason) subset of Spec Z: all of Spec Z,
/// or a finite/cofinite set of closed points.
class SpclSubset {
 public:
  static SpclSubset all() { return SpclSubset(true, {}); }
  static SpclSubset closed(PrimeSet s) { return SpclSubset(false, std::move(s)); }
  static SpclSubset empty() { return closed(PrimeSet::empty()); }

  bool is_all() const { return all_; }
  /// Precondition: !is_all().
  const PrimeSet& primes() const { return primes_; }

  bool contains_point(const SpecZPoint& x) const {
    if (all_) return true;
    return x.is_closed() && primes_.contains(x.prime());
  }

  PointSet points() const { return all_ ? PointSet::everything() : PointSet{false, primes_}; }

  friend SpclSubset join(const SpclSubset& a, const SpclSubset& b) {
    if (a.all_ || b.all_) return all();
    return closed(unite(a.primes_, b.primes_));
  }
  friend SpclSubset meet(const SpclSubset& a, const SpclSubset& b) {
    if (a.all_) return b;
    if (b.all_) return a;
    return closed(intersect(a.primes_, b.primes_));
  }
  friend bool leq(const SpclSubset& a, const SpclSubset& b) {
    if (b.all_) return true;
    if (a.all_) return false;
    return is_subset(a.primes_, b.primes_);
  }

  friend bool operator==(const SpclSubset&, const SpclSubset&) = default;

  std::string to_string() const { return all_ ? "Spec Z" : "closed " + primes_.to_string(); }

 private:
  SpclSubset(bool all, PrimeSet s) : all_(all), primes_(all ? PrimeSet() : std::move(s)) {}

  bool all_ = false;
  PrimeSet primes_;
};

/// Closure of {x}.
inline SpclSubset v_of_point(const SpecZPoint& x) {
  if (x.is_generic()) return SpclSubset::all();
  return SpclSubset::closed(PrimeSet::finite({x.prime()}));
}

/// {y : x not in closure of y}, the points that do not generalise to x.
inline SpclSubset z_of_point(const SpecZPoint& x) {
  if (x.is_generic()) return SpclSubset::closed(PrimeSet::all());
  return SpclSubset::closed(PrimeSet::cofinite({x.prime()}));
}

}  // namespace ttsupport

#endif  // TTSUPPORT_ZNUM_HPP
