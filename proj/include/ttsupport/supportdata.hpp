#ifndef TTSUPPORT_SUPPORTDATA_HPP
#define TTSUPPORT_SUPPORTDATA_HPP

// Finite abstract tensor-triangulated models ("catalogues"): exhaustive enumeration of
// thick tensor-ideals and primes, support data on finite spaces, the universal support
// datum and the ideal/subset classification.
//
// A catalogue lists objects up to isomorphism (and up to shift when the shift table is
// the identity). Nothing here checks that a catalogue is realised by an actual tensor
// triangulated category.

#include "ttsupport/report.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ttsupport {

using ObjectMask = std::uint32_t;
using PointMask = std::uint64_t;

inline constexpr std::size_t kMaxEnumeratedObjects = 24;
inline constexpr std::size_t kMaxSpacePoints = 24;
inline constexpr std::size_t kMaxUniquenessPoints = 6;

class catalogue_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Catalogue {
 public:
  using Triple = std::array<std::size_t, 3>;

  struct Tables {
    std::vector<std::string> names;
    std::size_t zero = 0;
    std::size_t unit = 0;
    std::vector<std::size_t> shift;               ///< empty means identity
    std::vector<std::vector<std::size_t>> tensor;  ///< full n x n table
    std::vector<std::pair<std::size_t, std::size_t>> summands;  ///< (object, summand of it)
    std::vector<Triple> sums;       ///< (k, l, k (+) l)
    std::vector<Triple> triangles;  ///< k -> l -> m -> Sigma k
  };

  /// Validates the tables. Sums contribute their summand pairs and split triangles, and
  /// the triangle list is closed under rotation (k,l,m) -> (l,m,Sigma k).
  explicit Catalogue(Tables t) : t_(std::move(t)) {
    const std::size_t n = t_.names.size();
    if (n == 0) throw catalogue_error("objects: catalogue is empty");
    if (n > 64) throw catalogue_error("objects: at most 64 objects are supported");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.insert(t_.names[i]).second) throw catalogue_error("objects[" + std::to_string(i) + "]: duplicate name '" + t_.names[i] + "'");
    check_index(t_.zero, "zero");
    check_index(t_.unit, "unit");
    if (t_.shift.empty())
      for (std::size_t i = 0; i < n; ++i) t_.shift.push_back(i);
    if (t_.shift.size() != n) throw catalogue_error("shift: table must cover every object");
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      check_index(t_.shift[i], "shift[" + t_.names[i] + "]");
      if (hit[t_.shift[i]]) throw catalogue_error("shift: not a bijection (" + t_.names[t_.shift[i]] + " hit twice)");
      hit[t_.shift[i]] = true;
    }
    if (t_.shift[t_.zero] != t_.zero) throw catalogue_error("shift[" + t_.names[t_.zero] + "]: shift must fix zero");

    if (t_.tensor.size() != n) throw catalogue_error("tensor: table must have a row per object");
    for (std::size_t a = 0; a < n; ++a) {
      if (t_.tensor[a].size() != n) throw catalogue_error("tensor[" + t_.names[a] + "]: row must cover every object");
      for (std::size_t b = 0; b < n; ++b) check_index(t_.tensor[a][b], "tensor[" + t_.names[a] + "][" + t_.names[b] + "]");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (tensor(t_.unit, a) != a) throw catalogue_error("tensor[" + t_.names[t_.unit] + "][" + t_.names[a] + "]: unit must act as identity");
      if (tensor(t_.zero, a) != t_.zero) throw catalogue_error("tensor[" + t_.names[t_.zero] + "][" + t_.names[a] + "]: zero must absorb");
      for (std::size_t b = 0; b < n; ++b) {
        if (tensor(a, b) != tensor(b, a)) throw catalogue_error("tensor[" + t_.names[a] + "][" + t_.names[b] + "]: table is not commutative");
        for (std::size_t c = 0; c < n; ++c)
          if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
            throw catalogue_error("tensor: not associative at (" + t_.names[a] + ", " + t_.names[b] + ", " + t_.names[c] + ")");
      }
    }
    for (std::size_t i = 0; i < t_.summands.size(); ++i) {
      check_index(t_.summands[i].first, "summands[" + std::to_string(i) + "][0]");
      check_index(t_.summands[i].second, "summands[" + std::to_string(i) + "][1]");
    }
    for (std::size_t i = 0; i < t_.sums.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) check_index(t_.sums[i][j], "sums[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    for (std::size_t i = 0; i < t_.triangles.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j)
        check_index(t_.triangles[i][j], "triangles[" + std::to_string(i) + "][" + std::to_string(j) + "]");

    for (const auto& [k, l, s] : t_.sums) {
      t_.summands.emplace_back(s, k);
      t_.summands.emplace_back(s, l);
      t_.triangles.push_back({k, s, l});
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs(t_.summands.begin(), t_.summands.end());
    t_.summands.assign(pairs.begin(), pairs.end());
    std::set<Triple> closed;
    std::vector<Triple> todo = t_.triangles;
    while (!todo.empty()) {
      Triple tri = todo.back();
      todo.pop_back();
      if (!closed.insert(tri).second) continue;
      todo.push_back({tri[1], tri[2], t_.shift[tri[0]]});
    }
    t_.triangles.assign(closed.begin(), closed.end());
  }

  std::size_t size() const { return t_.names.size(); }
  const std::string& name(std::size_t i) const { return t_.names[i]; }
  const std::vector<std::string>& names() const { return t_.names; }
  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(t_.names.begin(), t_.names.end(), name);
    if (it == t_.names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - t_.names.begin());
  }
  std::size_t zero() const { return t_.zero; }
  std::size_t unit() const { return t_.unit; }
  std::size_t shift(std::size_t i) const { return t_.shift[i]; }
  std::size_t tensor(std::size_t a, std::size_t b) const { return t_.tensor[a][b]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& summands() const { return t_.summands; }
  const std::vector<Triple>& sums() const { return t_.sums; }
  const std::vector<Triple>& triangles() const { return t_.triangles; }
  const Tables& tables() const { return t_; }

  std::string describe(ObjectMask m) const {
    std::string out = "{";
    for (std::size_t i = 0; i < size(); ++i)
      if (m >> i & 1u) out += (out.size() > 1 ? "," : "") + t_.names[i];
    return out + "}";
  }

 private:
  void check_index(std::size_t i, const std::string& where) const {
    if (i >= t_.names.size()) throw catalogue_error(where + ": object index out of range");
  }

  Tables t_;
};

namespace detail {

// Closure requirements of a thick tensor-ideal, as bitmasks.
struct IdealRules {
  std::vector<ObjectMask> need;        // object -> objects forced with it
  std::vector<std::array<ObjectMask, 3>> triangles;  // one bit per vertex
  ObjectMask zero_bit = 0;
  ObjectMask all = 0;

  explicit IdealRules(const Catalogue& c) {
    const std::size_t n = c.size();
    if (n > kMaxEnumeratedObjects)
      throw catalogue_error("objects: exhaustive enumeration supports at most " + std::to_string(kMaxEnumeratedObjects) +
                            " objects, got " + std::to_string(n));
    need.assign(n, 0);
    for (std::size_t l = 0; l < n; ++l) {
      need[l] |= ObjectMask{1} << c.shift(l);
      for (std::size_t k = 0; k < n; ++k) need[l] |= ObjectMask{1} << c.tensor(k, l);
    }
    for (const auto& [obj, part] : c.summands()) need[obj] |= ObjectMask{1} << part;
    for (const auto& t : c.triangles())
      triangles.push_back({ObjectMask{1} << t[0], ObjectMask{1} << t[1], ObjectMask{1} << t[2]});
    std::sort(triangles.begin(), triangles.end());
    triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
    zero_bit = ObjectMask{1} << c.zero();
    all = n == 32 ? ~ObjectMask{0} : (ObjectMask{1} << n) - 1;
  }

  bool is_ideal(ObjectMask s) const {
    if (!(s & zero_bit)) return false;
    for (ObjectMask rest = s; rest; rest &= rest - 1) {
      const int l = std::countr_zero(rest);
      if ((need[l] & ~s) != 0) return false;
    }
    for (const auto& t : triangles)
      if (vertices_inside(t, s) == 2) return false;
    return true;
  }

  // Counted per vertex, so (k, k, m) forces m from k but not k from m.
  static int vertices_inside(const std::array<ObjectMask, 3>& t, ObjectMask s) {
    return ((t[0] & s) != 0) + ((t[1] & s) != 0) + ((t[2] & s) != 0);
  }

  ObjectMask closure(ObjectMask s) const {
    s |= zero_bit;
    for (;;) {
      ObjectMask next = s;
      for (ObjectMask rest = s; rest; rest &= rest - 1) next |= need[std::countr_zero(rest)];
      for (const auto& t : triangles)
        if (vertices_inside(t, next) >= 2) next |= t[0] | t[1] | t[2];
      if (next == s) return s;
      s = next;
    }
  }
};

inline ObjectMask deposit_bits(std::uint64_t index, ObjectMask positions) {
  ObjectMask out = 0;
  for (ObjectMask rest = positions; rest && index; rest &= rest - 1, index >>= 1)
    if (index & 1u) out |= rest & (~rest + 1);
  return out;
}

inline bool by_size_then_mask(ObjectMask a, ObjectMask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace detail

inline bool is_thick_tensor_ideal(const Catalogue& c, ObjectMask s) { return detail::IdealRules(c).is_ideal(s); }

/// Smallest thick tensor-ideal containing s.
inline ObjectMask ideal_closure(const Catalogue& c, ObjectMask s) { return detail::IdealRules(c).closure(s); }

/// All thick tensor-ideals, ordered by size then mask.
///
/// Exhaustive scan over subsets, pruned to objects whose generated ideal avoids the unit
/// (any other object can only sit in the whole catalogue). The scan range is split over
/// `workers` threads; the merge is deterministic.
inline std::vector<ObjectMask> enumerate_ideals(const Catalogue& c, unsigned workers = 1) {
  const detail::IdealRules rules(c);
  const ObjectMask unit_bit = ObjectMask{1} << c.unit();
  ObjectMask allowed = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != c.zero() && !(rules.closure(ObjectMask{1} << i) & unit_bit)) allowed |= ObjectMask{1} << i;
  const std::uint64_t count = std::uint64_t{1} << std::popcount(allowed);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(count, 64))));
  std::vector<std::vector<ObjectMask>> found(workers);
  auto scan = [&](unsigned w) {
    const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const ObjectMask s = detail::deposit_bits(i, allowed) | rules.zero_bit;
      if (rules.is_ideal(s)) found[w].push_back(s);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::vector<ObjectMask> out;
  for (const auto& f : found) out.insert(out.end(), f.begin(), f.end());
  if (rules.is_ideal(rules.all)) out.push_back(rules.all);
  std::sort(out.begin(), out.end(), detail::by_size_then_mask);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Proper ideal P with k (x) l in P implying k in P or l in P.
inline bool is_prime_ideal(const Catalogue& c, ObjectMask p) {
  if (p >> c.unit() & 1u) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (p >> k & 1u) continue;
    for (std::size_t l = k; l < c.size(); ++l)
      if (!(p >> l & 1u) && (p >> c.tensor(k, l) & 1u)) return false;
  }
  return true;
}

inline std::vector<ObjectMask> enumerate_primes(const Catalogue& c, unsigned workers = 1) {
  std::vector<ObjectMask> out;
  for (ObjectMask s : enumerate_ideals(c, workers))
    if (is_prime_ideal(c, s)) out.push_back(s);
  return out;
}

/// Finite space with the specialisation order: x <= y iff y lies in the closure of x.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// `up[x]` is the mask of points y with x <= y. Validates a partial order.
  FiniteSpace(std::vector<PointMask> up, std::vector<std::string> labels = {})
      : up_(std::move(up)), labels_(std::move(labels)) {
    const std::size_t n = up_.size();
    if (n > 64) throw catalogue_error("space: at most 64 points are supported");
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i) labels_.push_back("x" + std::to_string(i));
    if (labels_.size() != n) throw catalogue_error("space: one label per point required");
    for (std::size_t x = 0; x < n; ++x) {
      if (!(up_[x] >> x & 1u)) throw catalogue_error("space: order not reflexive at " + labels_[x]);
      if (n < 64 && (up_[x] >> n) != 0) throw catalogue_error("space: order mentions unknown point at " + labels_[x]);
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && leq(x, y) && leq(y, x))
          throw catalogue_error("space: order not antisymmetric at " + labels_[x] + ", " + labels_[y]);
        if (leq(x, y) && (up_[y] & ~up_[x]) != 0)
          throw catalogue_error("space: order not transitive through " + labels_[y]);
      }
    }
  }

  static FiniteSpace discrete(std::size_t n) {
    std::vector<PointMask> up;
    for (std::size_t i = 0; i < n; ++i) up.push_back(PointMask{1} << i);
    return FiniteSpace(std::move(up));
  }

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x] >> y & 1u; }
  PointMask up(std::size_t x) const { return up_[x]; }
  PointMask all() const { return size() == 64 ? ~PointMask{0} : (PointMask{1} << size()) - 1; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Specialisation closed (up-closed).
  bool is_up_closed(PointMask s) const {
    for (PointMask rest = s; rest; rest &= rest - 1)
      if ((up_[std::countr_zero(rest)] & ~s) != 0) return false;
    return true;
  }

  std::string describe(PointMask s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < size(); ++i)
      if (s >> i & 1u) out += (out.size() > 1 ? "," : "") + labels_[i];
    return out + "}";
  }

 private:
  std::vector<PointMask> up_;
  std::vector<std::string> labels_;
};

/// (X, sigma): a finite space and a specialisation-closed subset per catalogue object.
struct SupportDatum {
  FiniteSpace space;
  std::vector<PointMask> sigma;

  void validate(const Catalogue& c) const {
    if (sigma.size() != c.size()) throw catalogue_error("sigma: one subset per catalogue object required");
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      if ((sigma[k] & ~space.all()) != 0) throw catalogue_error("sigma[" + c.name(k) + "]: unknown point");
      if (!space.is_up_closed(sigma[k])) throw catalogue_error("sigma[" + c.name(k) + "]: not specialisation closed");
    }
  }
};

/// Spc with supp k = {P : k not in P}. Points follow enumerate_primes order; Q is a
/// specialisation of P iff Q is contained in P.
inline SupportDatum spc_support(const Catalogue& c, unsigned workers = 1) {
  const std::vector<ObjectMask> primes = enumerate_primes(c, workers);
  if (primes.size() > 64) throw catalogue_error("spectrum has more than 64 points");
  std::vector<PointMask> up(primes.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < primes.size(); ++p) {
    labels.push_back(c.describe(primes[p]));
    for (std::size_t q = 0; q < primes.size(); ++q)
      if ((primes[q] & ~primes[p]) == 0) up[p] |= PointMask{1} << q;
  }
  SupportDatum d{FiniteSpace(std::move(up), std::move(labels)), std::vector<PointMask>(c.size(), 0)};
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t p = 0; p < primes.size(); ++p)
      if (!(primes[p] >> k & 1u)) d.sigma[k] |= PointMask{1} << p;
  return d;
}

/// The five support-data axioms, each over every relevant object, pair, sum or triangle.
inline Report check_axioms(const SupportDatum& d, const Catalogue& c) {
  Report r;
  d.validate(c);
  const auto& s = d.sigma;
  const auto& space = d.space;
  auto show = [&](PointMask m) { return space.describe(m); };

  r.add({"(a) sigma(1) = X", s[c.unit()] == space.all() ? Check::Status::Pass : Check::Status::Fail,
         s[c.unit()] == space.all() ? "" : show(space.all()), s[c.unit()] == space.all() ? "" : show(s[c.unit()])});
  r.add({"(a) sigma(0) = empty", s[c.zero()] == 0 ? Check::Status::Pass : Check::Status::Fail,
         s[c.zero()] == 0 ? "" : "{}", s[c.zero()] == 0 ? "" : show(s[c.zero()])});

  std::string witness;
  for (const auto& [k, l, sum] : c.sums())
    if (witness.empty() && s[sum] != (s[k] | s[l]))
      witness = c.name(sum) + " = " + c.name(k) + " (+) " + c.name(l) + ": " + show(s[sum]) + " vs " + show(s[k] | s[l]);
  r.expect("(b) sigma(k (+) l) = sigma(k) u sigma(l)", witness.empty(), witness);

  witness.clear();
  for (std::size_t k = 0; k < c.size() && witness.empty(); ++k)
    if (s[c.shift(k)] != s[k]) witness = c.name(k) + ": " + show(s[k]) + " vs shift " + show(s[c.shift(k)]);
  r.expect("(c) sigma(Sigma k) = sigma(k)", witness.empty(), witness);

  witness.clear();
  for (const auto& [k, l, m] : c.triangles())
    if (witness.empty() && (s[l] & ~(s[k] | s[m])) != 0)
      witness = "(" + c.name(k) + ", " + c.name(l) + ", " + c.name(m) + ")";
  r.expect("(d) sigma(l) within sigma(k) u sigma(m) for triangles", witness.empty(), witness);

  witness.clear();
  for (std::size_t k = 0; k < c.size() && witness.empty(); ++k)
    for (std::size_t l = k; l < c.size() && witness.empty(); ++l)
      if (s[c.tensor(k, l)] != (s[k] & s[l]))
        witness = c.name(k) + " (x) " + c.name(l) + ": " + show(s[c.tensor(k, l)]) + " vs " + show(s[k] & s[l]);
  r.expect("(e) sigma(k (x) l) = sigma(k) n sigma(l)", witness.empty(), witness);
  return r;
}

struct UniversalMap {
  std::vector<ObjectMask> primes;   ///< enumerate_primes(c)
  std::vector<ObjectMask> image;    ///< f(x) = {k : x not in sigma(k)}
  std::vector<std::size_t> index;   ///< position of f(x) in `primes`
  std::optional<std::size_t> morphism_count;  ///< exhaustive count, when the space is small enough
  Report report;
};

/// The unique morphism (X, sigma) -> (Spc, supp), f(x) = {k : x not in sigma(k)}.
inline UniversalMap universal_map(const SupportDatum& d, const Catalogue& c, unsigned workers = 1) {
  UniversalMap out;
  d.validate(c);
  out.primes = enumerate_primes(c, workers);
  const std::size_t npoints = d.space.size();
  const std::size_t nprimes = out.primes.size();
  for (std::size_t x = 0; x < npoints; ++x) {
    ObjectMask f = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!(d.sigma[k] >> x & 1u)) f |= ObjectMask{1} << k;
    out.image.push_back(f);
    auto it = std::find(out.primes.begin(), out.primes.end(), f);
    out.report.expect("f(" + d.space.label(x) + ") is prime", it != out.primes.end(), c.describe(f));
    out.index.push_back(it == out.primes.end() ? nprimes : static_cast<std::size_t>(it - out.primes.begin()));
  }
  // supp k = {P : k not in P}; sigma(k) = f^{-1}(supp k) means x in sigma(k) iff k not in f(x).
  auto is_morphism = [&](const std::vector<std::size_t>& assign) {
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t x = 0; x < npoints; ++x)
        if ((d.sigma[k] >> x & 1u) == (out.primes[assign[x]] >> k & 1u)) return false;
    return true;
  };
  const bool all_prime = std::all_of(out.index.begin(), out.index.end(), [&](std::size_t i) { return i < nprimes; });
  if (all_prime) out.report.expect("sigma(k) = f^{-1}(supp k) for every object", is_morphism(out.index));

  if (npoints <= kMaxUniquenessPoints && nprimes > 0) {
    std::size_t count = 0;
    bool others = false;
    std::vector<std::size_t> assign(npoints, 0);
    for (;;) {
      if (is_morphism(assign)) {
        ++count;
        others = others || assign != out.index;
      }
      std::size_t pos = 0;
      while (pos < npoints && ++assign[pos] == nprimes) assign[pos++] = 0;
      if (pos == npoints) break;
    }
    out.morphism_count = count;
    out.report.expect("f is the unique morphism (exhaustive)", count == 1 && !others,
                      std::to_string(count) + " morphisms found");
  } else if (npoints > kMaxUniquenessPoints) {
    out.report.advise("uniqueness", "space has " + std::to_string(npoints) + " points; exhaustive check skipped above " +
                                        std::to_string(kMaxUniquenessPoints));
  }
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k != c.zero() && d.sigma[k] == 0)
      out.report.advise("empty support only for zero",
                        c.name(k) + " is nonzero with empty support (no rigid category has this)");
  return out;
}

/// Every specialisation-closed subset of the space, ascending by mask.
inline std::vector<PointMask> thomason_lattice(const FiniteSpace& s) {
  if (s.size() > kMaxSpacePoints) throw catalogue_error("space: too many points to enumerate subsets");
  std::vector<PointMask> out;
  for (PointMask m = 0; m <= s.all(); ++m)
    if (s.is_up_closed(m)) out.push_back(m);
  return out;
}

struct Classification {
  std::vector<ObjectMask> ideals;
  std::vector<PointMask> subsets;
  std::vector<PointMask> sigma;  ///< per ideal: union of supports
  std::vector<ObjectMask> tau;   ///< per subset: objects with support inside
  SupportDatum datum;
  Report report;
};

/// Checks that I -> union of supp k and V -> {k : supp k within V} are mutually inverse
/// order isomorphisms between thick tensor-ideals and specialisation-closed subsets of Spc.
inline Classification classify(const Catalogue& c, unsigned workers = 1) {
  Classification out;
  out.ideals = enumerate_ideals(c, workers);
  out.datum = spc_support(c, workers);
  out.subsets = thomason_lattice(out.datum.space);
  const auto& supp = out.datum.sigma;
  for (ObjectMask ideal : out.ideals) {
    PointMask u = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (ideal >> k & 1u) u |= supp[k];
    out.sigma.push_back(u);
  }
  for (PointMask v : out.subsets) {
    ObjectMask t = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      if ((supp[k] & ~v) == 0) t |= ObjectMask{1} << k;
    out.tau.push_back(t);
  }
  Report& r = out.report;
  r.expect("counts agree", out.ideals.size() == out.subsets.size(),
           std::to_string(out.ideals.size()) + " ideals vs " + std::to_string(out.subsets.size()) + " subsets");
  std::string witness;
  for (std::size_t i = 0; i < out.ideals.size() && witness.empty(); ++i) {
    auto it = std::find(out.subsets.begin(), out.subsets.end(), out.sigma[i]);
    if (it == out.subsets.end()) {
      witness = "sigma(" + c.describe(out.ideals[i]) + ") not specialisation closed";
      break;
    }
    const ObjectMask back = out.tau[static_cast<std::size_t>(it - out.subsets.begin())];
    if (back != out.ideals[i])
      witness = c.describe(out.ideals[i]) + " -> " + out.datum.space.describe(out.sigma[i]) + " -> " + c.describe(back);
  }
  r.expect("tau(sigma(I)) = I for every ideal", witness.empty(), witness);
  witness.clear();
  for (std::size_t j = 0; j < out.subsets.size() && witness.empty(); ++j) {
    const ObjectMask t = out.tau[j];
    auto it = std::find(out.ideals.begin(), out.ideals.end(), t);
    if (it == out.ideals.end()) {
      witness = "tau(" + out.datum.space.describe(out.subsets[j]) + ") = " + c.describe(t) + " is not an ideal";
      break;
    }
    const PointMask back = out.sigma[static_cast<std::size_t>(it - out.ideals.begin())];
    if (back != out.subsets[j])
      witness = out.datum.space.describe(out.subsets[j]) + " -> " + c.describe(t) + " -> " + out.datum.space.describe(back);
  }
  r.expect("sigma(tau(V)) = V for every subset", witness.empty(), witness);
  witness.clear();
  for (std::size_t i = 0; i < out.ideals.size() && witness.empty(); ++i)
    for (std::size_t j = 0; j < out.ideals.size(); ++j)
      if ((out.ideals[i] & ~out.ideals[j]) == 0 && (out.sigma[i] & ~out.sigma[j]) != 0) {
        witness = c.describe(out.ideals[i]) + " within " + c.describe(out.ideals[j]);
        break;
      }
  r.expect("sigma preserves inclusion", witness.empty(), witness);
  return out;
}

/// Elementary facts about primes: Spc nonempty, maximal proper ideals prime, every proper
/// ideal below a maximal one.
inline Report prime_facts(const Catalogue& c, unsigned workers = 1) {
  Report r;
  const auto ideals = enumerate_ideals(c, workers);
  const auto primes = enumerate_primes(c, workers);
  const ObjectMask unit_bit = ObjectMask{1} << c.unit();
  if (c.unit() != c.zero()) r.expect("Spc nonempty", !primes.empty());
  std::vector<ObjectMask> maximal;
  for (ObjectMask i : ideals) {
    if (i & unit_bit) continue;
    bool is_max = true;
    for (ObjectMask j : ideals)
      if (!(j & unit_bit) && j != i && (i & ~j) == 0) is_max = false;
    if (is_max) maximal.push_back(i);
  }
  std::string witness;
  for (ObjectMask m : maximal)
    if (witness.empty() && !is_prime_ideal(c, m)) witness = c.describe(m);
  r.expect("maximal proper ideals are prime", witness.empty(), witness);
  witness.clear();
  for (ObjectMask i : ideals) {
    if (i & unit_bit) continue;
    const bool below = std::any_of(maximal.begin(), maximal.end(), [&](ObjectMask m) { return (i & ~m) == 0; });
    if (!below && witness.empty()) witness = c.describe(i);
  }
  r.expect("every proper ideal lies in a maximal one", witness.empty(), witness);
  witness.clear();
  for (ObjectMask p : primes)
    if (witness.empty() && (!is_thick_tensor_ideal(c, p) || (p & unit_bit))) witness = c.describe(p);
  r.expect("primes are proper thick tensor-ideals", witness.empty(), witness);
  return r;
}

}  // namespace ttsupport

#endif  // TTSUPPORT_SUPPORTDATA_HPP
