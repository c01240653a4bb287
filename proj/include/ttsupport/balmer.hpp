#ifndef TTSUPPORT_BALMER_HPP
#define TTSUPPORT_BALMER_HPP

// Rickard idempotents, big support and the classification of localising and thick
// subcategories for D(Z).

#include "ttsupport/complex.hpp"
#include "ttsupport/report.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ttsupport {

struct Idempotent {
  enum class Flavor { Gamma, L, GammaPoint };

  Flavor flavor;
  std::optional<SpclSubset> subset;  ///< Gamma and L
  std::optional<SpecZPoint> point;   ///< GammaPoint
  GradedModule value;

  std::string label() const {
    switch (flavor) {
      case Flavor::Gamma: return "Gamma_{" + subset->to_string() + "}1";
      case Flavor::L: return "L_{" + subset->to_string() + "}1";
      case Flavor::GammaPoint: return "Gamma_" + point->to_string() + "1";
    }
    return {};
  }
};

/// Gamma_V 1. For V = closed(S) this is the homology of the stable Koszul complex
/// Z -> Z[S^-1], i.e. Sigma^{-1} of the Prufer family over S.
inline Idempotent gamma_V(const SpclSubset& v) {
  GradedModule value;
  if (v.is_all())
    value.add(0, Cyclic::integers());
  else if (!v.primes().is_empty())
    value.add(1, Cyclic::prufer(v.primes()));
  return {Idempotent::Flavor::Gamma, v, std::nullopt, value};
}

/// L_V 1: Z[S^-1] for V = closed(S), zero for V = Spec Z.
inline Idempotent l_V(const SpclSubset& v) {
  GradedModule value;
  if (!v.is_all()) value.add(0, Cyclic::free(v.primes()));
  return {Idempotent::Flavor::L, v, std::nullopt, value};
}

/// Gamma_{V(x)}1 (x) L_{Z(x)}1.
inline Idempotent gamma_point(const SpecZPoint& x) {
  return {Idempotent::Flavor::GammaPoint, std::nullopt, x,
          kunneth(gamma_V(v_of_point(x)).value, l_V(z_of_point(x)).value)};
}

/// Primes named anywhere in X's summands.
inline std::set<BigInt> listed_primes(const GradedModule& x) {
  std::set<BigInt> out;
  for (const auto& [n, m] : x.degrees())
    for (const auto& [c, mult] : m.terms()) {
      if (c.is_torsion())
        out.insert(c.prime());
      else
        out.insert(c.primes().primes().begin(), c.primes().primes().end());
    }
  return out;
}

/// Smallest prime not in `taken`.
inline BigInt fresh_prime(const std::set<BigInt>& taken) {
  BigInt p = 2;
  while (taken.count(p) || !is_prime(p)) ++p;
  return p;
}

/// supp X = {x : Gamma_x 1 (x) X != 0}.
///
/// Gamma_x 1 (x) X is evaluated at the generic point, at every prime listed in X, and at
/// one unlisted prime. The tensor/Tor tables see an unlisted prime only through
/// membership in X's (finite or cofinite) prime sets, so all unlisted primes answer
/// alike and the result is exact.
inline PointSet supp_object(const GradedModule& x) {
  if (x.is_zero()) return PointSet::none();
  const std::set<BigInt> listed = listed_primes(x);
  auto detects = [&](const SpecZPoint& y) { return !kunneth(gamma_point(y).value, x).is_zero(); };
  std::vector<BigInt> hit, miss;
  for (const auto& p : listed) (detects(SpecZPoint::closed(p)) ? hit : miss).push_back(p);
  PointSet out;
  out.generic = detects(SpecZPoint::generic());
  out.closed = detects(SpecZPoint::closed(fresh_prime(listed))) ? PrimeSet::cofinite(miss) : PrimeSet::finite(hit);
  return out;
}

inline PointSet supp_object(const PerfectComplex& c) { return supp_object(homology(c)); }

/// Gamma (x) Gamma = Gamma, L (x) L = L, Gamma (x) L = 0.
inline Report idempotent_laws(const SpclSubset& v) {
  Report r;
  const Idempotent g = gamma_V(v), l = l_V(v);
  const std::string tag = " [V=" + v.to_string() + "]";
  r.expect_equal("Gamma(x)Gamma = Gamma" + tag, g.value, kunneth(g.value, g.value));
  r.expect_equal("L(x)L = L" + tag, l.value, kunneth(l.value, l.value));
  r.expect_equal("Gamma(x)L = 0" + tag, GradedModule(), kunneth(g.value, l.value));
  return r;
}

/// Homology-level exactness of the triangle Gamma_V 1 -> 1 -> L_V 1 -> Sigma Gamma_V 1.
inline Report localization_triangle_check(const SpclSubset& v) {
  Report r;
  const Idempotent g = gamma_V(v), l = l_V(v);
  r.append(idempotent_laws(v));
  if (v.is_all()) {
    r.expect_equal("Gamma_V 1 = 1", GradedModule{{0, Module{Cyclic::integers()}}}, g.value);
    r.expect_equal("L_V 1 = 0", GradedModule(), l.value);
    r.expect_equal("supp Gamma_V 1 = V", v.points(), supp_object(g.value));
    return r;
  }
  const PrimeSet& s = v.primes();
  // 0 -> H^0 Gamma -> Z -> Z[S^-1] -> H^1 Gamma -> 0 and H^1 L = 0.
  r.expect_equal("H^0 Gamma_V 1 = 0", Module(), g.value.at(0));
  r.expect_equal("H^0 L_V 1 = Z[S^-1]", Module{Cyclic::free(s)}, l.value.at(0));
  r.expect("L_V 1 concentrated in degree 0", l.value.degrees().size() == 1,
           "L_V 1 = " + l.value.to_string());
  r.expect("Gamma_V 1 concentrated in degree 1", g.value.is_zero() || (g.value.degrees().size() == 1 &&
                                                                       g.value.degrees().begin()->first == 1),
           "Gamma_V 1 = " + g.value.to_string());
  // Z -> Z[S^-1] is injective (Z is torsion free and Z[S^-1] (x) Q = Q), and its cokernel
  // together with Q/Z (x) Z[S^-1] rebuilds Q/Z.
  r.expect_equal("Z[S^-1] (x) Q = Q", Module{Cyclic::rationals()},
                 tensor_mod(Cyclic::free(s), Cyclic::rationals()));
  Module rebuilt = g.value.at(1);
  rebuilt.add(tensor_mod(Cyclic::prufer(PrimeSet::all()), Cyclic::free(s)));
  r.expect_equal("coker(Z -> Z[S^-1]) + Q/Z(x)Z[S^-1] = Q/Z", Module{Cyclic::prufer(PrimeSet::all())}, rebuilt);
  r.expect_equal("supp Gamma_V 1 = V", v.points(), supp_object(g.value));
  r.expect_equal("supp L_V 1 = complement of V", v.points().complement(), supp_object(l.value));
  return r;
}

/// Probe points: the generic point, primes up to `bound`, and every prime listed in X.
inline std::vector<SpecZPoint> probe_points(const GradedModule& x, unsigned bound) {
  std::set<BigInt> primes = listed_primes(x);
  for (const auto& p : primes_up_to(bound)) primes.insert(p);
  std::vector<SpecZPoint> out{SpecZPoint::generic()};
  for (const auto& p : primes) out.push_back(SpecZPoint::closed(p));
  return out;
}

/// Computable consequences of the local-to-global principle for X.
inline Report ltg_check(const GradedModule& x, unsigned probe_bound = 100) {
  Report r;
  const PointSet supp = supp_object(x);
  r.expect("(i) X = 0 iff supp X empty", x.is_zero() == supp.is_empty(),
           "X = " + x.to_string() + ", supp X = " + supp.to_string());
  PointSet local_union;
  PointSet probed;
  std::string outside_point, detection_mismatch;
  for (const auto& pt : probe_points(x, probe_bound)) {
    probed = unite(probed, PointSet::only(pt));
    const GradedModule local = kunneth(gamma_point(pt).value, x);
    const PointSet local_supp = supp_object(local);
    local_union = unite(local_union, local_supp);
    if (outside_point.empty() && !is_subset(local_supp, PointSet::only(pt)))
      outside_point = "x=" + pt.to_string() + ": supp Gamma_x X = " + local_supp.to_string();
    if (detection_mismatch.empty() && local.is_zero() == supp.contains(pt))
      detection_mismatch = "x=" + pt.to_string() + ": Gamma_x X = " + local.to_string() + ", supp X = " +
                           supp.to_string();
  }
  r.expect("(ii) supp Gamma_x X within {x}", outside_point.empty(), outside_point);
  r.expect_equal("(ii) union of supp Gamma_x X = supp X on probes", intersect(supp, probed), local_union);
  r.expect("(iii) Gamma_x X != 0 iff x in supp X", detection_mismatch.empty(), detection_mismatch);
  return r;
}

/// Residue field k(x): Z/p at (p), Q at the generic point.
inline GradedModule residue_field(const SpecZPoint& x) {
  GradedModule k;
  k.add(0, x.is_generic() ? Cyclic::rationals() : Cyclic::torsion(x.prime(), 1));
  return k;
}

/// k(x) (x) X is a sum of shifted copies of k(x), and is nonzero when 0 != X has supp X within {x}.
inline Report residue_check(const SpecZPoint& x, const GradedModule& obj) {
  Report r;
  const GradedModule k = residue_field(x);
  const Cyclic field = k.degrees().begin()->second.terms().begin()->first;
  const GradedModule product = kunneth(k, obj);
  std::string stray;
  for (const auto& [n, m] : product.degrees())
    for (const auto& [c, mult] : m.terms())
      if (!(c == field)) stray += (stray.empty() ? "" : ", ") + c.to_string() + " in degree " + std::to_string(n);
  r.expect("k(x)(x)X decomposes into copies of k(x) at x=" + x.to_string(), stray.empty(), stray);
  const bool concentrated = !obj.is_zero() && is_subset(supp_object(obj), PointSet::only(x));
  if (concentrated)
    r.expect("k(x)(x)X != 0 for X supported at x=" + x.to_string(), !product.is_zero(), "X = " + obj.to_string());
  return r;
}

/// A localising subcategory of D(Z), encoded by its subset of Spec Z.
struct LocSubcatCode {
  PointSet points;

  friend bool operator==(const LocSubcatCode&, const LocSubcatCode&) = default;
  std::string to_string() const { return points.to_string(); }
};

/// X in tau(W) iff supp X within W.
inline bool tau_loc(const LocSubcatCode& w, const GradedModule& x) { return is_subset(supp_object(x), w.points); }

/// sigma(loc(gens)) = union of the supports of the generators.
inline LocSubcatCode sigma_loc(const std::vector<GradedModule>& gens) {
  PointSet out;
  for (const auto& g : gens) out = unite(out, supp_object(g));
  return {out};
}

/// Generators of tau(W): Gamma_{closed(S)}1 for the closed part, Q for the generic point.
inline std::vector<GradedModule> tau_generators(const LocSubcatCode& w) {
  std::vector<GradedModule> out;
  if (!w.points.closed.is_empty()) out.push_back(gamma_V(SpclSubset::closed(w.points.closed)).value);
  if (w.points.generic) out.push_back(residue_field(SpecZPoint::generic()));
  return out;
}

/// The thick subcategory tau(V) = {C : supp C within V} of D^perf(Z).
class ThickIdeal {
 public:
  explicit ThickIdeal(SpclSubset v) : support_(std::move(v)) {}

  const SpclSubset& support() const { return support_; }
  bool contains(const GradedModule& x) const { return is_subset(supp_object(x), support_.points()); }
  bool contains(const PerfectComplex& c) const { return contains(homology(c)); }

 private:
  SpclSubset support_;
};

/// phi(x) = tau(Z(x)).
inline ThickIdeal point_to_prime(const SpecZPoint& x) { return ThickIdeal(z_of_point(x)); }

class not_prime_error : public std::invalid_argument {
 public:
  not_prime_error(const std::string& what, std::optional<std::pair<PerfectComplex, PerfectComplex>> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}

  /// k, l outside the ideal with k (x) l inside, when one exists.
  const std::optional<std::pair<PerfectComplex, PerfectComplex>>& witness() const { return witness_; }

 private:
  std::optional<std::pair<PerfectComplex, PerfectComplex>> witness_;
};

/// cone(Z --n--> Z).
inline PerfectComplex multiplication_cone(const BigInt& n) { return cone(scalar_on_unit(n)); }

/// phi^{-1}(P) = {n : cone(Z --n--> Z) not in P}, returned as the point it names.
///
/// tau(V) is prime exactly when V = Z(x); other ideals are rejected, with a witness pair
/// cone(p), cone(q) whose tensor product (zero) lies in the ideal.
inline SpecZPoint prime_to_point(const ThickIdeal& ideal, unsigned probe_bound = 100) {
  const SpclSubset& v = ideal.support();
  std::optional<SpecZPoint> structural;
  if (!v.is_all() && v.primes().is_cofinite()) {
    const auto& missing = v.primes().primes();
    if (missing.empty()) structural = SpecZPoint::generic();
    else if (missing.size() == 1) structural = SpecZPoint::closed(missing.front());
  }
  if (!structural) {
    if (v.is_all()) throw not_prime_error("tau(Spec Z) is the whole category, not a proper ideal", std::nullopt);
    std::vector<BigInt> outside = v.primes().complement().sample(2);
    auto k = multiplication_cone(outside[0]), l = multiplication_cone(outside[1]);
    throw not_prime_error("tau(" + v.to_string() + ") is not prime: cone(" + outside[0].str() + ") (x) cone(" +
                              outside[1].str() + ") = 0 lies in it but neither factor does",
                          std::make_pair(std::move(k), std::move(l)));
  }
  // Probe phi^{-1} directly on cones.
  std::set<BigInt> probes;
  for (unsigned n = 2; n <= probe_bound; ++n) probes.insert(n);
  for (const auto& p : v.primes().primes()) {
    probes.insert(p);
    probes.insert(2 * p);
  }
  std::vector<BigInt> excluded;
  for (const auto& n : probes)
    if (!ideal.contains(multiplication_cone(n))) excluded.push_back(n);
  SpecZPoint probed = SpecZPoint::generic();
  if (!excluded.empty()) {
    const BigInt& p = excluded.front();
    bool exact = is_prime(p);
    for (const auto& n : probes) exact = exact && ((n % p == 0) == std::binary_search(excluded.begin(), excluded.end(), n));
    if (!exact) throw std::logic_error("prime_to_point: excluded set is not the multiples of a prime");
    probed = SpecZPoint::closed(p);
  }
  if (!(probed == *structural)) throw std::logic_error("prime_to_point: probe disagrees with Z(x) structure");
  return probed;
}

/// Y in thick(gens) iff supp Y within the union of the generators' supports.
inline bool thick_membership(const PerfectComplex& y, const std::vector<PerfectComplex>& gens) {
  PointSet reach;
  for (const auto& g : gens) reach = unite(reach, supp_object(g));
  return is_subset(supp_object(y), reach);
}

}  // namespace ttsupport

#endif  // TTSUPPORT_BALMER_HPP
