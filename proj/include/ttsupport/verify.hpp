#ifndef TTSUPPORT_VERIFY_HPP
#define TTSUPPORT_VERIFY_HPP

// Property suites. Each suite runs a number of cases; a case draws its inputs from an
// engine seeded by (seed, suite id, case id), so results do not depend on the worker
// count or scheduling. Cases are sharded across workers and merged by case id.

#include "ttsupport/balmer.hpp"
#include "ttsupport/oracle.hpp"
#include "ttsupport/random.hpp"
#include "ttsupport/report.hpp"
#include "ttsupport/supportdata.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ttsupport::verify {

struct Options {
  std::uint64_t seed = 42;
  std::size_t cases = 500;
  unsigned primes_bound = 100;
  unsigned workers = 1;
};

/// Worker count from TT_SUPPORT_WORKERS, else `fallback`.
inline unsigned workers_from_env(unsigned fallback) {
  if (const char* v = std::getenv("TT_SUPPORT_WORKERS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n >= 1 && n <= 256) return static_cast<unsigned>(n);
  }
  return fallback;
}

struct SuiteResult {
  std::string id;
  std::string title;
  std::size_t cases = 0;
  std::size_t failed_cases = 0;
  std::optional<std::pair<std::size_t, Check>> first_failure;

  bool ok() const { return failed_cases == 0; }
};

using CaseFn = std::function<Report(gen::Rng&, std::size_t)>;

/// Runs `count` cases of `fn`. Exceptions count as failures of their case.
inline SuiteResult run_cases(const std::string& id, const std::string& title, std::size_t count,
                             const Options& opts, const CaseFn& fn) {
  std::vector<Report> reports(count);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      gen::Rng rng = gen::case_rng(opts.seed, id, i);
      try {
        reports[i] = fn(rng, i);
      } catch (const std::exception& e) {
        reports[i] = Report();
        reports[i].expect("no exception", false, e.what());
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opts.workers, count));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  SuiteResult out{id, title, count, 0, std::nullopt};
  for (std::size_t i = 0; i < count; ++i) {
    if (reports[i].ok()) continue;
    ++out.failed_cases;
    if (!out.first_failure)
      for (const auto& c : reports[i].checks())
        if (c.failed()) {
          out.first_failure = {i, c};
          break;
        }
  }
  return out;
}

/// One record per suite; failures carry the first failing case.
inline Report to_report(const std::vector<SuiteResult>& results) {
  Report r;
  for (const auto& s : results) {
    Check c{s.id + " " + s.title + " (" + std::to_string(s.cases) + " cases)",
            s.ok() ? Check::Status::Pass : Check::Status::Fail, {}, {}};
    if (s.first_failure) {
      const auto& [i, f] = *s.first_failure;
      c.name += ": " + std::to_string(s.failed_cases) + " failed, first case " + std::to_string(i) + " [" + f.name + "]";
      c.expected = f.expected;
      c.actual = f.actual;
    }
    r.add(std::move(c));
  }
  return r;
}

// ---- sample catalogues

/// {0, U, A, B, A+B}: A (x) B = 0, A and B idempotent, A+B a sum with split triangle,
/// and the triangle A -> U -> B making U = A + B (the k x k model).
inline Catalogue five_object_model(bool unit_splits = true) {
  Catalogue::Tables t;
  t.names = {"0", "U", "A", "B", "A+B"};
  t.zero = 0;
  t.unit = 1;
  t.tensor = {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 2, 0, 2}, {0, 3, 0, 3, 3}, {0, 4, 2, 3, 4}};
  t.summands = {{4, 2}, {4, 3}};
  t.triangles = {{2, 4, 3}};
  if (unit_splits) t.triangles.push_back({2, 1, 3});
  return Catalogue(std::move(t));
}

// ---- helpers

inline std::size_t scaled(const Options& o, std::size_t nominal) {
  return std::max<std::size_t>(1, o.cases * nominal / 500);
}

inline PointSet supp(const PerfectComplex& c) { return supp_object(c); }

inline std::vector<Cyclic> generator_cyclics() {
  return {Cyclic::integers(),
          Cyclic::rationals(),
          Cyclic::free(PrimeSet::finite({2})),
          Cyclic::free(PrimeSet::finite({2, 3})),
          Cyclic::free(PrimeSet::cofinite({2})),
          Cyclic::free(PrimeSet::cofinite({2, 5})),
          Cyclic::torsion(2, 1),
          Cyclic::torsion(2, 3),
          Cyclic::torsion(3, 1),
          Cyclic::torsion(3, 2),
          Cyclic::torsion(5, 1),
          Cyclic::prufer(PrimeSet::finite({2})),
          Cyclic::prufer(PrimeSet::finite({2, 3})),
          Cyclic::prufer(PrimeSet::all()),
          Cyclic::prufer(PrimeSet::cofinite({3}))};
}

/// Compact objects used for thick-subcategory probes.
inline std::vector<PerfectComplex> compact_catalogue() {
  auto c = [](long n) { return multiplication_cone(n); };
  const PerfectComplex unit = PerfectComplex::unit();
  return {unit,
          shift(unit, 1),
          c(2),
          c(3),
          c(4),
          c(5),
          c(7),
          c(8),
          c(9),
          c(25),
          c(6),
          c(12),
          c(30),
          shift(c(2), -1),
          direct_sum(c(2), c(3)),
          direct_sum(unit, c(5)),
          tensor_chain(c(4), c(6)),
          tensor_chain(c(9), c(3)),
          cone(oracle::torsion_extension(2, 3)),
          PerfectComplex()};
}

// ---- znum

inline SuiteResult primeset_algebra(const Options& o) {
  std::vector<BigInt> universe = primes_up_to(1000);
  for (const auto& p : gen::large_primes()) universe.push_back(p);
  return run_cases("znum.primeset", "prime-set algebra against explicit sets", o.cases, o,
                   [universe](gen::Rng& rng, std::size_t id) {
                     using gen::SetShape;
                     const auto sa = static_cast<SetShape>(id % 3), sb = static_cast<SetShape>(id / 3 % 3);
                     const PrimeSet a = gen::random_prime_set(rng, sa), b = gen::random_prime_set(rng, sb);
                     const auto ma = oracle::members(a, universe), mb = oracle::members(b, universe);
                     auto show = [](const std::set<BigInt>& s) {
                       std::string out = "{";
                       for (const auto& p : s) out += p.str() + ",";
                       return out + "}";
                     };
                     auto combine = [](const std::set<BigInt>& x, const std::set<BigInt>& y, int op) {
                       std::set<BigInt> out;
                       for (const auto& p : x)
                         if (op == 0 || (op == 1 && y.count(p)) || (op == 2 && !y.count(p))) out.insert(p);
                       if (op == 0) out.insert(y.begin(), y.end());
                       return out;
                     };
                     Report r;
                     const std::string tag = " [" + a.to_string() + ", " + b.to_string() + "]";
                     auto same = [&](const std::string& name, const PrimeSet& got, const std::set<BigInt>& want) {
                       const auto m = oracle::members(got, universe);
                       r.expect(name + tag, m == want, "expected " + show(want) + ", got " + show(m));
                     };
                     same("union", unite(a, b), combine(ma, mb, 0));
                     same("intersection", intersect(a, b), combine(ma, mb, 1));
                     same("difference", difference(a, b), combine(ma, mb, 2));
                     same("complement", a.complement(), combine(std::set<BigInt>(universe.begin(), universe.end()), ma, 2));
                     const bool sub = std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
                     r.expect("subset" + tag, is_subset(a, b) == sub);
                     r.expect("equality" + tag, (a == b) == (ma == mb));
                     for (const auto& p : universe)
                       if (a.contains(p) != static_cast<bool>(ma.count(p))) {
                         r.expect("membership" + tag, false, p.str());
                         break;
                       }
                     return r;
                   });
}

inline SuiteResult spcl_lattice(const Options& o) {
  return run_cases("znum.lattice", "specialisation-closed subsets form a bounded distributive lattice", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const SpclSubset a = gen::random_spcl_subset(rng), b = gen::random_spcl_subset(rng),
                                      c = gen::random_spcl_subset(rng);
                     const SpclSubset top = SpclSubset::all(), bottom = SpclSubset::empty();
                     Report r;
                     r.expect_equal("join associative", join(join(a, b), c), join(a, join(b, c)));
                     r.expect_equal("meet associative", meet(meet(a, b), c), meet(a, meet(b, c)));
                     r.expect_equal("join commutative", join(a, b), join(b, a));
                     r.expect_equal("meet commutative", meet(a, b), meet(b, a));
                     r.expect_equal("absorption join", a, join(a, meet(a, b)));
                     r.expect_equal("absorption meet", a, meet(a, join(a, b)));
                     r.expect_equal("distributive meet over join", meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
                     r.expect_equal("distributive join over meet", join(a, meet(b, c)), meet(join(a, b), join(a, c)));
                     r.expect_equal("top", top, join(a, top));
                     r.expect_equal("bottom", bottom, meet(a, bottom));
                     r.expect("order agrees with meet", leq(a, b) == (meet(a, b) == a));
                     r.expect_equal("points of join", unite(a.points(), b.points()), join(a, b).points());
                     r.expect_equal("points of meet", intersect(a.points(), b.points()), meet(a, b).points());
                     return r;
                   });
}

inline SuiteResult point_subsets(const Options& o) {
  return run_cases("znum.points", "V(x) and Z(x) isolate x", o.cases, o, [](gen::Rng& rng, std::size_t id) {
    const SpecZPoint x = id == 0 ? SpecZPoint::generic() : gen::random_point(rng);
    const SpclSubset v = v_of_point(x), z = z_of_point(x);
    Report r;
    const std::string tag = " [x=" + x.to_string() + "]";
    auto closed_up = [](const SpclSubset& s) { return !s.points().generic || s.points().closed.is_all(); };
    r.expect("V(x) specialisation closed" + tag, closed_up(v));
    r.expect("Z(x) specialisation closed" + tag, closed_up(z));
    r.expect("x in V(x)" + tag, v.contains_point(x));
    r.expect("x not in Z(x)" + tag, !z.contains_point(x));
    r.expect_equal("V(x) minus Z(x) = {x}" + tag, PointSet::only(x), intersect(v.points(), z.points().complement()));
    return r;
  });
}

// ---- homalg

inline SuiteResult snf_suite(const Options& o) {
  return run_cases("c10", "Smith normal form: UMV = D, unimodular, divisibility, minors", o.cases, o,
                   [](gen::Rng& rng, std::size_t id) {
                     const bool large = id % 5 == 4;
                     const std::size_t rows = large ? 6 : static_cast<std::size_t>(gen::uniform(rng, 1, 4));
                     const std::size_t cols = large ? 6 : static_cast<std::size_t>(gen::uniform(rng, 1, 4));
                     const IntMatrix m = gen::random_matrix(rng, rows, cols);
                     const SNFResult s = snf(m);
                     Report r;
                     r.expect_equal("UMV = D", s.D, s.U * m * s.V);
                     bool diagonal = true;
                     for (std::size_t i = 0; i < rows; ++i)
                       for (std::size_t j = 0; j < cols; ++j) {
                         const BigInt want = i == j && i < s.invariant_factors.size() ? s.invariant_factors[i] : BigInt(0);
                         diagonal = diagonal && s.D(i, j) == want;
                       }
                     r.expect("D diagonal with the invariant factors", diagonal, s.D.to_string());
                     bool chain = true;
                     for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
                       chain = chain && s.invariant_factors[i] > 0;
                       if (i + 1 < s.invariant_factors.size())
                         chain = chain && s.invariant_factors[i + 1] % s.invariant_factors[i] == 0;
                     }
                     r.expect("divisibility chain", chain, s.D.to_string());
                     if (!large) {
                       r.expect("U unimodular", abs_value(determinant(s.U)) == 1, s.U.to_string());
                       r.expect("V unimodular", abs_value(determinant(s.V)) == 1, s.V.to_string());
                       const auto minors = oracle::invariant_factors_by_minors(m);
                       auto show = [](const std::vector<BigInt>& v) {
                         std::string out;
                         for (const auto& x : v) out += x.str() + " ";
                         return out;
                       };
                       r.expect("gcd-of-minors agreement", minors == s.invariant_factors,
                                "minors " + show(minors) + "vs snf " + show(s.invariant_factors) + "for " + m.to_string());
                     }
                     return r;
                   });
}

inline SuiteResult homology_shift(const Options& o) {
  return run_cases("homalg.shift", "homology commutes with shift", o.cases, o, [](gen::Rng& rng, std::size_t) {
    const PerfectComplex c = gen::random_complex(rng);
    const long k = gen::uniform(rng, -3, 3);
    Report r;
    r.expect_equal("H(Sigma^k C) = Sigma^k H(C)", shift_graded(homology(c), k), homology(shift(c, k)));
    return r;
  });
}

inline bool squares_to_zero(const PerfectComplex& c) {
  for (const auto& [n, d] : c.differentials())
    if (!(c.differential(n + 1) * d).is_zero()) return false;
  return true;
}

inline SuiteResult tensor_commutes(const Options& o) {
  return run_cases("homalg.tensor", "tensor homology symmetric, d o d = 0 on constructions", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const PerfectComplex a = gen::random_complex(rng, 3, 3), b = gen::random_complex(rng, 3, 3);
                     const PerfectComplex ab = tensor_chain(a, b), ba = tensor_chain(b, a);
                     const PerfectComplex cf = cone(gen::random_chain_map(rng, a));
                     Report r;
                     r.expect_equal("H(A(x)B) = H(B(x)A)", homology(ab), homology(ba));
                     r.expect("d o d = 0 on A(x)B", squares_to_zero(ab));
                     r.expect("d o d = 0 on cone", squares_to_zero(cf));
                     r.expect("d o d = 0 on A+B", squares_to_zero(direct_sum(a, b)));
                     return r;
                   });
}

// ---- modcalc

inline SuiteResult table_suite(const Options& o) {
  const std::vector<Cyclic> gens = generator_cyclics();
  const std::size_t n = gens.size();
  return run_cases("modcalc.tables", "tensor/Tor tables symmetric and match the truncation oracle", n * n, o,
                   [gens, n](gen::Rng&, std::size_t id) {
                     const Cyclic& a = gens[id / n];
                     const Cyclic& b = gens[id % n];
                     const std::string tag = " [" + a.to_string() + ", " + b.to_string() + "]";
                     Report r;
                     r.expect_equal("tensor symmetric" + tag, tensor_mod(a, b), tensor_mod(b, a));
                     r.expect_equal("Tor symmetric" + tag, tor_mod(a, b), tor_mod(b, a));
                     constexpr unsigned kLevels = 6, kBound = 13;
                     for (long q : {2, 3, 5, 7}) {
                       const BigInt p = q;
                       const auto sa = oracle::stage_system(a, p, kBound), sb = oracle::stage_system(b, p, kBound);
                       const auto t = oracle::colimit(oracle::tensor_system(sa, sb), kLevels, kBound);
                       const auto et = oracle::expected_p_part(tensor_mod(a, b), p, kBound);
                       r.expect("tensor oracle at p=" + p.str() + tag, oracle::same(t, et),
                                "oracle " + t.to_string() + ", table " + et.to_string());
                       const auto u = oracle::colimit(oracle::TorSystem{sa, sb}, kLevels, kBound);
                       const auto eu = oracle::expected_p_part(tor_mod(a, b), p, kBound);
                       r.expect("Tor oracle at p=" + p.str() + tag, oracle::same(u, eu),
                                "oracle " + u.to_string() + ", table " + eu.to_string());
                     }
                     return r;
                   });
}

inline SuiteResult kunneth_laws(const Options& o) {
  return run_cases("modcalc.kunneth", "Kunneth product commutative, associative, unital", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const GradedModule x = gen::random_graded(rng), y = gen::random_graded(rng),
                                        z = gen::random_graded(rng);
                     const GradedModule unit{{0, Module{Cyclic::integers()}}};
                     Report r;
                     r.expect_equal("commutative", kunneth(x, y), kunneth(y, x));
                     r.expect_equal("associative", kunneth(kunneth(x, y), z), kunneth(x, kunneth(y, z)));
                     r.expect_equal("unital", x, kunneth(unit, x));
                     return r;
                   });
}

inline SuiteResult kunneth_oracle(const Options& o) {
  return run_cases("c02", "Kunneth formula matches chain-level tensor homology", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const PerfectComplex a = gen::random_complex(rng), b = gen::random_complex(rng);
                     Report r;
                     r.expect_equal("H(A(x)B) = kunneth(HA, HB)", kunneth(homology(a), homology(b)),
                                    homology(tensor_chain(a, b)));
                     return r;
                   });
}

inline SuiteResult supp_mod_suite(const Options& o) {
  return run_cases("modcalc.supp", "homological support of sums and products", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const GradedModule x = gen::random_graded(rng), y = gen::random_graded(rng);
                     const GradedModule hx = homology(gen::random_complex(rng, 3, 3)),
                                        hy = homology(gen::random_complex(rng, 3, 3));
                     Report r;
                     r.expect_equal("supp(X+Y) = supp X u supp Y", unite(supp_mod(x), supp_mod(y)),
                                    supp_mod(sum_graded(x, y)));
                     r.expect_equal("compact supp(k(x)l) = supp k n supp l", intersect(supp_mod(hx), supp_mod(hy)),
                                    supp_mod(kunneth(hx, hy)));
                     const PointSet prod = supp_mod(kunneth(x, y));
                     r.expect("supp(X(x)Y) within supp X n supp Y", is_subset(prod, intersect(supp_mod(x), supp_mod(y))),
                              "X = " + x.to_string() + ", Y = " + y.to_string() + ", supp = " + prod.to_string());
                     return r;
                   });
}

// ---- balmer

inline SuiteResult axioms_on_complexes(const Options& o) {
  return run_cases("c01", "support-data axioms on random perfect complexes", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const PerfectComplex a = gen::random_complex(rng), b = gen::random_complex(rng);
                     const ChainMap f = gen::random_chain_map(rng, a);
                     const PerfectComplex cf = cone(f);
                     const PointSet sa = supp(a), sb = supp(b), src = supp(f.source()), tgt = supp(f.target()),
                                    sc = supp(cf);
                     Report r;
                     r.expect_equal("(a) supp 0 = empty", PointSet::none(), supp(PerfectComplex()));
                     r.expect_equal("(a) supp 1 = Spec Z", PointSet::everything(), supp(PerfectComplex::unit()));
                     r.expect_equal("(b) supp(A+B) = supp A u supp B", unite(sa, sb), supp(direct_sum(a, b)));
                     const long k = gen::uniform(rng, -3, 3);
                     r.expect_equal("(c) supp(Sigma A) = supp A", sa, supp(shift(a, k)));
                     r.expect("(d) supp cone f within supp A u supp B", is_subset(sc, unite(src, tgt)),
                              sc.to_string() + " vs " + unite(src, tgt).to_string());
                     r.expect("(d) supp B within supp A u supp cone f", is_subset(tgt, unite(src, sc)),
                              tgt.to_string() + " vs " + unite(src, sc).to_string());
                     r.expect("(d) supp A within supp B u supp cone f", is_subset(src, unite(tgt, sc)),
                              src.to_string() + " vs " + unite(tgt, sc).to_string());
                     r.expect_equal("(e) supp(A(x)B) = supp A n supp B", intersect(sa, sb), supp(tensor_chain(a, b)));
                     r.expect_equal("abstract support = homological support", supp_mod(homology(a)), sa);
                     return r;
                   });
}

/// V = closed(S) and closed(complement-of-S) for S within the first `count` primes, plus
/// Spec Z.
inline std::vector<SpclSubset> subset_family(std::size_t count) {
  const std::vector<BigInt> base = first_primes(count);
  std::vector<SpclSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    std::vector<BigInt> s;
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1u) s.push_back(base[i]);
    out.push_back(SpclSubset::closed(PrimeSet::finite(s)));
    out.push_back(SpclSubset::closed(PrimeSet::cofinite(s)));
  }
  out.push_back(SpclSubset::all());
  return out;
}

inline SuiteResult idempotent_suite(const Options& o) {
  const auto family = subset_family(10);
  return run_cases("c03", "idempotent laws over S within the first 10 primes", family.size(), o,
                   [family](gen::Rng&, std::size_t id) { return idempotent_laws(family[id]); });
}

inline SuiteResult closed_forms(const Options& o) {
  // Finite {p}, then fixed and random cofinite sets.
  const std::size_t fixed = 8;
  const std::size_t total = fixed + scaled(o, 20);
  const unsigned bound = std::max(2u, o.primes_bound);
  return run_cases("c04", "closed forms against Koszul and truncation oracles", total, o,
                   [fixed, bound](gen::Rng& rng, std::size_t id) {
                     PrimeSet s;
                     if (id < 4) {
                       s = PrimeSet::finite({std::vector<long long>{2, 3, 5, 7}[id]});
                     } else if (id < fixed) {
                       const std::vector<PrimeSet> sets = {PrimeSet::all(), PrimeSet::cofinite({2}),
                                                           PrimeSet::cofinite({3, 5}), PrimeSet::cofinite({2, 3, 5, 7})};
                       s = sets[id - 4];
                     } else {
                       std::vector<BigInt> missing;
                       for (const auto& p : first_primes(10))
                         if (gen::coin(rng, 0.3)) missing.push_back(p);
                       s = PrimeSet::cofinite(missing);
                     }
                     const GradedModule value = gamma_V(SpclSubset::closed(s)).value;
                     Report r;
                     const std::string tag = " [S=" + s.to_string() + "]";
                     r.expect("Gamma concentrated in degree 1" + tag,
                              value.at(0).is_zero() && value.degrees().size() == 1, value.to_string());
                     const Module top = value.at(1);
                     const bool finite = s.is_finite();
                     // Finite {p}: explicit stable Koszul complex, 6 levels, primes up to 13.
                     // Cofinite: per-prime truncation up to the bound.
                     const unsigned levels = finite ? 6 : 2;
                     const unsigned probe = finite ? 13 : bound;
                     for (const auto& p : primes_up_to(probe)) {
                       const auto got = oracle::koszul_p_part(s, p, levels, probe);
                       const auto want = oracle::expected_p_part(top, p, probe);
                       r.expect("p-part at " + p.str() + tag, oracle::same(got, want),
                                "oracle " + got.to_string() + ", closed form " + want.to_string());
                     }
                     return r;
                   });
}

inline SuiteResult zero_detection(const Options& o) {
  const unsigned bound = o.primes_bound;
  return run_cases("c05", "zero detection and local-to-global", o.cases, o, [bound](gen::Rng& rng, std::size_t id) {
    const GradedModule x = id % 2 ? gen::random_near_zero(rng) : gen::random_graded(rng);
    Report r;
    r.expect("X = 0 iff supp X empty", is_zero(x) == supp_object(x).is_empty(),
             "X = " + x.to_string() + ", supp = " + supp_object(x).to_string());
    r.append(ltg_check(x, std::min(bound, 30u)));
    return r;
  });
}

inline SuiteResult separation(const Options& o) {
  return run_cases("c06", "separation axiom for Gamma_V and L_V", scaled(o, 200), o, [](gen::Rng& rng, std::size_t) {
    const SpclSubset v = gen::random_spcl_subset(rng);
    const GradedModule x = gen::random_graded(rng);
    const PointSet sx = supp_object(x);
    Report r;
    const std::string tag = " [V=" + v.to_string() + ", X=" + x.to_string() + "]";
    r.expect_equal("supp(Gamma_V X) = supp X n V" + tag, intersect(sx, v.points()),
                   supp_object(kunneth(gamma_V(v).value, x)));
    r.expect_equal("supp(L_V X) = supp X minus V" + tag, intersect(sx, v.points().complement()),
                   supp_object(kunneth(l_V(v).value, x)));
    return r;
  });
}

inline SuiteResult sigma_tau(const Options& o) {
  // Cases: the 256 codes over the first 6 primes, the five points for phi, then the
  // generated families (singletons and pairs) of the compact catalogue.
  const std::vector<BigInt> base = first_primes(6);
  const std::vector<PerfectComplex> catalogue = compact_catalogue();
  const std::size_t m = catalogue.size();
  std::vector<std::vector<std::size_t>> families;
  for (std::size_t i = 0; i < m; ++i) families.push_back({i});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) families.push_back({i, j});
  const std::size_t codes = 256, points = 5;
  return run_cases(
      "c07", "sigma/tau round trips and the point-prime dictionary", codes + points + families.size() + 1, o,
      [=](gen::Rng&, std::size_t id) {
        Report r;
        if (id < codes) {
          std::vector<BigInt> s;
          for (std::size_t i = 0; i < 6; ++i)
            if (id >> i & 1u) s.push_back(base[i]);
          const PrimeSet closed = id >> 6 & 1u ? PrimeSet::cofinite(s) : PrimeSet::finite(s);
          const LocSubcatCode w{{static_cast<bool>(id >> 7 & 1u), closed}};
          const auto gens = tau_generators(w);
          r.expect_equal("sigma tau W = W", w.points, sigma_loc(gens).points);
          for (const auto& g : gens) r.expect("generator in tau W [" + w.to_string() + "]", tau_loc(w, g));
          return r;
        }
        id -= codes;
        if (id < points) {
          const SpecZPoint x = id == points - 1 ? SpecZPoint::generic() : SpecZPoint::closed(base[id]);
          r.expect_equal("phi^-1 phi x = x", x, prime_to_point(point_to_prime(x)));
          return r;
        }
        id -= points;
        if (id == families.size()) {
          // Certify the generation moves used by the oracle with explicit cones.
          for (long n : {2, 6, 12}) {
            GradedModule want;
            want.add(0, cyclic_decomposition(n));
            r.expect_equal("H cone(x" + std::to_string(n) + ")", want, homology(multiplication_cone(n)));
          }
          const GradedModule h = homology(tensor_chain(multiplication_cone(8), multiplication_cone(2)));
          r.expect("Z/2 summand of Z/8 (x) cone(x2)", h.at(0) == Module{Cyclic::torsion(2, 1)}, h.to_string());
          for (unsigned k = 2; k <= 4; ++k) {
            GradedModule want;
            want.add(0, Cyclic::torsion(2, 1));
            r.expect_equal("Z/2^" + std::to_string(k - 1) + " -> Z/2^" + std::to_string(k) + " -> Z/2", want,
                           homology(cone(oracle::torsion_extension(2, k))));
          }
          return r;
        }
        std::vector<PerfectComplex> gens;
        std::vector<GradedModule> homs;
        std::string label;
        for (std::size_t i : families[id]) {
          gens.push_back(catalogue[i]);
          homs.push_back(homology(catalogue[i]));
          label += (label.empty() ? "" : ",") + std::to_string(i);
        }
        const LocSubcatCode w = sigma_loc(homs);
        for (const auto& g : homs) r.expect("tau sigma contains generators [" + label + "]", tau_loc(w, g));
        for (std::size_t y = 0; y < m; ++y) {
          const bool expected = oracle::thick_generated(catalogue[y], gens);
          const bool got = thick_membership(catalogue[y], gens);
          r.expect("probe " + std::to_string(y) + " in thick(" + label + ")", expected == got,
                   "generation " + std::string(expected ? "reaches" : "misses") + " it, support test says " +
                       (got ? "member" : "not a member"));
        }
        return r;
      });
}

inline SuiteResult residue_suite(const Options& o) {
  return run_cases("c08", "residue fields detect objects supported at a point", scaled(o, 200), o,
                   [](gen::Rng& rng, std::size_t id) {
                     const std::vector<SpecZPoint> pts = {SpecZPoint::closed(2), SpecZPoint::closed(3), SpecZPoint::generic()};
                     const SpecZPoint x = pts[id % 3];
                     GradedModule obj = gen::random_graded(rng);
                     // Half the cases are pushed to x so that the nonvanishing clause is exercised.
                     if (id / 3 % 2) obj = kunneth(gamma_point(x).value, obj);
                     return residue_check(x, obj);
                   });
}

inline SuiteResult gamma_point_uniqueness(const Options& o) {
  const std::vector<BigInt> base = first_primes(10);
  return run_cases("balmer.gamma-point", "Gamma_x independent of the Thomason pair", base.size() + 1, o,
                   [base](gen::Rng&, std::size_t id) {
                     Report r;
                     std::vector<std::pair<SpclSubset, SpclSubset>> pairs;
                     SpecZPoint x = SpecZPoint::generic();
                     if (id < base.size()) {
                       const BigInt& p = base[id];
                       const BigInt& q = base[(id + 1) % base.size()];
                       const BigInt& s = base[(id + 2) % base.size()];
                       x = SpecZPoint::closed(p);
                       pairs = {{v_of_point(x), z_of_point(x)},
                                {SpclSubset::closed(PrimeSet::finite({p, q})), SpclSubset::closed(PrimeSet::finite({q}))},
                                {SpclSubset::closed(PrimeSet::finite({p, q, s})), SpclSubset::closed(PrimeSet::finite({q, s}))},
                                {SpclSubset::closed(PrimeSet::all()), SpclSubset::closed(PrimeSet::cofinite({p}))},
                                {SpclSubset::closed(PrimeSet::finite({p, q})), SpclSubset::closed(PrimeSet::cofinite({p}))}};
                     } else {
                       // Spec Z and the closed points form the only pair isolating the generic point.
                       pairs = {{v_of_point(x), z_of_point(x)}, {SpclSubset::all(), SpclSubset::closed(PrimeSet::all())}};
                     }
                     const GradedModule want = gamma_point(x).value;
                     for (const auto& [v, w] : pairs) {
                       const std::string tag = " [x=" + x.to_string() + ", V=" + v.to_string() + ", W=" + w.to_string() + "]";
                       r.expect_equal("V minus W = {x}" + tag, PointSet::only(x), intersect(v.points(), w.points().complement()));
                       r.expect_equal("Gamma_V 1 (x) L_W 1 = Gamma_x 1" + tag, want, kunneth(gamma_V(v).value, l_V(w).value));
                     }
                     return r;
                   });
}

inline SuiteResult support_agreement(const Options& o) {
  return run_cases("balmer.supp", "symbolic support against explicit products at sampled points", o.cases, o,
                   [](gen::Rng& rng, std::size_t) {
                     const GradedModule x = gen::random_graded(rng);
                     const PointSet s = supp_object(x);
                     Report r;
                     r.expect_equal("supp X = homological support", supp_mod(x), s);
                     std::vector<SpecZPoint> probes{SpecZPoint::generic(), SpecZPoint::closed(gen::random_prime(rng))};
                     for (const auto& p : listed_primes(x)) probes.push_back(SpecZPoint::closed(p));
                     probes.push_back(SpecZPoint::closed(fresh_prime(listed_primes(x))));
                     for (const auto& pt : probes) {
                       const bool nonzero = !kunneth(gamma_point(pt).value, x).is_zero();
                       r.expect("explicit Gamma_x X at " + pt.to_string(), nonzero == s.contains(pt),
                                "X = " + x.to_string() + ", supp = " + s.to_string());
                     }
                     return r;
                   });
}

inline SuiteResult localization_triangles(const Options& o) {
  const auto family = subset_family(6);
  return run_cases("balmer.triangle", "localization triangle identities", family.size(), o,
                   [family](gen::Rng&, std::size_t id) { return localization_triangle_check(family[id]); });
}

// ---- supportdata

/// Facts that hold for every catalogue; `with_classification` adds the lattice bijection,
/// which needs every ideal to be determined by its support.
inline Report spectrum_checks(const Catalogue& c, unsigned workers, bool with_classification) {
  Report r;
  r.append(prime_facts(c, workers));
  const SupportDatum d = spc_support(c, workers);
  r.append(check_axioms(d, c), "spc_support: ");
  const UniversalMap u = universal_map(d, c, workers);
  bool identity = u.index.size() == u.primes.size();
  for (std::size_t i = 0; identity && i < u.index.size(); ++i) identity = u.index[i] == i;
  r.expect("universal map from Spc is the identity", identity);
  if (u.primes.size() <= kMaxUniquenessPoints)
    r.expect("universal map unique", u.morphism_count == std::size_t{1},
             u.morphism_count ? std::to_string(*u.morphism_count) + " morphisms" : "not counted");
  r.append(u.report, "universal: ");
  if (with_classification) r.append(classify(c, workers).report, "classify: ");
  return r;
}

inline SuiteResult finite_spectrum(const Options& o) {
  const std::size_t randoms = scaled(o, 50);
  return run_cases("c09", "finite-model spectrum, universal map and classification", randoms + 1, o,
                   [](gen::Rng& rng, std::size_t id) {
                     if (id == 0) {
                       const Catalogue c = five_object_model();
                       Report r;
                       const auto primes = enumerate_primes(c);
                       r.expect("5-object model has 2 primes", primes.size() == 2, std::to_string(primes.size()));
                       const Classification cl = classify(c);
                       r.expect("4 ideals <-> 4 subsets", cl.ideals.size() == 4 && cl.subsets.size() == 4,
                                std::to_string(cl.ideals.size()) + " ideals, " + std::to_string(cl.subsets.size()) + " subsets");
                       r.append(spectrum_checks(c, 1, true));
                       return r;
                     }
                     const Catalogue c = gen::random_catalogue(rng, 12, static_cast<std::size_t>(gen::uniform(rng, 2, 4)));
                     return spectrum_checks(c, 1, false);
                   });
}

// ---- registry

struct Suite {
  std::string id;
  std::function<SuiteResult(const Options&)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"znum.primeset", primeset_algebra},
      {"znum.lattice", spcl_lattice},
      {"znum.points", point_subsets},
      {"homalg.shift", homology_shift},
      {"homalg.tensor", tensor_commutes},
      {"modcalc.tables", table_suite},
      {"modcalc.kunneth", kunneth_laws},
      {"modcalc.supp", supp_mod_suite},
      {"balmer.gamma-point", gamma_point_uniqueness},
      {"balmer.supp", support_agreement},
      {"balmer.triangle", localization_triangles},
      {"c01", axioms_on_complexes},
      {"c02", kunneth_oracle},
      {"c03", idempotent_suite},
      {"c04", closed_forms},
      {"c05", zero_detection},
      {"c06", separation},
      {"c07", sigma_tau},
      {"c08", residue_suite},
      {"c09", finite_spectrum},
      {"c10", snf_suite},
  };
  return all;
}

/// Runs every suite, or those whose id starts with `filter`.
inline std::vector<SuiteResult> run_all(const Options& o, const std::string& filter = {}) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites())
    if (s.id.rfind(filter, 0) == 0) out.push_back(s.run(o));
  return out;
}

}  // namespace ttsupport::verify

#endif  // TTSUPPORT_VERIFY_HPP
