#ifndef TTSUPPORT_SERIALIZE_HPP
#define TTSUPPORT_SERIALIZE_HPP

// JSON encodings of every value the command-line tool reads or writes. Integers are
// written as decimal strings; readers accept strings or JSON integers. Reader errors carry
// the JSON location of the offending value.

#include "ttsupport/balmer.hpp"
#include "ttsupport/supportdata.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace ttsupport {

class input_error : public std::invalid_argument {
 public:
  input_error(std::string location, const std::string& message)
      : std::invalid_argument(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

namespace io {

using nlohmann::json;

inline std::string at(const std::string& loc, const std::string& key) { return loc.empty() ? key : loc + "." + key; }
inline std::string at(const std::string& loc, std::size_t i) { return loc + "[" + std::to_string(i) + "]"; }

inline const json& field(const json& j, const std::string& key, const std::string& loc) {
  if (!j.is_object()) throw input_error(loc, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(at(loc, key), "missing field");
  return *it;
}

inline std::string read_string(const json& j, const std::string& loc) {
  if (!j.is_string()) throw input_error(loc, "expected a string");
  return j.get<std::string>();
}

inline BigInt read_integer(const json& j, const std::string& loc) {
  try {
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw input_error(loc, e.what());
  }
  throw input_error(loc, "expected an integer (decimal string or number)");
}

inline long read_long(const json& j, const std::string& loc) {
  const BigInt v = read_integer(j, loc);
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw input_error(loc, "integer out of range");
  return static_cast<long>(v);
}

inline long read_degree_key(const std::string& key, const std::string& loc) {
  try {
    const BigInt v = parse_bigint(key);
    if (v > 1'000'000 || v < -1'000'000) throw input_error(loc, "degree out of range");
    return static_cast<long>(v);
  } catch (const input_error&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw input_error(loc, "degree key '" + key + "' is not a decimal integer");
  }
}

inline json write_integer(const BigInt& v) { return v.str(); }

inline BigInt read_prime(const json& j, const std::string& loc) {
  BigInt p = read_integer(j, loc);
  if (!is_prime(p)) throw input_error(loc, p.str() + " is not a prime");
  return p;
}

// ---- znum

inline json to_json(const PrimeSet& s) {
  json primes = json::array();
  for (const auto& p : s.primes()) primes.push_back(write_integer(p));
  return {{"mode", s.is_finite() ? "finite" : "cofinite"}, {"primes", primes}};
}

inline PrimeSet read_prime_set(const json& j, const std::string& loc) {
  const std::string mode = read_string(field(j, "mode", loc), at(loc, "mode"));
  if (mode != "finite" && mode != "cofinite") throw input_error(at(loc, "mode"), "must be \"finite\" or \"cofinite\"");
  const json& list = field(j, "primes", loc);
  if (!list.is_array()) throw input_error(at(loc, "primes"), "expected an array");
  std::vector<BigInt> primes;
  for (std::size_t i = 0; i < list.size(); ++i) primes.push_back(read_prime(list[i], at(at(loc, "primes"), i)));
  return mode == "finite" ? PrimeSet::finite(primes) : PrimeSet::cofinite(primes);
}

inline json to_json(const SpecZPoint& x) { return x.is_generic() ? json("generic") : write_integer(x.prime()); }

/// "generic" (or "0") for the generic point, otherwise a prime.
inline SpecZPoint read_point(const json& j, const std::string& loc) {
  if (j.is_string() && (j.get<std::string>() == "generic" || j.get<std::string>() == "0")) return SpecZPoint::generic();
  if (j.is_number_integer() && j.get<long long>() == 0) return SpecZPoint::generic();
  return SpecZPoint::closed(read_prime(j, loc));
}

inline json to_json(const SpclSubset& v) {
  if (v.is_all()) return {{"kind", "all"}};
  return {{"kind", "closed"}, {"primes", to_json(v.primes())}};
}

inline SpclSubset read_subset(const json& j, const std::string& loc) {
  const std::string kind = read_string(field(j, "kind", loc), at(loc, "kind"));
  if (kind == "all") return SpclSubset::all();
  if (kind == "closed") return SpclSubset::closed(read_prime_set(field(j, "primes", loc), at(loc, "primes")));
  throw input_error(at(loc, "kind"), "must be \"all\" or \"closed\"");
}

inline json to_json(const PointSet& s) { return {{"generic", s.generic}, {"closed", to_json(s.closed)}}; }

inline PointSet read_point_set(const json& j, const std::string& loc) {
  const json& g = field(j, "generic", loc);
  if (!g.is_boolean()) throw input_error(at(loc, "generic"), "expected a boolean");
  return {g.get<bool>(), read_prime_set(field(j, "closed", loc), at(loc, "closed"))};
}

// ---- modcalc

inline json to_json(const Cyclic& c) {
  switch (c.kind()) {
    case Cyclic::Kind::Free: return {{"kind", "free"}, {"invert", to_json(c.primes())}};
    case Cyclic::Kind::Torsion: return {{"kind", "torsion"}, {"p", write_integer(c.prime())}, {"k", c.exponent()}};
    case Cyclic::Kind::Prufer: return {{"kind", "prufer"}, {"primes", to_json(c.primes())}};
  }
  return {};
}

inline Cyclic read_cyclic(const json& j, const std::string& loc) {
  const std::string kind = read_string(field(j, "kind", loc), at(loc, "kind"));
  if (kind == "free") return Cyclic::free(read_prime_set(field(j, "invert", loc), at(loc, "invert")));
  if (kind == "torsion") {
    const BigInt p = read_prime(field(j, "p", loc), at(loc, "p"));
    const long k = read_long(field(j, "k", loc), at(loc, "k"));
    if (k < 1 || k > 1'000'000) throw input_error(at(loc, "k"), "exponent must be a positive integer");
    return Cyclic::torsion(p, static_cast<unsigned>(k));
  }
  if (kind == "prufer") {
    PrimeSet s = read_prime_set(field(j, "primes", loc), at(loc, "primes"));
    if (s.is_empty()) throw input_error(at(loc, "primes"), "a Prufer family needs at least one prime");
    return Cyclic::prufer(std::move(s));
  }
  throw input_error(at(loc, "kind"), "must be \"free\", \"torsion\" or \"prufer\"");
}

/// Summands listed with repetition.
inline json to_json(const Module& m) {
  json out = json::array();
  for (const auto& [c, mult] : m.terms())
    for (unsigned long i = 0; i < mult; ++i) out.push_back(to_json(c));
  return out;
}

inline Module read_module(const json& j, const std::string& loc) {
  if (!j.is_array()) throw input_error(loc, "expected an array of cyclic modules");
  Module m;
  for (std::size_t i = 0; i < j.size(); ++i) m.add(read_cyclic(j[i], at(loc, i)));
  return m;
}

inline json to_json(const GradedModule& x) {
  json out = json::object();
  for (const auto& [n, m] : x.degrees()) out[std::to_string(n)] = to_json(m);
  return out;
}

inline GradedModule read_graded(const json& j, const std::string& loc) {
  if (!j.is_object()) throw input_error(loc, "expected an object keyed by degree");
  GradedModule x;
  for (const auto& [key, value] : j.items()) x.add(read_degree_key(key, at(loc, key)), read_module(value, at(loc, key)));
  return x;
}

// ---- homalg

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_integer(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline IntMatrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& loc) {
  if (!j.is_array()) throw input_error(loc, "expected an array of rows");
  // A zero-row matrix carries no column information; accept [] for any shape with no rows.
  if (j.size() != rows) throw input_error(loc, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw input_error(at(loc, r), "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_integer(row[c], at(at(loc, r), c));
  }
  return m;
}

inline json to_json(const PerfectComplex& c) {
  json ranks = json::object(), diffs = json::object();
  for (const auto& [n, r] : c.ranks()) ranks[std::to_string(n)] = r;
  for (const auto& [n, d] : c.differentials()) diffs[std::to_string(n)] = to_json(d);
  return {{"ranks", ranks}, {"differentials", diffs}};
}

inline PerfectComplex read_complex(const json& j, const std::string& loc) {
  const json& rj = field(j, "ranks", loc);
  if (!rj.is_object()) throw input_error(at(loc, "ranks"), "expected an object keyed by degree");
  std::map<long, std::size_t> ranks;
  for (const auto& [key, value] : rj.items()) {
    const std::string where = at(at(loc, "ranks"), key);
    const long r = read_long(value, where);
    if (r < 0 || r > 4096) throw input_error(where, "rank must be in [0, 4096]");
    ranks[read_degree_key(key, where)] = static_cast<std::size_t>(r);
  }
  auto rank = [&](long n) -> std::size_t { return ranks.count(n) ? ranks[n] : 0; };
  std::map<long, IntMatrix> diffs;
  if (j.contains("differentials")) {
    const json& dj = j["differentials"];
    if (!dj.is_object()) throw input_error(at(loc, "differentials"), "expected an object keyed by degree");
    for (const auto& [key, value] : dj.items()) {
      const std::string where = at(at(loc, "differentials"), key);
      const long n = read_degree_key(key, where);
      diffs[n] = read_matrix(value, rank(n + 1), rank(n), where);
    }
  }
  try {
    return PerfectComplex(ranks, diffs);
  } catch (const complex_error& e) {
    throw input_error(at(loc, "differentials"), e.what());
  }
}

// ---- supportdata

inline json to_json(const Catalogue& c) {
  const auto& t = c.tables();
  json tensor = json::object();
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) tensor[c.name(a)][c.name(b)] = c.name(c.tensor(a, b));
  json shift = json::object();
  for (std::size_t a = 0; a < c.size(); ++a) shift[c.name(a)] = c.name(c.shift(a));
  json summands = json::array(), sums = json::array(), triangles = json::array();
  for (const auto& [o, s] : c.summands()) summands.push_back({c.name(o), c.name(s)});
  for (const auto& s : c.sums()) sums.push_back({c.name(s[0]), c.name(s[1]), c.name(s[2])});
  for (const auto& s : c.triangles()) triangles.push_back({c.name(s[0]), c.name(s[1]), c.name(s[2])});
  return {{"objects", t.names}, {"zero", c.name(c.zero())}, {"unit", c.name(c.unit())}, {"shift", shift},
          {"tensor", tensor}, {"summands", summands}, {"sums", sums}, {"triangles", triangles}};
}

/// Catalogue file. The tensor table may give each unordered pair once and may omit rows
/// for the unit and zero objects; shift defaults to the identity.
inline Catalogue read_catalogue(const json& j, const std::string& loc = "") {
  Catalogue::Tables t;
  const json& objects = field(j, "objects", loc);
  if (!objects.is_array()) throw input_error(at(loc, "objects"), "expected an array of names");
  for (std::size_t i = 0; i < objects.size(); ++i) t.names.push_back(read_string(objects[i], at(at(loc, "objects"), i)));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < t.names.size(); ++i)
    if (!index.emplace(t.names[i], i).second) throw input_error(at(at(loc, "objects"), i), "duplicate name '" + t.names[i] + "'");
  auto lookup = [&](const json& v, const std::string& where) {
    const std::string name = read_string(v, where);
    auto it = index.find(name);
    if (it == index.end()) throw input_error(where, "unknown object '" + name + "'");
    return it->second;
  };
  t.zero = lookup(field(j, "zero", loc), at(loc, "zero"));
  t.unit = lookup(field(j, "unit", loc), at(loc, "unit"));
  const std::size_t n = t.names.size();
  if (j.contains("shift")) {
    const json& sj = j["shift"];
    if (!sj.is_object()) throw input_error(at(loc, "shift"), "expected an object mapping names to names");
    t.shift.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.shift[i] = i;
    for (const auto& [key, value] : sj.items()) {
      const std::string where = at(at(loc, "shift"), key);
      auto it = index.find(key);
      if (it == index.end()) throw input_error(where, "unknown object '" + key + "'");
      t.shift[it->second] = lookup(value, where);
    }
  }
  const json& tj = field(j, "tensor", loc);
  if (!tj.is_object()) throw input_error(at(loc, "tensor"), "expected an object of rows");
  std::vector<std::vector<std::optional<std::size_t>>> table(n, std::vector<std::optional<std::size_t>>(n));
  for (const auto& [row, entries] : tj.items()) {
    const std::string rloc = at(at(loc, "tensor"), row);
    auto ri = index.find(row);
    if (ri == index.end()) throw input_error(rloc, "unknown object '" + row + "'");
    if (!entries.is_object()) throw input_error(rloc, "expected an object mapping names to names");
    for (const auto& [col, value] : entries.items()) {
      const std::string cloc = at(rloc, col);
      auto ci = index.find(col);
      if (ci == index.end()) throw input_error(cloc, "unknown object '" + col + "'");
      const std::size_t v = lookup(value, cloc);
      for (auto [a, b] : {std::pair{ri->second, ci->second}, std::pair{ci->second, ri->second}}) {
        if (table[a][b] && *table[a][b] != v)
          throw input_error(cloc, "conflicts with tensor[" + t.names[a] + "][" + t.names[b] + "] = " + t.names[*table[a][b]]);
        table[a][b] = v;
      }
    }
  }
  t.tensor.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b]) t.tensor[a][b] = *table[a][b];
      else if (a == t.unit) t.tensor[a][b] = b;
      else if (b == t.unit) t.tensor[a][b] = a;
      else if (a == t.zero || b == t.zero) t.tensor[a][b] = t.zero;
      else throw input_error(at(at(at(loc, "tensor"), t.names[a]), t.names[b]), "missing entry");
    }
  auto read_tuples = [&](const char* key, std::size_t arity, auto&& sink) {
    if (!j.contains(key)) return;
    const json& list = j[key];
    const std::string lloc = at(loc, key);
    if (!list.is_array()) throw input_error(lloc, "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_array() || list[i].size() != arity)
        throw input_error(at(lloc, i), "expected " + std::to_string(arity) + " object names");
      std::array<std::size_t, 3> v{};
      for (std::size_t k = 0; k < arity; ++k) v[k] = lookup(list[i][k], at(at(lloc, i), k));
      sink(v);
    }
  };
  read_tuples("summands", 2, [&](const auto& v) { t.summands.emplace_back(v[0], v[1]); });
  read_tuples("sums", 3, [&](const auto& v) { t.sums.push_back(v); });
  read_tuples("triangles", 3, [&](const auto& v) { t.triangles.push_back(v); });
  try {
    return Catalogue(std::move(t));
  } catch (const catalogue_error& e) {
    throw input_error(loc, e.what());
  }
}

inline json to_json(const SupportDatum& d, const Catalogue& c) {
  json order = json::array(), sigma = json::object();
  for (std::size_t x = 0; x < d.space.size(); ++x)
    for (std::size_t y = 0; y < d.space.size(); ++y)
      if (x != y && d.space.leq(x, y)) order.push_back({d.space.label(x), d.space.label(y)});
  for (std::size_t k = 0; k < c.size(); ++k) {
    json pts = json::array();
    for (std::size_t x = 0; x < d.space.size(); ++x)
      if (d.sigma[k] >> x & 1u) pts.push_back(d.space.label(x));
    sigma[c.name(k)] = pts;
  }
  return {{"points", d.space.labels()}, {"order", order}, {"sigma", sigma}};
}

/// Support datum file: point labels, generating pairs [x, y] meaning y is a
/// specialisation of x (reflexive-transitive closure taken), and sigma per object name.
/// Objects missing from "sigma" get the empty subset.
inline SupportDatum read_datum(const json& j, const Catalogue& c, const std::string& loc = "") {
  const json& pj = field(j, "points", loc);
  if (!pj.is_array()) throw input_error(at(loc, "points"), "expected an array of labels");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    labels.push_back(read_string(pj[i], at(at(loc, "points"), i)));
    if (!index.emplace(labels.back(), i).second) throw input_error(at(at(loc, "points"), i), "duplicate point label");
  }
  if (labels.size() > 64) throw input_error(at(loc, "points"), "at most 64 points are supported");
  auto point = [&](const json& v, const std::string& where) {
    const std::string name = read_string(v, where);
    auto it = index.find(name);
    if (it == index.end()) throw input_error(where, "unknown point '" + name + "'");
    return it->second;
  };
  const std::size_t n = labels.size();
  std::vector<PointMask> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = PointMask{1} << i;
  if (j.contains("order")) {
    const json& oj = j["order"];
    if (!oj.is_array()) throw input_error(at(loc, "order"), "expected an array of [x, y] pairs");
    for (std::size_t i = 0; i < oj.size(); ++i) {
      if (!oj[i].is_array() || oj[i].size() != 2) throw input_error(at(at(loc, "order"), i), "expected a pair");
      up[point(oj[i][0], at(at(at(loc, "order"), i), 0))] |= PointMask{1} << point(oj[i][1], at(at(at(loc, "order"), i), 1));
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if ((up[x] >> y & 1u) && (up[y] & ~up[x])) {
            up[x] |= up[y];
            changed = true;
          }
    }
  }
  SupportDatum d;
  try {
    d.space = FiniteSpace(std::move(up), std::move(labels));
  } catch (const catalogue_error& e) {
    throw input_error(at(loc, "order"), e.what());
  }
  d.sigma.assign(c.size(), 0);
  const json& sj = field(j, "sigma", loc);
  if (!sj.is_object()) throw input_error(at(loc, "sigma"), "expected an object keyed by object name");
  for (const auto& [name, pts] : sj.items()) {
    const std::string where = at(at(loc, "sigma"), name);
    auto k = c.index_of(name);
    if (!k) throw input_error(where, "unknown object '" + name + "'");
    if (!pts.is_array()) throw input_error(where, "expected an array of point labels");
    for (std::size_t i = 0; i < pts.size(); ++i) d.sigma[*k] |= PointMask{1} << point(pts[i], at(where, i));
  }
  try {
    d.validate(c);
  } catch (const catalogue_error& e) {
    throw input_error(loc, e.what());
  }
  return d;
}

// ---- reports

inline json to_json(const Report& r) {
  json records = json::array();
  for (const auto& c : r.checks()) {
    json rec = {{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.expected.empty()) rec["expected"] = c.expected;
    if (!c.actual.empty()) rec["actual"] = c.actual;
    records.push_back(rec);
  }
  return {{"ok", r.ok()}, {"records", records}};
}

}  // namespace io
}  // namespace ttsupport

#endif  // TTSUPPORT_SERIALIZE_HPP
