// tt-support: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.

#include "ttsupport/ttsupport.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ttsupport;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

/// Input error bound to a file.
struct file_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw file_error(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw file_error(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

template <class F>
auto read_file(const std::string& path, F&& reader) {
  const json j = load_json(path);
  try {
    return reader(j);
  } catch (const input_error& e) {
    throw file_error(path + ": " + e.what());
  }
}

/// A file holding either a complex ({"ranks": ...}) or a graded module ({"0": [...]}).
struct Object {
  std::optional<PerfectComplex> complex;
  GradedModule module;
};

Object read_object(const std::string& path) {
  return read_file(path, [](const json& j) {
    Object o;
    if (j.is_object() && j.contains("ranks")) {
      o.complex = io::read_complex(j, "");
      o.module = homology(*o.complex);
    } else {
      o.module = io::read_graded(j, "");
    }
    return o;
  });
}

SpecZPoint parse_point(const std::string& text) {
  if (text == "generic" || text == "0" || text == "(0)") return SpecZPoint::generic();
  try {
    std::string digits = text;
    if (digits.size() > 2 && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
    return SpecZPoint::closed(parse_bigint(digits));
  } catch (const std::invalid_argument& e) {
    throw file_error("--point: '" + text + "' is not a prime or 'generic'");
  }
}

/// "all", "2,3" (closed points {2,3}), "cofinite:2,3" (all closed points except 2, 3),
/// or "" / "none" for the empty subset.
SpclSubset parse_subset(const std::string& text) {
  if (text == "all") return SpclSubset::all();
  if (text.empty() || text == "none") return SpclSubset::empty();
  std::string list = text;
  bool cofinite = false;
  for (const std::string prefix : {"cofinite:", "finite:"})
    if (list.rfind(prefix, 0) == 0) {
      cofinite = prefix == "cofinite:";
      list = list.substr(prefix.size());
    }
  std::vector<BigInt> primes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const BigInt p = parse_bigint(item);
      if (!is_prime(p)) throw std::invalid_argument("not prime");
      primes.push_back(p);
    } catch (const std::invalid_argument&) {
      throw file_error("--subset: '" + item + "' is not a prime");
    }
  }
  return SpclSubset::closed(cofinite ? PrimeSet::cofinite(primes) : PrimeSet::finite(primes));
}

struct Output {
  bool json_format = false;
  json doc = json::object();
  std::string text;

  void value(const std::string& key, const std::string& shown, json encoded) {
    text += shown + "\n";
    doc[key] = std::move(encoded);
  }
  void line(const std::string& s) { text += s + "\n"; }
  int finish(const Report& r) {
    if (!r.checks().empty()) {
      text += r.to_text();
      doc["report"] = io::to_json(r);
    }
    doc["ok"] = r.ok();
    if (json_format)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
    return r.ok() ? kPass : kFail;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supports, idempotents and spectra for D(Z) and finite tensor triangulated models"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string complex_path, object_path, left_path, right_path, point_text, subset_text, flavor = "gamma";
  std::string catalogue_path, datum_path, suite_filter;
  std::vector<std::string> generator_paths;
  unsigned probe_bound = 100;
  verify::Options vopts;
  vopts.workers = 0;

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a perfect complex");
  homology_cmd->add_option("--complex,complex", complex_path, "Complex JSON file")->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "Derived tensor product; chain-level check when both inputs are complexes");
  tensor_cmd->add_option("--left,left", left_path, "Complex or graded module JSON")->required();
  tensor_cmd->add_option("--right,right", right_path, "Complex or graded module JSON")->required();

  auto* support_cmd = app.add_subcommand("support", "Support in Spec Z");
  support_cmd->add_option("--object,object", object_path, "Complex or graded module JSON")->required();

  auto* idem_cmd = app.add_subcommand("idempotent", "Rickard idempotents Gamma_V 1, L_V 1 and Gamma_x 1");
  auto* point_opt = idem_cmd->add_option("--point", point_text, "Point: a prime or 'generic'");
  auto* subset_opt = idem_cmd->add_option("--subset", subset_text, "Subset: all | 2,3 | cofinite:2,3");
  idem_cmd->add_option("--flavor", flavor, "gamma or l (with --subset)")->check(CLI::IsMember({"gamma", "l"}));
  point_opt->excludes(subset_opt);

  auto* tri_cmd = app.add_subcommand("triangle-check", "Localization triangle Gamma_V 1 -> 1 -> L_V 1");
  tri_cmd->add_option("--subset,subset", subset_text, "Subset: all | 2,3 | cofinite:2,3")->required();

  auto* ltg_cmd = app.add_subcommand("ltg", "Local-to-global checks for an object");
  ltg_cmd->add_option("--object,object", object_path, "Complex or graded module JSON")->required();
  ltg_cmd->add_option("--probe-bound", probe_bound, "Probe primes up to this bound")->check(CLI::Range(2u, 100000u));

  auto* classify_cmd = app.add_subcommand("classify", "Thick ideals vs Thomason subsets of a catalogue, or sigma of generators in D(Z)");
  classify_cmd->add_option("catalogue", catalogue_path, "Catalogue JSON");
  classify_cmd->add_option("--generator", generator_paths, "Generator objects (D(Z) mode)");
  classify_cmd->add_option("--probe", object_path, "Object tested for membership (D(Z) mode)");

  auto* prime_cmd = app.add_subcommand("prime", "Point <-> prime thick ideal dictionary for D(Z)");
  auto* ppoint = prime_cmd->add_option("--point", point_text, "Point: a prime or 'generic'");
  auto* psubset = prime_cmd->add_option("--subset", subset_text, "V such that tau(V) is tested for primality");
  prime_cmd->add_option("--probe-bound", probe_bound, "Probe cones up to this n")->check(CLI::Range(2u, 100000u));
  ppoint->excludes(psubset);

  auto* spc_cmd = app.add_subcommand("catalogue-spc", "Prime thick tensor-ideals of a finite catalogue");
  spc_cmd->add_option("catalogue", catalogue_path, "Catalogue JSON")->required();

  auto* univ_cmd = app.add_subcommand("catalogue-universal", "Universal map from a support datum to Spc");
  univ_cmd->add_option("catalogue", catalogue_path, "Catalogue JSON")->required();
  univ_cmd->add_option("--datum", datum_path, "Support datum JSON (default: Spc itself)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--seed", vopts.seed, "Seed");
  verify_cmd->add_option("--cases", vopts.cases, "Random cases per suite")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  verify_cmd->add_option("--primes-bound", vopts.primes_bound, "Prime bound for per-prime oracles")->check(CLI::Range(2u, 1000u));
  verify_cmd->add_option("--workers", vopts.workers, "Worker threads (TT_SUPPORT_WORKERS overrides the default)");
  verify_cmd->add_option("--suite", suite_filter, "Only suites whose id starts with this prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  Output out;
  out.json_format = format == "json";
  Report report;
  try {
    if (*homology_cmd) {
      const PerfectComplex c = read_file(complex_path, [](const json& j) { return io::read_complex(j, ""); });
      const GradedModule h = homology(c);
      out.value("homology", h.to_string(), io::to_json(h));
    } else if (*tensor_cmd) {
      const Object a = read_object(left_path), b = read_object(right_path);
      const GradedModule k = kunneth(a.module, b.module);
      out.value("tensor", k.to_string(), io::to_json(k));
      if (a.complex && b.complex)
        report.expect_equal("chain-level tensor homology = Kunneth", k, homology(tensor_chain(*a.complex, *b.complex)));
    } else if (*support_cmd) {
      const Object o = read_object(object_path);
      const PointSet s = supp_object(o.module);
      out.value("support", s.to_string(), io::to_json(s));
    } else if (*idem_cmd) {
      Idempotent e = gamma_point(SpecZPoint::generic());
      if (!point_text.empty()) {
        e = gamma_point(parse_point(point_text));
      } else if (*subset_opt) {
        const SpclSubset v = parse_subset(subset_text);
        e = flavor == "gamma" ? gamma_V(v) : l_V(v);
      } else {
        throw file_error("idempotent: give --point or --subset");
      }
      out.value("value", e.label() + " = " + e.value.to_string(), io::to_json(e.value));
      report.expect_equal("idempotent: e (x) e = e", e.value, kunneth(e.value, e.value));
    } else if (*tri_cmd) {
      report = localization_triangle_check(parse_subset(subset_text));
    } else if (*ltg_cmd) {
      const Object o = read_object(object_path);
      for (const auto& x : probe_points(o.module, 1)) {
        const GradedModule local = kunneth(gamma_point(x).value, o.module);
        out.line("Gamma_" + x.to_string() + " X = " + local.to_string());
        out.doc["local"][x.to_string()] = io::to_json(local);
      }
      report = ltg_check(o.module, probe_bound);
    } else if (*classify_cmd) {
      if (!catalogue_path.empty()) {
        const Catalogue c = read_file(catalogue_path, [](const json& j) { return io::read_catalogue(j); });
        const Classification cl = classify(c, verify::workers_from_env(1));
        const FiniteSpace& space = cl.datum.space;
        for (std::size_t i = 0; i < cl.subsets.size(); ++i) {
          const std::string line = space.describe(cl.subsets[i]) + " <-> " + c.describe(cl.tau[i]);
          out.line(line);
          out.doc["pairs"].push_back({{"subset", space.describe(cl.subsets[i])}, {"ideal", c.describe(cl.tau[i])}});
        }
        report = cl.report;
      } else {
        if (generator_paths.empty()) throw file_error("classify: give a catalogue file or --generator objects");
        std::vector<GradedModule> gens;
        for (const auto& path : generator_paths) gens.push_back(read_object(path).module);
        const LocSubcatCode w = sigma_loc(gens);
        out.value("sigma", "sigma(loc(generators)) = " + w.to_string(), io::to_json(w.points));
        if (!object_path.empty()) {
          const Object probe = read_object(object_path);
          const bool member = tau_loc(w, probe.module);
          out.value("member", std::string("probe in tau(sigma) = ") + (member ? "true" : "false"), member);
          if (probe.complex) {
            std::vector<PerfectComplex> compact;
            bool all_compact = true;
            for (const auto& path : generator_paths) {
              Object g = read_object(path);
              if (!g.complex) all_compact = false;
              else compact.push_back(*g.complex);
            }
            if (all_compact) {
              const bool thick = thick_membership(*probe.complex, compact);
              out.value("thick", std::string("probe in thick(generators) = ") + (thick ? "true" : "false"), thick);
            }
          }
        }
      }
    } else if (*prime_cmd) {
      if (!point_text.empty()) {
        const SpecZPoint x = parse_point(point_text);
        const ThickIdeal ideal = point_to_prime(x);
        out.value("prime", "phi(" + x.to_string() + ") = tau(" + ideal.support().to_string() + ")",
                  io::to_json(ideal.support()));
        report.expect_equal("phi^-1 phi x = x", x, prime_to_point(ideal, probe_bound));
      } else if (*psubset) {
        const ThickIdeal ideal(parse_subset(subset_text));
        try {
          const SpecZPoint x = prime_to_point(ideal, probe_bound);
          out.value("point", "tau(" + ideal.support().to_string() + ") = phi(" + x.to_string() + ")", io::to_json(x));
        } catch (const not_prime_error& e) {
          report.expect("tau(V) is prime", false, e.what());
        }
      } else {
        throw file_error("prime: give --point or --subset");
      }
    } else if (*spc_cmd) {
      const Catalogue c = read_file(catalogue_path, [](const json& j) { return io::read_catalogue(j); });
      const SupportDatum d = spc_support(c, verify::workers_from_env(1));
      for (std::size_t x = 0; x < d.space.size(); ++x) out.line(d.space.label(x));
      out.line("supports:");
      for (std::size_t k = 0; k < c.size(); ++k) out.line("  supp " + c.name(k) + " = " + d.space.describe(d.sigma[k]));
      out.doc["spc"] = io::to_json(d, c);
      report = check_axioms(d, c);
      report.append(prime_facts(c));
    } else if (*univ_cmd) {
      const Catalogue c = read_file(catalogue_path, [](const json& j) { return io::read_catalogue(j); });
      const SupportDatum d = datum_path.empty()
                                 ? spc_support(c)
                                 : read_file(datum_path, [&](const json& j) { return io::read_datum(j, c); });
      report = check_axioms(d, c);
      const UniversalMap u = universal_map(d, c);
      for (std::size_t x = 0; x < d.space.size(); ++x) {
        out.line("f(" + d.space.label(x) + ") = " + c.describe(u.image[x]));
        out.doc["map"][d.space.label(x)] = c.describe(u.image[x]);
      }
      if (u.morphism_count) {
        out.line("morphisms to Spc: " + std::to_string(*u.morphism_count));
        out.doc["morphisms"] = *u.morphism_count;
      }
      report.append(u.report);
    } else if (*verify_cmd) {
      if (vopts.workers == 0) vopts.workers = verify::workers_from_env(1);
      const auto results = verify::run_all(vopts, suite_filter);
      if (results.empty()) throw file_error("--suite: no suite id starts with '" + suite_filter + "'");
      report = verify::to_report(results);
      out.line("seed " + std::to_string(vopts.seed) + ", cases " + std::to_string(vopts.cases) + ", primes bound " +
               std::to_string(vopts.primes_bound));
    }
  } catch (const file_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return out.finish(report);
}
