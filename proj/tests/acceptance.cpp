// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "ttsupport/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace ttsupport;

namespace {

struct Criterion {
  const char* suite;
  const char* title;
  double budget_seconds;  // 0: no time limit
};

const Criterion kCriteria[] = {
    {"c01", "support-data axioms on random perfect complexes", 30.0},
    {"c02", "Kunneth formula against chain-level tensor homology", 0},
    {"c03", "idempotent laws over subsets of the first ten primes", 0},
    {"c04", "closed forms against Koszul and truncation oracles", 0},
    {"c05", "zero detection by support", 0},
    {"c06", "separation by Gamma_V and L_V", 0},
    {"c07", "sigma/tau round trips and phi, phi^-1", 0},
    {"c08", "residue-field decomposition", 0},
    {"c09", "finite-model spectrum, universal map, classification", 0},
    {"c10", "Smith normal form", 0},
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  verify::Options o;
  o.workers = verify::workers_from_env(1);
  int failures = 0;
  int index = 1;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = verify::run_all(o, c.suite);
    const double elapsed = seconds_since(start);
    const Report report = verify::to_report(results);
    bool ok = !results.empty() && report.ok();
    std::string detail = std::to_string(results.empty() ? 0 : results.front().cases) + " cases";
    if (!report.ok()) {
      const Check& f = report.checks().front();
      detail += "; " + f.name + (f.actual.empty() ? "" : ": " + f.actual);
    }
    if (c.budget_seconds > 0 && elapsed >= c.budget_seconds) {
      ok = false;
      detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    // The five-object model must also be handled within one second on its own.
    if (std::string(c.suite) == "c09") {
      const auto model_start = std::chrono::steady_clock::now();
      const Report model = verify::spectrum_checks(verify::five_object_model(), 1, true);
      const double model_elapsed = seconds_since(model_start);
      if (!model.ok() || model_elapsed >= 1.0) {
        ok = false;
        detail += "; five-object model " + std::string(model.ok() ? "too slow" : "failed");
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "; five-object model %.3f s", model_elapsed);
      detail += buf;
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    std::printf("%s  criterion %2d  %s (%s; %s)\n", ok ? "PASS" : "FAIL", index, c.title, detail.c_str(), timing);
    failures += ok ? 0 : 1;
    ++index;
  }
  std::printf("%d of %d criteria passed\n", index - 1 - failures, index - 1);
  return failures == 0 ? 0 : 1;
}
