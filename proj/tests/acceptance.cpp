// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "ogroup/frontend/cli.hpp"
#include "ogroup/frontend/corpus.hpp"
#include "ogroup/frontend/suites.hpp"
#include "ogroup/homs.hpp"
#include "ogroup/isomorphism.hpp"
#include "oracles.hpp"

using namespace ogroup;
using namespace ogroup::frontend;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Tally {
  std::size_t checks = 0, violations = 0, skipped = 0;
};

Tally tally(const std::vector<CheckResult> &results) {
  Tally t;
  for (const CheckResult &r : results) {
    if (r.suite == "corpus")
      continue;
    t.checks += r.checks;
    t.violations += r.violations;
    t.skipped += r.skipped;
  }
  return t;
}

std::size_t checks_of(const std::vector<CheckResult> &results, const std::string &check) {
  for (const CheckResult &r : results)
    if (r.check == check)
      return r.checks;
  return 0;
}

bool all_ok = true;

void line(int n, const std::string &name, bool pass, const std::string &detail) {
  std::printf("criterion %d %-28s %s  %s\n", n, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  all_ok = all_ok && pass;
}

std::string describe(const Tally &t, double secs) {
  std::ostringstream s;
  s << "checks=" << t.checks << " violations=" << t.violations << " skipped=" << t.skipped
    << " time=" << std::fixed;
  s.precision(2);
  s << secs << "s";
  return s.str();
}

std::vector<CheckResult> suite(const std::string &name, const std::vector<CorpusEntry> &corpus,
                               double &secs) {
  SuiteOptions opt;
  opt.max_order = 24;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto t0 = Clock::now();
  auto r = run_suite(name, corpus, opt);
  secs = seconds_since(t0);
  return r;
}

std::string run_quiet(const std::vector<std::string> &args, int &code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

} // namespace

int main() {
  auto corpus = load_corpus();

  {
    auto t0 = Clock::now();
    CounterexampleReport r = reproduce_counterexample();
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << "socle(S3)=" << r.socle_order << " socle(S3xS3)=" << r.product_socle_order
      << " diagonal simple normal in socle=" << r.diagonal_simple_normal_in_socle
      << " diagonal normal=" << r.diagonal_normal_in_product << " time=" << secs
      << "s (limit 1s)";
    line(1, "counterexample", r.reproduced() && secs < 1.0, d.str());
  }

  {
    double secs;
    auto r = suite("prop2", corpus, secs);
    Tally t = tally(r);
    line(2, "prop2 suite", t.violations == 0 && checks_of(r, "products") > 0 && secs < 300,
         describe(t, secs) + " (limit 300s)");
  }

  {
    double secs;
    auto r = suite("theorem", corpus, secs);
    Tally t = tally(r);
    PhiCensus c6 = phi_census(build_named(NamedKind::cyclic, 6), build_named(NamedKind::cyclic, 6));
    bool golden = c6.normal_homs == 6 && c6.vectors == 6 && c6.bijective();
    line(3, "theorem suite", t.violations == 0 && checks_of(r, "phi-bijection") > 0 && golden,
         describe(t, secs) + " |Hom_n(C6,C6)|=" + std::to_string(c6.normal_homs));
  }

  {
    double secs;
    auto r = suite("equivalence", corpus, secs);
    Tally t = tally(r);
    line(4, "equivalence of definitions",
         t.violations == 0 && checks_of(r, "mi-theta") > 0 && checks_of(r, "criteria") > 0,
         describe(t, secs));
  }

  {
    double secs;
    auto r = suite("prop1", corpus, secs);
    Tally t = tally(r);
    line(5, "greedy refinement", t.violations == 0 && t.checks >= 500,
         describe(t, secs) + " (at least 500 instances)");
  }

  {
    auto t0 = Clock::now();
    std::size_t iso_pairs = 0, iso_bad = 0, hom_pairs = 0, hom_bad = 0;
    for (const auto &a : corpus) {
      if (a.group.order() > 12)
        continue;
      for (const auto &b : corpus) {
        if (b.group.order() > 12)
          continue;
        ++iso_pairs;
        if (are_isomorphic(a.group, b.group).has_value() != oracle::isomorphic(a.group, b.group))
          ++iso_bad;
        if (a.group.order() > 8 || a.group.labels() != b.group.labels())
          continue;
        ++hom_pairs;
        auto want = oracle::homs(a.group, b.group);
        std::sort(want.begin(), want.end());
        HomSet got = enumerate_homs(a.group, b.group);
        std::vector<std::vector<Element>> maps;
        for (const auto &m : got.morphisms)
          maps.push_back(m.map());
        if (maps != want)
          ++hom_bad;
      }
    }
    std::ostringstream d;
    d << "isomorphism pairs=" << iso_pairs << " mismatches=" << iso_bad
      << " hom pairs=" << hom_pairs << " mismatches=" << hom_bad
      << " time=" << seconds_since(t0) << "s";
    line(6, "oracle equivalence", iso_bad == 0 && hom_bad == 0 && iso_pairs > 0 && hom_pairs > 0,
         d.str());
  }

  {
    double s1, s2;
    auto a = suite("sie-ns", corpus, s1);
    auto b = suite("lemma", corpus, s2);
    a.insert(a.end(), b.begin(), b.end());
    Tally t = tally(a);
    line(7, "sie/ns/lemma suites",
         t.violations == 0 && checks_of(a, "sie") > 0 && checks_of(a, "ns") > 0 &&
           checks_of(a, "normal-joins") > 0,
         describe(t, s1 + s2));
  }

  {
    fs::path dir = fs::temp_directory_path() / "ogroup-acceptance";
    fs::create_directories(dir);
    fs::path spec = dir / "corpus.ogs";
    std::ofstream(spec, std::ios::binary) << corpus_text();
    int c1, c2, c3, c4;
    std::string a = run_quiet({"--lattice-cap", "36", "analyze", spec.string()}, c1);
    std::string b = run_quiet({"--lattice-cap", "36", "analyze", spec.string()}, c2);
    std::string v1 = run_quiet({"verify", "--suite", "all", "--max-order", "12", "--jobs", "1"}, c3);
    std::string v4 = run_quiet({"verify", "--suite", "all", "--max-order", "12", "--jobs", "4"}, c4);
    bool pass = c1 == 0 && c2 == 0 && a == b && !a.empty() && c3 == 0 && c4 == 0 && v1 == v4;
    std::ostringstream d;
    d << "analyze exit=" << c1 << "," << c2 << " identical=" << (a == b) << " bytes=" << a.size()
      << " verify all max-order 12 exit=" << c3 << " jobs-independent=" << (v1 == v4);
    line(8, "determinism", pass, d.str());
  }

  return all_ok ? 0 : 1;
}
