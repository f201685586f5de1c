#include "ogroup/frontend/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ogroup/errors.hpp"
#include "ogroup/frontend/corpus.hpp"
#include "ogroup/frontend/report.hpp"
#include "ogroup/frontend/spec.hpp"
#include "ogroup/frontend/suites.hpp"

namespace ogroup::frontend {

namespace {

class InputError : public Error {
public:
  using Error::Error;
};

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out)
    throw InputError("cannot write '" + path + "'");
}

Environment load(const std::string &path, const Limits &limits) {
  return elaborate(parse_spec(read_input(path)), limits);
}

const Group &lookup(const Environment &env, const std::string &name) {
  const Group *g = env.find(name);
  if (!g)
    throw InputError("unknown group '" + name + "'");
  return *g;
}

struct Failure {
  int code;
  std::string kind;
  std::string message;
  std::optional<Location> at;
};

int report_failure(const Failure &f, bool json, std::ostream &err) {
  if (json) {
    Json j = {{"kind", f.kind}, {"message", f.message}};
    if (f.at) {
      j["line"] = f.at->line;
      j["column"] = f.at->column;
    }
    err << Json{{"error", j}}.dump() << "\n";
  } else if (f.at) {
    err << "error: line " << f.at->line << ", column " << f.at->column << ": " << f.message
        << "\n";
  } else {
    err << "error: " << f.message << "\n";
  }
  return f.code;
}

Json results_json(const std::vector<CheckResult> &results) {
  Json j = Json::array();
  for (const CheckResult &r : results)
    j.push_back({{"suite", r.suite},
                 {"check", r.check},
                 {"checks", r.checks},
                 {"violations", r.violations},
                 {"skipped", r.skipped},
                 {"failures", r.failures}});
  return j;
}

void print_results(const std::vector<CheckResult> &results, std::ostream &out) {
  bool ok = true;
  for (const CheckResult &r : results) {
    out << r.suite << "/" << r.check << ": " << (r.ok() ? "PASS" : "FAIL")
        << " checks=" << r.checks << " violations=" << r.violations
        << " skipped=" << r.skipped << "\n";
    for (const auto &f : r.failures)
      out << "  " << f << "\n";
    ok = ok && r.ok();
  }
  out << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
}

Json counterexample_json(const CounterexampleReport &r) {
  return {{"socle_order", r.socle_order},
          {"socle_is_alternating", r.socle_is_alternating},
          {"product_socle_order", r.product_socle_order},
          {"product_socle_is_square", r.product_socle_is_square},
          {"product_socle", r.product_socle},
          {"diagonal", r.diagonal},
          {"diagonal_simple_normal_in_socle", r.diagonal_simple_normal_in_socle},
          {"diagonal_normal_in_product", r.diagonal_normal_in_product},
          {"reproduced", r.reproduced()}};
}

void print_counterexample(const CounterexampleReport &r, std::ostream &out) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "socle of S3: order " << r.socle_order << ", alternating subgroup: "
      << yes(r.socle_is_alternating) << "\n";
  out << "socle of S3 x S3: order " << r.product_socle_order << ", A3 x A3: "
      << yes(r.product_socle_is_square) << "\n";
  out << "diagonal of A3 simple normal in the socle: "
      << yes(r.diagonal_simple_normal_in_socle) << "\n";
  out << "diagonal of A3 normal in S3 x S3: " << yes(r.diagonal_normal_in_product) << "\n";
  out << "counterexample: " << (r.reproduced() ? "reproduced" : "NOT reproduced") << "\n";
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Structure of finite groups with operators", "ogroup"};
  app.require_subcommand(1);

  Limits limits;
  std::string cache_dir;
  app.add_option("--cache", cache_dir, "Directory for cached analyses")->envname("OGROUP_CACHE");
  app.add_option("--construction-cap", limits.construction, "Largest constructible order")
    ->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", limits.lattice, "Largest order for subgroup lattices")
    ->check(CLI::PositiveNumber);
  app.add_option("--certificate-cap", limits.certificate, "Largest order for certificates")
    ->check(CLI::PositiveNumber);
  app.add_option("--hom-cap", limits.hom, "Largest source order for hom enumeration")
    ->check(CLI::PositiveNumber);

  std::string file, json_path, only, from, to, suite;
  bool json_flag = false;
  SuiteOptions suite_options;

  auto *analyze = app.add_subcommand("analyze", "Analyze every group of a spec file");
  analyze->add_option("file", file, "Spec file, or - for standard input")->required();
  analyze->add_option("--json", json_path, "Write the report here instead of standard output");
  analyze->add_option("--group", only, "Analyze only this group");

  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  auto *verify = app.add_subcommand("verify", "Run property suites over the bundled corpus");
  verify->add_option("--suite", suite, "Suite name")
    ->required()
    ->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-order", suite_options.max_order, "Largest group order considered")
    ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", suite_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", suite_options.seed, "Seed for sampled instances");
  verify->add_option("--json", json_path, "Also write results as JSON here");

  auto *homs = app.add_subcommand("homs", "Count morphisms between two groups of a spec file");
  homs->add_option("file", file, "Spec file, or - for standard input")->required();
  homs->add_option("--from", from, "Source group")->required();
  homs->add_option("--to", to, "Target group")->required();

  auto *counter = app.add_subcommand("counterexample",
                                     "Show that the socle of S3 x S3 has a non-normal simple "
                                     "normal subgroup");
  counter->add_flag("--json", json_flag, "Print JSON");

  app.add_subcommand("corpus", "Print the bundled corpus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  bool json_errors = json_flag || !json_path.empty();
  try {
    std::optional<Cache> cache;
    if (!cache_dir.empty())
      cache.emplace(cache_dir);

    if (*analyze) {
      std::string text = read_input(file);
      Environment env = elaborate(parse_spec(text), limits);
      std::optional<std::string> pick;
      if (!only.empty()) {
        lookup(env, only);
        pick = only;
      }
      Json report = analyze_spec(file, text, env, pick, limits, cache ? &*cache : nullptr);
      if (json_path.empty()) {
        out << dump(report);
      } else {
        write_output(json_path, dump(report));
        for (const Json &g : report["groups"])
          out << g["name"].get<std::string>() << ": order " << g["order"] << ", socle order "
              << g["socle_order"] << ", semisimple "
              << (g["semisimple"]["verdict"].get<bool>() ? "yes" : "no") << "\n";
      }
      return exit_ok;
    }

    if (*verify) {
      suite_options.limits = limits;
      auto results = run_suite(suite, load_corpus(limits), suite_options);
      print_results(results, out);
      if (!json_path.empty())
        write_output(json_path, dump({{"format", report_format},
                                      {"suite", suite},
                                      {"max_order", suite_options.max_order},
                                      {"seed", suite_options.seed},
                                      {"results", results_json(results)}}));
      bool ok = std::all_of(results.begin(), results.end(),
                            [](const CheckResult &r) { return r.ok(); });
      return ok ? exit_ok : exit_violation;
    }

    if (*homs) {
      Environment env = load(file, limits);
      out << dump(hom_report(from, lookup(env, from), to, lookup(env, to), limits));
      return exit_ok;
    }

    if (*counter) {
      CounterexampleReport r = reproduce_counterexample(limits);
      if (json_flag)
        out << dump(counterexample_json(r));
      else
        print_counterexample(r, out);
      return r.reproduced() ? exit_ok : exit_violation;
    }

    out << corpus_text();
    return exit_ok;
  } catch (const ParseError &e) {
    return report_failure({exit_input, "parse", e.message(), e.where()}, json_errors, err);
  } catch (const SemanticError &e) {
    return report_failure({exit_input, "semantic", e.message(), e.where()}, json_errors, err);
  } catch (const InputError &e) {
    return report_failure({exit_input, "input", e.what(), std::nullopt}, json_errors, err);
  } catch (const PreconditionError &e) {
    return report_failure({exit_input, "precondition", e.what(), std::nullopt}, json_errors,
                          err);
  } catch (const InvalidGroup &e) {
    return report_failure({exit_input, "invalid-group", e.what(), std::nullopt}, json_errors,
                          err);
  } catch (const CapExceeded &e) {
    return report_failure({exit_cap, "cap", e.what(), std::nullopt}, json_errors, err);
  } catch (const InternalError &e) {
    return report_failure({exit_violation, "internal", e.what(), std::nullopt}, json_errors,
                          err);
  } catch (const std::exception &e) {
    return report_failure({exit_input, "io", e.what(), std::nullopt}, json_errors, err);
  }
}

} // namespace ogroup::frontend
