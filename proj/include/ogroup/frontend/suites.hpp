#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogroup/frontend/corpus.hpp"
#include "ogroup/limits.hpp"

namespace ogroup::frontend {

/// Outcome of one named check within a suite.
struct CheckResult {
  std::string suite;
  std::string check;
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// Instances abandoned because a cap was exceeded.
  std::size_t skipped = 0;
  /// The first few violation messages.
  std::vector<std::string> failures;

  bool ok() const { return violations == 0; }
};

struct SuiteOptions {
  /// Corpus members (and products) above this order are left out.
  std::size_t max_order = 24;
  unsigned jobs = 1;
  std::uint32_t seed = 1;
  Limits limits;
};

/// Suite names accepted by run_suite, besides "all".
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Results are in a fixed order
/// regardless of the number of jobs. PreconditionError for an unknown name.
std::vector<CheckResult> run_suite(const std::string &name,
                                   const std::vector<CorpusEntry> &corpus,
                                   const SuiteOptions &options);

/// The symmetric group of degree 3 (no operators) and its square.
struct CounterexampleReport {
  std::size_t socle_order = 0;
  bool socle_is_alternating = false;
  std::size_t product_socle_order = 0;
  bool product_socle_is_square = false;
  /// The diagonal copy of the alternating subgroup, as a subgroup of the
  /// socle of the square, is a simple normal operator subgroup there.
  bool diagonal_simple_normal_in_socle = false;
  bool diagonal_normal_in_product = true;
  std::vector<Element> diagonal;
  std::vector<Element> product_socle;

  bool reproduced() const {
    return socle_order == 3 && socle_is_alternating && product_socle_order == 9 &&
           product_socle_is_square && diagonal_simple_normal_in_socle &&
           !diagonal_normal_in_product;
  }
};

/// Uses a lattice cap of at least 36 regardless of `limits`.
CounterexampleReport reproduce_counterexample(const Limits &limits = {});

} // namespace ogroup::frontend
