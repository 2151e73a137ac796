#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "widthkit/errors.hpp"

namespace widthkit {
namespace report {

struct UnknownSuite : Error {
  using Error::Error;
};

struct SuiteConfig {
  std::string suite = "all";
  int n = 1;                      // lattice scale parameter
  std::uint64_t seed = 20240817;  // base seed for every randomized check
  double tol = 1e-9;              // tolerance for floating-point zero tests
};

// One verification record: a measured quantity against its expectation.
// Boolean checks use 1/0 with tolerance 0; count checks use exact counts.
struct CheckRecord {
  std::string id;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string claim;   // what property the check asserts
  std::string detail;  // free-form context: counts, histograms, values
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckRecord> checks;  // sorted by id
  bool overall_pass = false;
  double runtime_seconds = 0.0;
};

// Names of the individual suites, in canonical execution order ("all" runs
// them all and is not listed).
const std::vector<std::string>& suite_names();

// Executes the named suite (or every suite for "all").  Deterministic given
// the config.  Unknown suite names throw UnknownSuite.
Report run_suite(const SuiteConfig& config);

// Serializations are byte-stable for a fixed report; the runtime field is
// the one run-dependent value, so determinism comparisons drop it.
std::string to_json(const Report& r, bool include_runtime = true);
std::string to_tsv(const Report& r, bool include_runtime = true);

}  // namespace report
}  // namespace widthkit
