#pragma once
// Randomized property suites over the expression, normal-form and
// evaluation layers. Deterministic for a fixed seed; every check is exact.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace grlie {

struct SelftestOptions {
  std::uint64_t seed = 20260825;
  int instances = 1000;
  int max_n = 6;
};

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;
};

struct SelftestResult {
  std::vector<SuiteResult> suites;
  bool pass() const;
};

/// Runs all suites; log (if given) receives one line per suite.
/// Suites: parse/print round-trip, anticommutativity, Jacobi, the four-term
/// bracket identity, evaluation linearity, and normal-form evaluation
/// against direct tree evaluation.
SelftestResult run_selftest(const SelftestOptions& opt, std::ostream* log = nullptr);

}  // namespace grlie
