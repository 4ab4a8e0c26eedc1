#pragma once

// Verification suites behind `pfshuffle verify`. Each suite compares two
// independent routes to the same polynomials and stops at the first mismatch.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pfshuffle/enumerator.hpp"

namespace pfshuffle::cli {

struct SuiteResult {
  std::string suite;
  int max_n = 0;
  std::size_t checks = 0;
  std::vector<std::string> notes;
  /// Machine-readable JSON object describing the first failure.
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

struct SuiteInfo {
  const char* name;
  int max_n_limit;  // largest accepted --max-n
  const char* description;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);

/// Runs one suite. The caller validates the name and the bound.
SuiteResult run_suite(const std::string& name, int max_n, const EnumOptions& options);

}  // namespace pfshuffle::cli
