#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "wreath/hyperoct.hpp"
#include "wreath/words.hpp"

namespace wreath {

struct SuiteParams {
  int degree = -1;   // -1 picks the suite default
  int colours = 2;
  int alphabet = -1; // -1 picks the suite default
  std::string group = "Z2";
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> params;
  long checks = 0;
  std::vector<std::string> failures; // serialized counterexamples, sorted

  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

std::vector<std::string> suite_names();

/// Run a registered suite; throws Error for unknown names.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

} // namespace wreath
