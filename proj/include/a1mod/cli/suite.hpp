#pragma once

#include "a1mod/cli/io_json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace a1mod::cli {

// Knobs for the property suites; the seed fully determines every corpus.
struct SuiteConfig {
  uint64_t seed = 1;
  int max_dim = 5;
  int max_deg = 5;
  int trunc_k = 8;
  std::vector<std::string> suites;  // empty = all

  void validate() const;
};

extern const std::vector<std::string> kAllSuites;

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  Json details;  // inputs echoed / canonical forms; no wall-clock data
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass = false;

  Json to_json(const SuiteConfig& cfg) const;  // canonical, byte-stable
  std::string text_mirror() const;             // human-readable; may carry timings
};

Report run_suite(const SuiteConfig& cfg);

}  // namespace a1mod::cli
