#pragma once

#include <string>
#include <vector>

#include "vboe/harness/config.h"

namespace vboe::harness {

// A check embedded in a report. Any failed assertion fails the run.
struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  // report.json contents. Depends only on the config (including its seed),
  // never on thread count or timing.
  std::string json;
  // summary.csv contents: one header line, then one row per aggregate.
  std::string summary_csv;
  std::vector<Assertion> assertions;
  double seconds = 0.0;  // wall clock, kept out of `json`

  bool passed() const;
};

// Dispatches on the experiment kind. Trial t uses seeds derived from
// (config.seed, t); trials run on `threads` workers (0 = auto) and are
// reduced in trial order. Throws ConfigError for an invalid config and
// rethrows operation errors with the trial index prepended.
ExperimentReport run_experiment(const ExperimentConfig& config, std::size_t threads = 1);

}  // namespace vboe::harness
