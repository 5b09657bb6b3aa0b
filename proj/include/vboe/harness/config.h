#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vboe/adversary/deviation.h"
#include "vboe/mbqc/pattern.h"
#include "vboe/protocol/params.h"

namespace vboe::harness {

enum class ExperimentKind {
  HonestAcceptance,
  AttackDetection,
  SecurityFrequency,
  BlindnessAudit,
  RealVsIdeal,
  BoundTables,
};

const char* to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

// Experiment description file:
//
//   {
//     "kind": "security_frequency",
//     "pattern": "../patterns/path3.json",        // relative to this file
//     "params": {"n_c": 500, "n_t": 500, "w": 0.02, "epsilon": 0.25,
//                "k": 2, "gamma1": 0.1, "gamma2": 0.1},
//     "adversary": {"action": "pauli_before", "paulis": {"2": "Z"},
//                   "frame": "measurement", "count": 10},
//     "attack_fractions": [0, 0.01, 0.05, 0.2],
//     "bound_sizes": [1000, 2000, 4000],
//     "trials": 2000,
//     "seed": 42
//   }
//
// "k" defaults to the colour count of the pattern's graph; "adversary" may
// be null or absent for an honest server. attack_detection without a pattern
// sweeps every connected graph on up to 4 vertices; blindness_audit without
// one covers every pattern on up to 3 vertices. "attack_fractions" applies to
// security_frequency, which sets the attacked count itself; "bound_sizes"
// (N_c = N_t values) to bound_tables. Unknown keys are rejected.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::HonestAcceptance;
  std::string pattern_file;  // as written in the config
  std::optional<mbqc::MeasurementPattern> pattern;
  protocol::ProtocolParams params;
  std::optional<adversary::DeviationSpec> adversary;
  std::vector<double> attack_fractions;
  std::vector<std::size_t> bound_sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  // Where `seed` came from: "config", "env" or "flag". Echoed in the report.
  std::string seed_source = "config";
};

// Throws ConfigError. `base_dir` resolves the pattern path.
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

// Re-checks the invariants after command-line overrides. Throws ConfigError.
void validate_config(const ExperimentConfig& config);

// Canonical JSON form (the pattern is echoed by path only).
std::string config_to_json(const ExperimentConfig& config);

}  // namespace vboe::harness
