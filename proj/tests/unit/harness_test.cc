#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "vboe/adversary/servers.h"
#include "vboe/harness/experiment.h"
#include "vboe/harness/replay.h"
#include "vboe/mbqc/pattern_io.h"
#include "vboe/stats/bounds.h"
#include "vboe/trap/test_round.h"
#include "vboe/ubqc/ubqc.h"

namespace vboe::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class ConfigDir {
 public:
  ConfigDir() : dir_(fs::temp_directory_path() / ("vboe_harness_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
    std::ofstream(dir_ / "path3.json") << mbqc::pattern_to_json(mbqc::path_pattern(3, {1, 6, 0}));
  }
  ~ConfigDir() { fs::remove_all(dir_); }
  const fs::path& path() const { return dir_; }

 private:
  fs::path dir_;
};

const ConfigDir& dir() {
  static ConfigDir d;
  return d;
}

json base_config() {
  return json::parse(R"({
    "kind": "honest_acceptance",
    "pattern": "path3.json",
    "params": {"n_c": 20, "n_t": 20, "w": 0.1, "epsilon": 0.3},
    "trials": 10,
    "seed": 11
  })");
}

ExperimentConfig parse(const json& j) { return parse_config(j.dump(2), dir().path()); }

void expect_config_error(const json& j, const std::string& fragment) {
  try {
    parse(j);
    FAIL() << "expected ConfigError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ConfigTest, ParsesAndDefaultsK) {
  const auto c = parse(base_config());
  EXPECT_EQ(c.kind, ExperimentKind::HonestAcceptance);
  ASSERT_TRUE(c.pattern.has_value());
  EXPECT_EQ(c.params.k, 2u);
  EXPECT_EQ(c.trials, 10u);
  EXPECT_EQ(c.seed, 11u);
  EXPECT_EQ(c.seed_source, "config");
}

TEST(ConfigTest, CanonicalFormRoundTrips) {
  auto j = base_config();
  j["kind"] = "security_frequency";
  j["params"]["gamma1"] = 0.05;
  j["params"]["gamma2"] = 0.05;
  j["params"]["epsilon"] = 0.35;
  j["adversary"] = json::parse(R"({"action": "pauli_before", "paulis": {"2": "Y"}, "frame": "computational"})");
  j["attack_fractions"] = {0.0, 0.1};
  const auto c = parse(j);
  const auto again = parse(json::parse(config_to_json(c)));
  EXPECT_EQ(config_to_json(c), config_to_json(again));
  EXPECT_EQ(again.adversary->paulis.at(2), quantum::Pauli::Y);
  EXPECT_EQ(again.adversary->frame, adversary::PauliFrame::Computational);
}

TEST(ConfigTest, RejectsUnknownKeys) {
  auto j = base_config();
  j["sed"] = 3;
  expect_config_error(j, "unknown key \"sed\"");
  j = base_config();
  j["params"]["eps"] = 0.1;
  expect_config_error(j, "unknown key \"eps\" in params");
}

TEST(ConfigTest, BadJsonReportsLine) {
  try {
    parse_config("{\n  \"kind\": \"bound_tables\",\n  \"trials\" 3\n}", dir().path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ConfigTest, RejectsInvalidConfigs) {
  auto j = base_config();
  j["pattern"] = "missing.json";
  expect_config_error(j, "does not exist");

  j = base_config();
  j["trials"] = 0;
  expect_config_error(j, "trials");

  j = base_config();
  j["params"]["w"] = 0.2;  // kw = 0.4 >= epsilon
  expect_config_error(j, "params");

  j = base_config();
  j["params"]["k"] = 1;
  expect_config_error(j, "colours");

  j = base_config();
  j["kind"] = "estimate_everything";
  expect_config_error(j, "unknown experiment kind");

  j = base_config();
  j["adversary"] = json::parse(R"({"action": "flip_answers"})");
  expect_config_error(j, "honest_acceptance");

  j = base_config();
  j["kind"] = "real_vs_ideal";
  j["adversary"] = json::parse(R"({"action": "custom"})");
  expect_config_error(j, "custom");

  j = base_config();
  j["kind"] = "real_vs_ideal";
  j["adversary"] = json::parse(R"({"action": "pauli_before", "paulis": {"7": "Z"}})");
  expect_config_error(j, "adversary");

  j = base_config();
  j["kind"] = "security_frequency";
  j["params"]["epsilon"] = 0.35;
  j["params"]["gamma1"] = 0.05;
  j["params"]["gamma2"] = 0.05;
  j["adversary"] = json::parse(R"({"action": "pauli_before", "paulis": {"2": "Z"}, "count": 3})");
  j["attack_fractions"] = {0.1};
  expect_config_error(j, "attack_fractions");
}

TEST(ConfigTest, ValidateCatchesOverrides) {
  auto c = parse(base_config());
  c.trials = 0;
  EXPECT_THROW(validate_config(c), Error);
}

TEST(ExperimentTest, HonestAcceptanceNeverAborts) {
  const auto report = run_experiment(parse(base_config()));
  EXPECT_TRUE(report.passed());
  const auto j = json::parse(report.json);
  EXPECT_EQ(j["results"]["aborts"], 0);
  EXPECT_EQ(j["results"]["verdicts"].size(), 10u);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["seed_source"], "config");
}

TEST(ExperimentTest, ReportBytesAreReproducible) {
  auto j = base_config();
  j["kind"] = "real_vs_ideal";
  j["params"]["epsilon"] = 0.35;
  j["params"]["gamma1"] = 0.05;
  j["params"]["gamma2"] = 0.05;
  j["adversary"] = json::parse(R"({"action": "pauli_before", "paulis": {"1": "Z"}, "count": 4})");
  const auto c = parse(j);
  const auto a = run_experiment(c, 1);
  const auto b = run_experiment(c, 3);
  EXPECT_EQ(a.json, b.json);
  EXPECT_EQ(a.summary_csv, b.summary_csv);
  auto other = c;
  other.seed = 12;
  EXPECT_NE(run_experiment(other).json, a.json);
}

TEST(ExperimentTest, ErrorsCarryTrialIndex) {
  auto c = parse(base_config());
  c.kind = ExperimentKind::RealVsIdeal;
  adversary::DeviationSpec spec;
  spec.action = adversary::DeviationAction::Custom;
  spec.hook = [](Vertex, Angle, quantum::QuantumMemory&, quantum::QubitId, Rng&) {
    throw Error(ErrorCode::BadParams, "hook refused");
  };
  c.adversary = spec;
  c.params.epsilon = 0.35;
  c.params.gamma1 = 0.05;
  c.params.gamma2 = 0.05;
  try {
    run_experiment(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
    EXPECT_NE(std::string(e.what()).find("trial 0: hook refused"), std::string::npos) << e.what();
  }
}

TEST(ExperimentTest, BoundTablesAreMonotoneAndMatchTheBound) {
  const auto c = parse_config(R"({
    "kind": "bound_tables",
    "params": {"n_c": 1, "n_t": 1, "w": 0.005, "epsilon": 0.1, "k": 2, "gamma1": 0.05, "gamma2": 0.02},
    "bound_sizes": [20000, 1000, 10000],
    "trials": 1
  })", dir().path());
  const auto report = run_experiment(c);
  EXPECT_TRUE(report.passed());
  const auto rows = json::parse(report.json)["results"]["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["n_c"], 1000);
  EXPECT_EQ(rows[1]["n_c"], 10000);
  EXPECT_DOUBLE_EQ(rows[1]["total"].get<double>(), 0.27091093594964505);
  EXPECT_EQ(std::count(report.summary_csv.begin(), report.summary_csv.end(), '\n'), 4);
}

TEST(ExperimentTest, AttackDetectionSweepsAllSmallGraphs) {
  const auto c = parse_config(R"({
    "kind": "attack_detection",
    "params": {"n_c": 1, "n_t": 1, "w": 0.05, "epsilon": 0.5, "k": 4},
    "trials": 200,
    "seed": 3
  })", dir().path());
  const auto report = run_experiment(c);
  for (const auto& a : report.assertions) EXPECT_TRUE(a.passed) << a.name << ": " << a.detail;
  const auto j = json::parse(report.json)["results"];
  // Labelled connected graphs: 1, 1, 4 and 38 on 1..4 vertices.
  EXPECT_EQ(j["graphs"], 1 + 1 + 4 + 38);
  EXPECT_EQ(j["deviations"], 3 * (1 + 2 + 4 * 3 + 38 * 4));
}

TEST(ExperimentTest, ComputationalFrameMissesTheFloor) {
  auto j = base_config();
  j["kind"] = "attack_detection";
  j["adversary"] = json::parse(R"({"action": "pauli_before", "frame": "computational"})");
  j["trials"] = 2000;
  const auto report = run_experiment(parse(j));
  std::map<std::string, bool> passed;
  for (const auto& a : report.assertions) passed[a.name] = a.passed;
  EXPECT_FALSE(passed.at("exact_floor"));
  EXPECT_TRUE(passed.at("monte_carlo_matches_exact"));
  for (const auto& row : json::parse(report.json)["results"]["rows"]) {
    const double expected = row["pauli"] == "Z" ? 0.5 : 0.25;
    EXPECT_DOUBLE_EQ(row["exact_value"].get<double>(), expected) << row.dump();
  }
}

TEST(ExperimentTest, BlindnessAuditOnOnePattern) {
  auto j = base_config();
  j["kind"] = "blindness_audit";
  j["trials"] = 2;
  const auto report = run_experiment(parse(j));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(json::parse(report.json)["results"]["angle_pairs"], 2);
}

// --- replay ---

struct Recorded {
  mbqc::MeasurementPattern pattern = mbqc::path_pattern(3, {1, 6, 0});
  ubqc::RoundTranscript transcript;
};

Recorded computation_round(std::uint64_t seed) {
  Recorded r;
  Rng rng(seed);
  auto server = adversary::honest_server(r.pattern.graph(), seed + 1);
  r.transcript = ubqc::run_ubqc_round(r.pattern, *server, rng).transcript;
  return r;
}

Recorded test_round(std::uint64_t seed) {
  Recorded r;
  Rng rng(seed);
  auto server = adversary::honest_server(r.pattern.graph(), seed + 1);
  const auto plan = trap::build_test_round(r.pattern.graph(), trap::greedy_coloring(r.pattern.graph()), rng);
  r.transcript = trap::run_test_round(plan, r.pattern.graph(), *server, rng, r.pattern.order()).transcript;
  return r;
}

std::size_t count_kind(const ReplayResult& result, MismatchKind kind) {
  return static_cast<std::size_t>(std::count_if(result.mismatches.begin(), result.mismatches.end(),
                                                [&](const Mismatch& m) { return m.kind == kind; }));
}

TEST(ReplayTest, HonestTranscriptsHaveNoMismatches) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const auto& r : {computation_round(seed), test_round(seed)}) {
      const auto result = replay_transcript(ubqc::to_jsonl(r.transcript, r.pattern));
      EXPECT_TRUE(result.ok()) << seed << " " << result.mismatches.front().detail;
      EXPECT_NO_THROW(require_consistent(result));
    }
  }
}

TEST(ReplayTest, FlippedTrapAnswerGivesOneTrapMismatch) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = test_round(seed);
    const Vertex trap = r.transcript.plan->traps.front();
    r.transcript.b[trap] ^= 1;
    const auto result = replay_transcript(ubqc::to_jsonl(r.transcript, r.pattern));
    EXPECT_EQ(count_kind(result, MismatchKind::TrapEquation), 1u);
    EXPECT_EQ(count_kind(result, MismatchKind::Decode), 0u);
    ASSERT_FALSE(result.mismatches.empty());
    EXPECT_EQ(result.mismatches.front().vertex, trap);
    try {
      require_consistent(result);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MismatchFound);
    }
  }
}

TEST(ReplayTest, FlippedDummyAnswerIsNotAMismatch) {
  auto r = test_round(4);
  for (const auto& [v, d] : r.transcript.plan->dummy_bits) r.transcript.b[v] ^= 1;
  EXPECT_TRUE(replay_transcript(ubqc::to_jsonl(r.transcript, r.pattern)).ok());
}

TEST(ReplayTest, AlteredDeltaIsADecodeMismatch) {
  auto r = computation_round(9);
  r.transcript.delta[1] += Angle(2);
  const auto result = replay_transcript(ubqc::to_jsonl(r.transcript, r.pattern));
  ASSERT_EQ(result.mismatches.size(), 1u);
  EXPECT_EQ(result.mismatches[0].kind, MismatchKind::Decode);
  EXPECT_EQ(result.mismatches[0].vertex, 1);
}

TEST(ReplayTest, AlteredOutputIsADecodeMismatch) {
  auto r = computation_round(10);
  r.transcript.output[0] ^= 1;
  const auto result = replay_transcript(ubqc::to_jsonl(r.transcript, r.pattern));
  EXPECT_EQ(count_kind(result, MismatchKind::Decode), 1u);
}

TEST(ReplayTest, GarbageIsAParseError) {
  try {
    replay_transcript("{\"direction\": \"client\"}\nnot json\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

}  // namespace
}  // namespace vboe::harness
