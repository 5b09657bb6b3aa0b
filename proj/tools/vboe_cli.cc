// vboe: run experiments, replay transcripts, tabulate bounds, audit blindness.
//
// Exit codes: 0 all assertions pass, 1 an assertion failed or a replay found
// a mismatch, 2 config or runtime error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vboe/adversary/deviation.h"
#include "vboe/harness/experiment.h"
#include "vboe/harness/replay.h"
#include "vboe/mbqc/pattern_io.h"
#include "vboe/stats/bounds.h"
#include "vboe/trap/test_round.h"
#include "vboe/ubqc/ubqc.h"

namespace fs = std::filesystem;
using namespace vboe;

namespace {

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
  std::size_t threads = 1;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
  out << text;
}

// --seed beats VBOE_SEED beats the config file.
void apply_overrides(harness::ExperimentConfig& config, const Globals& g) {
  if (g.seed) {
    config.seed = *g.seed;
    config.seed_source = "flag";
  } else if (const char* env = std::getenv("VBOE_SEED")) {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, std::string("VBOE_SEED is not a 64-bit integer: ") + env);
    }
    config.seed_source = "env";
  }
  if (g.trials) config.trials = *g.trials;
  harness::validate_config(config);
}

int finish(const harness::ExperimentReport& report, const Globals& g) {
  if (g.out.empty()) {
    std::cout << report.json;
  } else {
    fs::create_directories(g.out);
    write_file(fs::path(g.out) / "report.json", report.json);
    write_file(fs::path(g.out) / "summary.csv", report.summary_csv);
    std::ostringstream timing;
    timing << "seconds " << report.seconds << "\nthreads " << g.threads << "\n";
    write_file(fs::path(g.out) / "timing.txt", timing.str());
  }
  for (const auto& a : report.assertions) {
    std::cerr << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << a.detail << "\n";
  }
  return report.passed() ? 0 : 1;
}

int run(const Globals& g) {
  if (g.config.empty()) throw Error(ErrorCode::ConfigError, "run needs --config");
  auto config = harness::load_config(g.config);
  apply_overrides(config, g);
  return finish(harness::run_experiment(config, g.threads), g);
}

int replay(const std::string& file) {
  const auto result = harness::replay_transcript(read_file(file));
  std::cout << result.round_kind << " round: " << result.mismatches.size() << " mismatch(es)\n";
  for (const auto& m : result.mismatches) {
    std::cout << "  " << harness::to_string(m.kind);
    if (m.vertex) std::cout << " at vertex " << *m.vertex;
    std::cout << ": " << m.detail << "\n";
  }
  return result.ok() ? 0 : 1;
}

int bounds(const Globals& g, protocol::ProtocolParams params, const std::vector<std::size_t>& sizes) {
  harness::ExperimentConfig config;
  if (!g.config.empty()) {
    config = harness::load_config(g.config);
    config.kind = harness::ExperimentKind::BoundTables;
    if (config.bound_sizes.empty()) config.bound_sizes = {config.params.n_c};
  } else {
    config.kind = harness::ExperimentKind::BoundTables;
    config.params = params;
    config.bound_sizes = sizes.empty() ? std::vector<std::size_t>{params.n_c} : sizes;
  }
  config.pattern.reset();
  apply_overrides(config, g);
  const auto report = harness::run_experiment(config, g.threads);
  if (g.out.empty()) {
    std::cout << report.summary_csv;
    for (const auto& a : report.assertions) {
      std::cerr << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << a.detail << "\n";
    }
    return report.passed() ? 0 : 1;
  }
  return finish(report, g);
}

int audit(const Globals& g, const std::string& pattern_file) {
  harness::ExperimentConfig config;
  if (!g.config.empty()) config = harness::load_config(g.config);
  config.kind = harness::ExperimentKind::BlindnessAudit;
  config.adversary.reset();
  if (!pattern_file.empty()) {
    config.pattern_file = pattern_file;
    config.pattern = mbqc::load_pattern(pattern_file);
  }
  if (g.config.empty() && !g.trials) config.trials = 3;
  apply_overrides(config, g);
  return finish(harness::run_experiment(config, g.threads), g);
}

// Records one honest (or answer-flipping) round as JSON lines.
int record(const Globals& g, const std::string& pattern_file, const std::string& kind, bool flip) {
  const auto pattern = mbqc::load_pattern(pattern_file);
  const std::uint64_t seed = g.seed.value_or(0);
  Rng rng(derive_seed(seed, {0}));
  auto server = flip ? adversary::answer_strategy_server(pattern.graph(), adversary::AnswerStrategy::FlipAnswers,
                                                         derive_seed(seed, {1}))
                     : adversary::honest_server(pattern.graph(), derive_seed(seed, {1}));
  if (kind == "computation") {
    std::cout << ubqc::to_jsonl(ubqc::run_ubqc_round(pattern, *server, rng).transcript, pattern);
  } else {
    const auto coloring = trap::greedy_coloring(pattern.graph());
    const auto plan = trap::build_test_round(pattern.graph(), coloring, rng);
    const auto result = trap::run_test_round(plan, pattern.graph(), *server, rng, pattern.order());
    std::cout << ubqc::to_jsonl(result.transcript, pattern);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifiable blind observable estimation workbench"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "Experiment config (JSON)");
  app.add_option("--seed", g.seed, "Master seed; overrides VBOE_SEED and the config");
  app.add_option("--trials", g.trials, "Number of trials; overrides the config")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output directory for report.json, summary.csv and timing.txt");
  app.add_option("--threads", g.threads, "Worker threads (0 = auto)");

  auto* run_cmd = app.add_subcommand("run", "Run the experiment described by --config");

  std::string transcript;
  auto* replay_cmd = app.add_subcommand("replay", "Re-check a recorded round transcript");
  replay_cmd->add_option("transcript", transcript, "JSON-lines transcript")->required();

  protocol::ProtocolParams params;
  std::vector<std::size_t> sizes;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate the security failure bound");
  bounds_cmd->add_option("--n-c", params.n_c, "Computation rounds");
  bounds_cmd->add_option("--n-t", params.n_t, "Test rounds");
  bounds_cmd->add_option("--w", params.w, "Tolerated failed-test fraction");
  bounds_cmd->add_option("--epsilon", params.epsilon, "Precision");
  bounds_cmd->add_option("--k", params.k, "Colour count");
  bounds_cmd->add_option("--gamma1", gamma1, "Slack gamma1");
  bounds_cmd->add_option("--gamma2", gamma2, "Slack gamma2");
  bounds_cmd->add_option("--sizes", sizes, "N_c = N_t values for a table");

  std::string audit_pattern;
  auto* audit_cmd = app.add_subcommand("audit", "Exact blindness audit (all patterns on <= 3 vertices by default)");
  audit_cmd->add_option("--pattern", audit_pattern, "Audit only this pattern");

  std::string record_pattern;
  std::string record_kind = "computation";
  bool record_flip = false;
  auto* record_cmd = app.add_subcommand("record", "Print the transcript of one round");
  record_cmd->add_option("--pattern", record_pattern, "Pattern file")->required();
  record_cmd->add_option("--kind", record_kind, "computation or test")
      ->check(CLI::IsMember({"computation", "test"}));
  record_cmd->add_flag("--flip", record_flip, "Server flips every answer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return run(g);
    if (*replay_cmd) return replay(transcript);
    if (*bounds_cmd) {
      params.gamma1 = gamma1;
      params.gamma2 = gamma2;
      return bounds(g, params, sizes);
    }
    if (*audit_cmd) return audit(g, audit_pattern);
    if (*record_cmd) return record(g, record_pattern, record_kind, record_flip);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
