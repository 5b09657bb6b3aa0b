#include "vboe/harness/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vboe/mbqc/pattern_io.h"
#include "vboe/trap/coloring.h"

namespace vboe::harness {

using nlohmann::json;

namespace {

constexpr ExperimentKind kKinds[] = {ExperimentKind::HonestAcceptance, ExperimentKind::AttackDetection,
                                     ExperimentKind::SecurityFrequency, ExperimentKind::BlindnessAudit,
                                     ExperimentKind::RealVsIdeal,       ExperimentKind::BoundTables};

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ConfigError, message); }

void check_keys(const json& object, const std::string& where, const std::set<std::string>& allowed) {
  if (!object.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) fail("unknown key \"" + key + "\" in " + where);
  }
}

template <typename T>
T get(const json& object, const std::string& key, const std::string& where) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    fail(where + "." + key + " is missing or has the wrong type");
  }
}

protocol::ProtocolParams parse_params(const json& j) {
  check_keys(j, "params", {"n_c", "n_t", "w", "epsilon", "k", "gamma1", "gamma2"});
  protocol::ProtocolParams p;
  p.n_c = get<std::size_t>(j, "n_c", "params");
  p.n_t = get<std::size_t>(j, "n_t", "params");
  p.w = get<double>(j, "w", "params");
  p.epsilon = get<double>(j, "epsilon", "params");
  p.k = j.contains("k") ? get<std::size_t>(j, "k", "params") : 0;
  if (j.contains("gamma1")) p.gamma1 = get<double>(j, "gamma1", "params");
  if (j.contains("gamma2")) p.gamma2 = get<double>(j, "gamma2", "params");
  return p;
}

adversary::DeviationSpec parse_adversary(const json& j) {
  check_keys(j, "adversary", {"action", "paulis", "frame", "count", "rounds"});
  adversary::DeviationSpec spec;
  try {
    spec.action = adversary::parse_deviation_action(get<std::string>(j, "action", "adversary"));
    if (j.contains("frame")) spec.frame = adversary::parse_pauli_frame(get<std::string>(j, "frame", "adversary"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    fail(std::string("adversary: ") + e.what());
  }
  if (spec.action == adversary::DeviationAction::Custom) fail("custom deviations cannot be configured from a file");
  if (j.contains("count")) spec.count = get<std::size_t>(j, "count", "adversary");
  if (j.contains("rounds")) spec.rounds = get<std::vector<std::size_t>>(j, "rounds", "adversary");
  if (j.contains("paulis")) {
    const json& paulis = j.at("paulis");
    if (!paulis.is_object()) fail("adversary.paulis must map vertex ids to \"X\", \"Y\" or \"Z\"");
    for (const auto& [key, value] : paulis.items()) {
      Vertex v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(key, &used);
        if (used != key.size() || v < 0) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("adversary.paulis key \"" + key + "\" is not a vertex id");
      }
      if (!value.is_string() || value.get<std::string>().size() != 1) {
        fail("adversary.paulis[" + key + "] must be one of \"I\", \"X\", \"Y\", \"Z\"");
      }
      try {
        spec.paulis[v] = quantum::parse_pauli(value.get<std::string>()[0]);
      } catch (const Error& e) {
        fail(std::string("adversary.paulis: ") + e.what());
      }
    }
  }
  return spec;
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::HonestAcceptance: return "honest_acceptance";
    case ExperimentKind::AttackDetection: return "attack_detection";
    case ExperimentKind::SecurityFrequency: return "security_frequency";
    case ExperimentKind::BlindnessAudit: return "blindness_audit";
    case ExperimentKind::RealVsIdeal: return "real_vs_ideal";
    case ExperimentKind::BoundTables: return "bound_tables";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (auto k : kKinds) {
    if (name == to_string(k)) return k;
  }
  fail("unknown experiment kind \"" + name + "\"");
}

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("line " + std::to_string(mbqc::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  check_keys(doc, "config",
             {"kind", "pattern", "params", "adversary", "attack_fractions", "bound_sizes", "trials", "seed"});
  ExperimentConfig c;
  c.kind = parse_experiment_kind(get<std::string>(doc, "kind", "config"));
  if (doc.contains("pattern")) {
    c.pattern_file = get<std::string>(doc, "pattern", "config");
    const auto path = std::filesystem::path(c.pattern_file).is_absolute() ? std::filesystem::path(c.pattern_file)
                                                                         : base_dir / c.pattern_file;
    if (!std::filesystem::exists(path)) fail("pattern file " + path.string() + " does not exist");
    try {
      c.pattern = mbqc::load_pattern(path);
    } catch (const Error& e) {
      fail(c.pattern_file + ": " + e.what());
    }
  }
  if (!doc.contains("params")) fail("config.params is missing");
  c.params = parse_params(doc.at("params"));
  if (doc.contains("adversary") && !doc.at("adversary").is_null()) c.adversary = parse_adversary(doc.at("adversary"));
  if (doc.contains("attack_fractions")) c.attack_fractions = get<std::vector<double>>(doc, "attack_fractions", "config");
  if (doc.contains("bound_sizes")) c.bound_sizes = get<std::vector<std::size_t>>(doc, "bound_sizes", "config");
  c.trials = get<std::size_t>(doc, "trials", "config");
  c.seed = doc.contains("seed") ? get<std::uint64_t>(doc, "seed", "config") : 0;

  if (c.params.k == 0) {
    if (!c.pattern) fail("params.k is required without a pattern");
    c.params.k = trap::greedy_coloring(c.pattern->graph()).size();
  }
  validate_config(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path());
}

void validate_config(const ExperimentConfig& c) {
  if (c.trials < 1) fail("trials must be at least 1");
  const bool pattern_optional = c.kind == ExperimentKind::BoundTables || c.kind == ExperimentKind::AttackDetection ||
                                c.kind == ExperimentKind::BlindnessAudit;
  if (!pattern_optional && !c.pattern) fail(std::string(to_string(c.kind)) + " needs a pattern");
  const auto violations = protocol::validate_params(c.params);
  if (!violations.empty()) fail("params: " + violations.front());
  if (c.pattern) {
    const std::size_t colours = trap::greedy_coloring(c.pattern->graph()).size();
    if (c.params.k < colours) {
      fail("params.k = " + std::to_string(c.params.k) + " is below the " + std::to_string(colours) +
           " colours of the pattern's graph");
    }
  }
  const std::size_t rounds = c.params.n_c + c.params.n_t;
  if (c.adversary && c.kind != ExperimentKind::AttackDetection &&
      c.adversary->action == adversary::DeviationAction::PauliBefore && c.adversary->paulis.empty()) {
    fail("pauli_before needs a non-empty adversary.paulis map");
  }
  if (c.adversary && c.pattern) {
    try {
      adversary::validate_deviation(*c.adversary, c.pattern->graph(), rounds);
    } catch (const Error& e) {
      fail(std::string("adversary: ") + e.what());
    }
  }
  switch (c.kind) {
    case ExperimentKind::SecurityFrequency:
      if (!c.adversary) fail("security_frequency needs an adversary");
      if (c.adversary->count || c.adversary->rounds) {
        fail("security_frequency sets the attacked rounds from attack_fractions; drop adversary.count/rounds");
      }
      if (c.attack_fractions.empty()) fail("security_frequency needs attack_fractions");
      for (double f : c.attack_fractions) {
        if (!(f >= 0.0 && f <= 1.0)) fail("attack fractions must lie in [0, 1]");
      }
      if (!c.params.gamma1 || !c.params.gamma2) fail("security_frequency needs params.gamma1 and params.gamma2");
      break;
    case ExperimentKind::BoundTables:
      if (c.bound_sizes.empty()) fail("bound_tables needs bound_sizes");
      if (!c.params.gamma1 || !c.params.gamma2) fail("bound_tables needs params.gamma1 and params.gamma2");
      for (std::size_t n : c.bound_sizes) {
        if (n < 1) fail("bound sizes must be at least 1");
      }
      break;
    case ExperimentKind::HonestAcceptance:
      if (c.adversary) fail("honest_acceptance runs against the honest server; drop the adversary");
      break;
    case ExperimentKind::AttackDetection:
      if (c.adversary && c.adversary->action != adversary::DeviationAction::PauliBefore) {
        fail("attack_detection sweeps Pauli deviations; only adversary.frame is used");
      }
      break;
    case ExperimentKind::BlindnessAudit:
      if (c.pattern && c.pattern->graph().vertices().size() > 3) fail("blindness_audit enumerates patterns of at most 3 vertices");
      break;
    case ExperimentKind::RealVsIdeal:
      if (c.adversary && c.adversary->action == adversary::DeviationAction::PauliBefore && !c.params.gamma1) {
        fail("real_vs_ideal with an adversary needs params.gamma1 and params.gamma2 for its bound");
      }
      break;
    default:
      break;
  }
  if (c.pattern && c.kind != ExperimentKind::BlindnessAudit && c.kind != ExperimentKind::AttackDetection &&
      c.pattern->outputs().size() != 1) {
    fail(std::string(to_string(c.kind)) + " needs a pattern with exactly one output");
  }
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["kind"] = to_string(c.kind);
  if (c.pattern) j["pattern"] = c.pattern_file;
  json params{{"n_c", c.params.n_c}, {"n_t", c.params.n_t}, {"w", c.params.w},
              {"epsilon", c.params.epsilon}, {"k", c.params.k}};
  if (c.params.gamma1) params["gamma1"] = *c.params.gamma1;
  if (c.params.gamma2) params["gamma2"] = *c.params.gamma2;
  j["params"] = params;
  if (c.adversary) {
    json a{{"action", adversary::to_string(c.adversary->action)}, {"frame", adversary::to_string(c.adversary->frame)}};
    json paulis = json::object();
    for (const auto& [v, p] : c.adversary->paulis) paulis[std::to_string(v)] = quantum::to_string(p);
    a["paulis"] = paulis;
    if (c.adversary->count) a["count"] = *c.adversary->count;
    if (c.adversary->rounds) a["rounds"] = *c.adversary->rounds;
    j["adversary"] = a;
  } else {
    j["adversary"] = nullptr;
  }
  if (!c.attack_fractions.empty()) j["attack_fractions"] = c.attack_fractions;
  if (!c.bound_sizes.empty()) j["bound_sizes"] = c.bound_sizes;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  return j.dump(2);
}

}  // namespace vboe::harness
