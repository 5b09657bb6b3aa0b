#include "vboe/protocol/vboe.h"

#include <cmath>
#include <numeric>

#include "json.hpp"
#include "vboe/parallel.h"
#include "vboe/ubqc/ubqc.h"

namespace vboe::protocol {

RoundSchedule sample_schedule(std::size_t n_c, std::size_t n_t, Rng& rng) {
  if (n_c < 1 || n_t < 1) throw Error(ErrorCode::InvalidParams, "schedule needs N_c, N_t >= 1");
  const std::size_t n = n_c + n_t;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  RoundSchedule s;
  s.kinds.assign(n, RoundKind::Computation);
  // Partial Fisher-Yates: the first N_t slots become the test positions.
  for (std::size_t i = 0; i < n_t; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
    s.kinds[idx[i]] = RoundKind::Test;
  }
  for (std::size_t i = 0; i < n; ++i) {
    (s.kinds[i] == RoundKind::Test ? s.test : s.computation).push_back(i);
  }
  return s;
}

bool accepts(const ProtocolParams& params, std::size_t failed_tests) {
  return static_cast<double>(failed_tests) < params.w * static_cast<double>(params.n_t);
}

namespace {

void require_valid(const ProtocolParams& params) {
  const auto violations = validate_params(params);
  if (!violations.empty()) throw Error(ErrorCode::InvalidParams, violations.front());
}

}  // namespace

Verdict run_vboe(const mbqc::MeasurementPattern& pattern, const ProtocolParams& params,
                 const ubqc::ServerFactory& servers, std::uint64_t seed, const std::vector<bool>& attacked,
                 std::size_t threads) {
  require_valid(params);
  if (pattern.outputs().size() != 1) {
    throw Error(ErrorCode::InvalidPattern, "observable estimation needs exactly one output vertex");
  }
  const auto& graph = pattern.graph();
  const trap::Coloring coloring = trap::greedy_coloring(graph);
  if (params.k < coloring.size()) {
    throw Error(ErrorCode::InvalidParams, "k = " + std::to_string(params.k) + " is below the " +
                                              std::to_string(coloring.size()) + " colours of the graph");
  }

  Rng schedule_rng(derive_seed(seed, {0}));
  const RoundSchedule schedule = sample_schedule(params.n_c, params.n_t, schedule_rng);
  const std::size_t n = schedule.kinds.size();

  Verdict verdict;
  verdict.params = params;
  verdict.seed = seed;
  verdict.rounds.resize(n);
  parallel_for(n, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, {1, i}));
    auto server = servers(i, derive_seed(seed, {2, i}));
    RoundSummary& r = verdict.rounds[i];
    r.kind = schedule.kinds[i];
    r.attacked = i < attacked.size() && attacked[i];
    if (r.kind == RoundKind::Computation) {
      r.output = ubqc::run_ubqc_round(pattern, *server, rng).output.front();
    } else {
      const auto plan = trap::build_test_round(graph, coloring, rng);
      const auto result = trap::run_test_round(plan, graph, *server, rng, pattern.order());
      r.passed = result.passed;
      r.failed_traps = result.failed_traps;
    }
  });

  std::size_t ones = 0;
  for (const auto& r : verdict.rounds) {
    if (r.kind == RoundKind::Computation) {
      ones += r.output;
      verdict.attacked_computation += r.attacked;
    } else {
      verdict.failed_tests += r.passed ? 0 : 1;
      verdict.attacked_test += r.attacked;
    }
  }
  verdict.accepted = accepts(params, verdict.failed_tests);
  if (verdict.accepted) verdict.estimate = static_cast<double>(ones) / static_cast<double>(params.n_c);
  return verdict;
}

ServerProgram protocol_program(const mbqc::MeasurementPattern& pattern, const ProtocolParams& params,
                               ubqc::ServerFactory servers, std::vector<bool> attacked) {
  return [pattern, params, servers = std::move(servers),
          attacked = std::move(attacked)](std::uint64_t seed) -> std::optional<double> {
    const Verdict v = run_vboe(pattern, params, servers, seed, attacked);
    if (!v.accepted) return std::nullopt;
    return v.estimate;
  };
}

Verdict sdoe_ideal(const mbqc::MeasurementPattern& pattern, const ProtocolParams& params,
                   const std::optional<ServerProgram>& deviation, std::uint64_t seed) {
  require_valid(params);
  const double p = mbqc::output_one_probability(pattern);
  Verdict verdict;
  verdict.params = params;
  verdict.seed = seed;
  std::optional<double> s;
  if (deviation) {
    s = (*deviation)(seed);
  } else {
    Rng rng(derive_seed(seed, {3}));
    std::size_t ones = 0;
    for (std::size_t i = 0; i < params.n_c; ++i) ones += rng.bernoulli(p) ? 1 : 0;
    s = static_cast<double>(ones) / static_cast<double>(params.n_c);
  }
  verdict.accepted = s.has_value() && std::abs(*s - p) < params.epsilon;
  if (verdict.accepted) verdict.estimate = *s;
  return verdict;
}

trap::RvbqcVerdict sdqc_ideal(const mbqc::MeasurementPattern& pattern, Bit d, Rng& rng) {
  if (d & 1) return {};
  return {true, ubqc::bdqc_ideal(pattern, rng)};
}

std::string verdict_to_json(const Verdict& v) {
  using nlohmann::json;
  json j;
  j["outcome"] = v.accepted ? "accept" : "abort";
  j["estimate"] = v.accepted ? json(v.estimate) : json(nullptr);
  j["failed_tests"] = v.failed_tests;
  j["attacked_computation"] = v.attacked_computation;
  j["attacked_test"] = v.attacked_test;
  json params{{"n_c", v.params.n_c}, {"n_t", v.params.n_t}, {"w", v.params.w},
              {"epsilon", v.params.epsilon}, {"k", v.params.k}};
  if (v.params.gamma1) params["gamma1"] = *v.params.gamma1;
  if (v.params.gamma2) params["gamma2"] = *v.params.gamma2;
  j["params"] = params;
  j["seed"] = v.seed;
  json rounds = json::array();
  for (const auto& r : v.rounds) {
    json round{{"kind", ubqc::to_string(r.kind)}, {"attacked", r.attacked}};
    if (r.kind == RoundKind::Computation) {
      round["output"] = r.output;
    } else {
      round["passed"] = r.passed;
      round["failed_traps"] = r.failed_traps;
    }
    rounds.push_back(round);
  }
  j["rounds"] = rounds;
  return j.dump(2);
}

}  // namespace vboe::protocol
