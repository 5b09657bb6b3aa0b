#include "vboe/adversary/deviation.h"

#include <algorithm>
#include <numeric>

namespace vboe::adversary {

const char* to_string(DeviationAction action) {
  switch (action) {
    case DeviationAction::PauliBefore: return "pauli_before";
    case DeviationAction::FlipAnswers: return "flip_answers";
    case DeviationAction::RandomAnswers: return "random_answers";
    case DeviationAction::Custom: return "custom";
  }
  return "?";
}

DeviationAction parse_deviation_action(const std::string& name) {
  for (auto a : {DeviationAction::PauliBefore, DeviationAction::FlipAnswers, DeviationAction::RandomAnswers,
                 DeviationAction::Custom}) {
    if (name == to_string(a)) return a;
  }
  throw Error(ErrorCode::BadParams, "unknown deviation action " + name);
}

void validate_deviation(const DeviationSpec& spec, const mbqc::Graph& graph, std::size_t total_rounds) {
  if (spec.rounds && spec.count) throw Error(ErrorCode::BadParams, "give either rounds or count, not both");
  if (spec.count && *spec.count > total_rounds) {
    throw Error(ErrorCode::BadParams, "attacked count " + std::to_string(*spec.count) + " exceeds " +
                                          std::to_string(total_rounds) + " rounds");
  }
  if (spec.rounds) {
    for (std::size_t r : *spec.rounds) {
      if (r >= total_rounds) throw Error(ErrorCode::BadParams, "attacked round " + std::to_string(r) + " out of range");
    }
  }
  for (const auto& [v, p] : spec.paulis) {
    if (!graph.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "Pauli on unknown vertex " + std::to_string(v));
  }
  if (spec.action == DeviationAction::Custom && !spec.hook) {
    throw Error(ErrorCode::BadParams, "custom deviation needs a hook");
  }
}

std::vector<bool> choose_attacked_rounds(const DeviationSpec& spec, std::size_t total_rounds, Rng& rng) {
  std::vector<bool> attacked(total_rounds, false);
  if (spec.rounds) {
    for (std::size_t r : *spec.rounds) attacked.at(r) = true;
  } else if (spec.count) {
    // Partial Fisher-Yates over the indices.
    std::vector<std::size_t> idx(total_rounds);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < *spec.count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(total_rounds - i));
      std::swap(idx[i], idx[j]);
      attacked[idx[i]] = true;
    }
  } else {
    attacked.assign(total_rounds, true);
  }
  return attacked;
}

ubqc::ServerFactory make_server_factory(const mbqc::Graph& graph, const std::optional<DeviationSpec>& spec,
                                        std::vector<bool> attacked) {
  return [graph, spec, attacked = std::move(attacked)](std::size_t round,
                                                       std::uint64_t seed) -> std::unique_ptr<ubqc::Server> {
    if (!spec || round >= attacked.size() || !attacked[round]) return honest_server(graph, seed);
    switch (spec->action) {
      case DeviationAction::PauliBefore: return pauli_attack_server(graph, spec->paulis, seed, spec->frame);
      case DeviationAction::FlipAnswers: return answer_strategy_server(graph, AnswerStrategy::FlipAnswers, seed);
      case DeviationAction::RandomAnswers:
        return answer_strategy_server(graph, AnswerStrategy::RandomAnswers, seed);
      case DeviationAction::Custom: return std::make_unique<CustomServer>(graph, spec->hook, seed);
    }
    return honest_server(graph, seed);
  };
}

ubqc::ServerFactory honest_factory(const mbqc::Graph& graph) {
  return make_server_factory(graph, std::nullopt, {});
}

}  // namespace vboe::adversary
