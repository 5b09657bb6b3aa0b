#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vboe/adversary/servers.h"

namespace vboe::adversary {

enum class DeviationAction { PauliBefore, FlipAnswers, RandomAnswers, Custom };

const char* to_string(DeviationAction action);
DeviationAction parse_deviation_action(const std::string& name);

// Which rounds a server attacks and what it does in them. Rounds are chosen
// from indices alone: either an explicit list, or a count m drawn uniformly
// without replacement. With neither set, every round is attacked.
struct DeviationSpec {
  DeviationAction action = DeviationAction::PauliBefore;
  std::optional<std::vector<std::size_t>> rounds;
  std::optional<std::size_t> count;
  std::map<Vertex, quantum::Pauli> paulis;
  PauliFrame frame = PauliFrame::Measurement;
  CustomHook hook;
};

// Throws BadParams (m > N, round index out of range, both forms given,
// missing hook) or UnknownVertex (Pauli on a vertex outside the graph).
void validate_deviation(const DeviationSpec& spec, const mbqc::Graph& graph, std::size_t total_rounds);

std::vector<bool> choose_attacked_rounds(const DeviationSpec& spec, std::size_t total_rounds, Rng& rng);

// Honest server in unattacked rounds, the deviation's strategy in attacked ones.
ubqc::ServerFactory make_server_factory(const mbqc::Graph& graph, const std::optional<DeviationSpec>& spec,
                                        std::vector<bool> attacked);
ubqc::ServerFactory honest_factory(const mbqc::Graph& graph);

}  // namespace vboe::adversary
