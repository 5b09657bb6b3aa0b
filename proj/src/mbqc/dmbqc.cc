#include "vboe/mbqc/dmbqc.h"

#include <algorithm>
#include <cmath>

namespace vboe::mbqc {

using quantum::QuantumMemory;
using quantum::QubitId;
using quantum::StateVector;

std::size_t output_index(const OutputBits& bits) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) index |= std::size_t{bits[i] & 1u} << i;
  return index;
}

StateVector plus_input(const MeasurementPattern& pattern) {
  StateVector s(0);
  for (std::size_t i = 0; i < pattern.inputs().size(); ++i) {
    s = s.tensor(quantum::prepare_qubit(quantum::QubitPreparation::plus(Angle(0))));
  }
  return s;
}

std::map<Vertex, QubitId> build_graph_state(const MeasurementPattern& pattern,
                                            const StateVector& input_state, QuantumMemory& memory) {
  if (input_state.num_qubits() != pattern.inputs().size()) {
    throw Error(ErrorCode::DimensionMismatch, "input state must have one qubit per input vertex");
  }
  std::map<Vertex, QubitId> ids;
  const auto input_ids = memory.allocate(input_state);
  for (std::size_t i = 0; i < input_ids.size(); ++i) ids[pattern.inputs()[i]] = input_ids[i];
  const StateVector plus = quantum::prepare_qubit(quantum::QubitPreparation::plus(Angle(0)));
  for (Vertex v : pattern.graph().vertices()) {
    if (!pattern.is_input(v)) ids[v] = memory.allocate_qubit(plus);
  }
  for (const auto& [a, b] : pattern.graph().edges()) memory.apply_cz(ids.at(a), ids.at(b));
  return ids;
}

OutputBits run_dmbqc(const MeasurementPattern& pattern, const StateVector& input_state, Rng& rng) {
  QuantumMemory memory;
  const auto ids = build_graph_state(pattern, input_state, memory);
  std::map<Vertex, Bit> outcomes;
  for (Vertex v : pattern.order()) {
    const Angle angle = adapted_angle(pattern, v, outcomes);
    outcomes[v] = memory.measure_rotated(ids.at(v), angle, rng);
  }
  OutputBits out;
  for (Vertex o : pattern.outputs()) out.push_back(outcomes.at(o));
  return out;
}

namespace {

// Exact joint distribution of rotated measurements on the listed qubits,
// which must be all qubits of `state`. Entry i of `targets` becomes bit i of
// the outcome index.
OutputDistribution measure_all(const StateVector& state,
                               const std::vector<std::pair<std::size_t, Angle>>& targets) {
  OutputDistribution dist(std::size_t{1} << targets.size(), 0.0);
  // Measure from the highest register position down so lower positions stay put.
  std::vector<std::size_t> by_position(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) by_position[i] = i;
  std::sort(by_position.begin(), by_position.end(),
            [&](std::size_t a, std::size_t b) { return targets[a].first > targets[b].first; });

  struct Frame {
    std::size_t depth;
    std::size_t index;
    double probability;
    StateVector state;
  };
  std::vector<Frame> stack{{0, 0, 1.0, state}};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (frame.depth == targets.size()) {
      dist[frame.index] += frame.probability;
      continue;
    }
    const std::size_t t = by_position[frame.depth];
    for (Bit b : {Bit{0}, Bit{1}}) {
      auto proj = frame.state.project_rotated(targets[t].first, targets[t].second, b);
      if (!proj.state) continue;
      stack.push_back({frame.depth + 1, frame.index | (std::size_t{b} << t),
                       frame.probability * proj.probability, std::move(*proj.state)});
    }
  }
  return dist;
}

}  // namespace

DmbqcBranch dmbqc_branch(const MeasurementPattern& pattern, const StateVector& input_state,
                         const std::map<Vertex, Bit>& forced) {
  QuantumMemory memory;
  const auto ids = build_graph_state(pattern, input_state, memory);
  StateVector state = memory.state();
  std::vector<QubitId> live_ids;
  for (std::size_t p = 0; p < memory.size(); ++p) live_ids.push_back(0);
  for (const auto& [v, id] : ids) live_ids[memory.position(id)] = id;

  DmbqcBranch branch;
  branch.probability = 1.0;
  std::map<Vertex, Bit> outcomes;
  // Outputs feed no dependency set, so they can be measured after every
  // non-output without changing the statistics.
  for (Vertex v : pattern.order()) {
    if (pattern.is_output(v)) continue;
    const auto it = forced.find(v);
    if (it == forced.end()) throw Error(ErrorCode::UnknownVertex, "no forced outcome for vertex " + std::to_string(v));
    const Angle angle = adapted_angle(pattern, v, outcomes);
    const auto pos = static_cast<std::size_t>(
        std::find(live_ids.begin(), live_ids.end(), ids.at(v)) - live_ids.begin());
    auto proj = state.project_rotated(pos, angle, it->second);
    branch.probability *= proj.probability;
    outcomes[v] = it->second;
    if (!proj.state) {
      branch.probability = 0.0;
      return branch;
    }
    state = std::move(*proj.state);
    live_ids.erase(live_ids.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  std::vector<std::pair<std::size_t, Angle>> targets;
  for (Vertex o : pattern.outputs()) {
    const auto pos = static_cast<std::size_t>(
        std::find(live_ids.begin(), live_ids.end(), ids.at(o)) - live_ids.begin());
    targets.emplace_back(pos, adapted_angle(pattern, o, outcomes));
  }
  branch.conditional = measure_all(state, targets);
  return branch;
}

OutputDistribution exact_output_distribution(const MeasurementPattern& pattern,
                                             const StateVector& input_state) {
  if (input_state.num_qubits() != pattern.inputs().size()) {
    throw Error(ErrorCode::DimensionMismatch, "input state must have one qubit per input vertex");
  }
  // Register layout: inputs (ascending) then the remaining vertices ascending.
  std::vector<Vertex> layout = pattern.inputs();
  for (Vertex v : pattern.graph().vertices()) {
    if (!pattern.is_input(v)) layout.push_back(v);
  }
  StateVector state = input_state;
  const StateVector plus = quantum::prepare_qubit(quantum::QubitPreparation::plus(Angle(0)));
  while (state.num_qubits() < layout.size()) state = state.tensor(plus);
  auto pos_of = [&](Vertex v) {
    return static_cast<std::size_t>(std::find(layout.begin(), layout.end(), v) - layout.begin());
  };
  for (const auto& [a, b] : pattern.graph().edges()) state.apply_cz(pos_of(a), pos_of(b));

  // Contract non-outputs with <+_phi| from the highest position down.
  std::vector<Vertex> measured;
  for (Vertex v : layout) {
    if (!pattern.is_output(v)) measured.push_back(v);
  }
  std::sort(measured.begin(), measured.end(),
            [&](Vertex a, Vertex b) { return pos_of(a) > pos_of(b); });
  for (Vertex v : measured) {
    auto proj = state.project_rotated(pos_of(v), pattern.angle(v), 0);
    if (!proj.state) {
      throw Error(ErrorCode::ZeroNormProjection, "all-zero branch has zero weight at vertex " + std::to_string(v));
    }
    state = std::move(*proj.state);
    layout.erase(layout.begin() + static_cast<std::ptrdiff_t>(pos_of(v)));
  }
  std::vector<std::pair<std::size_t, Angle>> targets;
  for (Vertex o : pattern.outputs()) targets.emplace_back(pos_of(o), pattern.angle(o));
  return measure_all(state, targets);
}

OutputDistribution exact_output_distribution(const MeasurementPattern& pattern) {
  return exact_output_distribution(pattern, plus_input(pattern));
}

double output_one_probability(const MeasurementPattern& pattern) {
  if (pattern.outputs().size() != 1) {
    throw Error(ErrorCode::InvalidPattern, "binary observable needs exactly one output vertex");
  }
  return exact_output_distribution(pattern)[1];
}

OutputBits sample_output(const OutputDistribution& distribution, std::size_t num_outputs, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t chosen = distribution.size() - 1;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    acc += distribution[i];
    if (u < acc) {
      chosen = i;
      break;
    }
  }
  OutputBits bits(num_outputs);
  for (std::size_t i = 0; i < num_outputs; ++i) bits[i] = static_cast<Bit>((chosen >> i) & 1u);
  return bits;
}

}  // namespace vboe::mbqc
