#pragma once

#include <map>
#include <vector>

#include "vboe/mbqc/pattern.h"
#include "vboe/quantum/quantum_memory.h"

namespace vboe::mbqc {

// Output bits are listed in ascending output-vertex order. Distributions over
// outputs are indexed by the bitstring whose bit i is output i.
using OutputBits = std::vector<Bit>;
using OutputDistribution = std::vector<double>;

std::size_t output_index(const OutputBits& bits);

// |+>^{|I|}
quantum::StateVector plus_input(const MeasurementPattern& pattern);

// Input register for I tensored with |+> on V\I, then CZ on every edge.
// Returns the qubit id of each vertex inside `memory`.
std::map<Vertex, quantum::QubitId> build_graph_state(const MeasurementPattern& pattern,
                                                     const quantum::StateVector& input_state,
                                                     quantum::QuantumMemory& memory);

// Unblinded delegated execution: measures every vertex in flow order at its
// adapted angle and returns the outcomes on O.
OutputBits run_dmbqc(const MeasurementPattern& pattern, const quantum::StateVector& input_state,
                     Rng& rng);

// One branch of the execution with the non-output outcomes fixed.
struct DmbqcBranch {
  double probability = 0.0;       // probability of the forced non-output outcomes
  OutputDistribution conditional;  // output distribution given that branch
};
DmbqcBranch dmbqc_branch(const MeasurementPattern& pattern, const quantum::StateVector& input_state,
                         const std::map<Vertex, Bit>& forced);

// Exact output distribution computed without the adaptive machinery: the
// graph state is contracted with <+_phi_v| on every non-output vertex (the
// all-zero branch, which needs no corrections) and the remaining output
// register is measured at the output angles.
OutputDistribution exact_output_distribution(const MeasurementPattern& pattern,
                                             const quantum::StateVector& input_state);
OutputDistribution exact_output_distribution(const MeasurementPattern& pattern);

// Pr[output = 1] = tr(rho |-><-|) for single-output patterns with |+> inputs.
double output_one_probability(const MeasurementPattern& pattern);

OutputBits sample_output(const OutputDistribution& distribution, std::size_t num_outputs, Rng& rng);

}  // namespace vboe::mbqc
