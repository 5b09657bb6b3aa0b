#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "vboe/adversary/servers.h"
#include "vboe/trap/coloring.h"

namespace vboe::adversary {

using Rational = boost::multiprecision::cpp_rational;

// Probability, over a uniformly random test plan, that a test round fails
// when the server applies `paulis` before measuring. Computed in exact
// arithmetic from the single-qubit picture: with traps pairwise
// non-adjacent, each trap holds |+_{theta + d pi}> after entangling, where
// d is the parity of its neighbouring dummies. Throws BadParams if an
// outcome probability is irrational (cannot happen for Pauli deviations).
Rational exact_test_failure(const mbqc::Graph& graph, const trap::Coloring& coloring,
                           const std::map<Vertex, quantum::Pauli>& paulis, PauliFrame frame);

// Same quantity from the full statevector: build the round's state, apply
// the deviations, and project every trap onto its expected outcome.
double simulated_test_failure(const mbqc::Graph& graph, const trap::Coloring& coloring,
                              const std::map<Vertex, quantum::Pauli>& paulis, PauliFrame frame);

}  // namespace vboe::adversary
