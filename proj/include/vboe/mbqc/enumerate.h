#pragma once

#include <optional>
#include <vector>

#include "vboe/mbqc/pattern.h"

namespace vboe::mbqc {

// Every simple graph on vertices 0..n-1, in edge-subset order.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

// Smallest-id measurement order satisfying the flow's ordering constraints,
// or nullopt if the constraints are cyclic.
std::optional<std::vector<Vertex>> flow_order(const Graph& graph,
                                              const std::map<Vertex, Vertex>& successor);

// All patterns on up to max_vertices vertices (graph, I, O, f) that admit a
// flow, each with its smallest-id order and all angles 0. Inputs must be
// non-empty only if `require_inputs` is set.
std::vector<MeasurementPattern> enumerate_flow_patterns(int max_vertices, bool require_inputs = false);

}  // namespace vboe::mbqc
