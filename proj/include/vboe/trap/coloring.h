#pragma once

#include <vector>

#include "vboe/mbqc/graph.h"

namespace vboe::trap {

struct Coloring {
  std::vector<std::vector<Vertex>> classes;  // each ascending

  std::size_t size() const { return classes.size(); }
  // Partition of V with no edge inside a class.
  bool is_proper(const mbqc::Graph& graph) const;
};

// Greedy colouring over vertices by descending degree, ties by id; each
// vertex takes the smallest colour unused by its coloured neighbours.
Coloring greedy_coloring(const mbqc::Graph& graph);

}  // namespace vboe::trap
