#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "vboe/types.h"

namespace vboe::trap {

// Client secrets of one test round: the trap colour class and the per-vertex
// randomness. Every vertex is either a trap or a dummy.
struct TestRoundPlan {
  std::size_t color = 0;
  std::vector<Vertex> traps;  // ascending
  std::map<Vertex, Bit> dummy_bits;
  std::map<Vertex, Angle> trap_theta;
  std::map<Vertex, Bit> trap_r;

  bool is_trap(Vertex v) const { return std::binary_search(traps.begin(), traps.end(), v); }

  friend bool operator==(const TestRoundPlan&, const TestRoundPlan&) = default;
};

}  // namespace vboe::trap
