#pragma once

#include <map>
#include <vector>

#include "vboe/mbqc/graph.h"
#include "vboe/quantum/rng.h"

namespace vboe::ubqc {

struct BlindingSecrets {
  std::map<Vertex, Bit> a_init;  // 0 outside I
  std::map<Vertex, Bit> a_prop;  // XOR of a_init over neighbours
  std::map<Vertex, Bit> r;
  std::map<Vertex, Angle> theta;

  friend bool operator==(const BlindingSecrets&, const BlindingSecrets&) = default;
};

std::map<Vertex, Bit> propagate_a_init(const mbqc::Graph& graph, const std::map<Vertex, Bit>& a_init);

// Draw order per vertex (ascending): a_init (inputs only), r, theta.
BlindingSecrets sample_secrets(const mbqc::Graph& graph, const std::vector<Vertex>& inputs, Rng& rng);

// delta_v = (-1)^{a_init} phi'_v + theta_v + (r_v + a_prop_v) pi
Angle blind_angle(Angle phi_prime, const BlindingSecrets& secrets, Vertex v);

}  // namespace vboe::ubqc
