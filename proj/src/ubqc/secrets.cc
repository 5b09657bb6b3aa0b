#include "vboe/ubqc/secrets.h"

#include <algorithm>

namespace vboe::ubqc {

std::map<Vertex, Bit> propagate_a_init(const mbqc::Graph& graph, const std::map<Vertex, Bit>& a_init) {
  std::map<Vertex, Bit> prop;
  for (Vertex v : graph.vertices()) {
    Bit s = 0;
    for (Vertex j : graph.neighbors(v)) {
      const auto it = a_init.find(j);
      if (it != a_init.end()) s ^= it->second;
    }
    prop[v] = s;
  }
  return prop;
}

BlindingSecrets sample_secrets(const mbqc::Graph& graph, const std::vector<Vertex>& inputs, Rng& rng) {
  BlindingSecrets s;
  for (Vertex v : graph.vertices()) {
    const bool input = std::find(inputs.begin(), inputs.end(), v) != inputs.end();
    s.a_init[v] = input ? rng.bit() : Bit{0};
    s.r[v] = rng.bit();
    s.theta[v] = rng.angle();
  }
  s.a_prop = propagate_a_init(graph, s.a_init);
  return s;
}

Angle blind_angle(Angle phi_prime, const BlindingSecrets& secrets, Vertex v) {
  const auto bit = [&](const std::map<Vertex, Bit>& m) {
    const auto it = m.find(v);
    return it == m.end() ? Bit{0} : it->second;
  };
  const auto theta = secrets.theta.find(v);
  return Angle::signed_by(bit(secrets.a_init), phi_prime) +
         (theta == secrets.theta.end() ? Angle(0) : theta->second) +
         Angle::pi_times(bit(secrets.r) ^ bit(secrets.a_prop));
}

}  // namespace vboe::ubqc
