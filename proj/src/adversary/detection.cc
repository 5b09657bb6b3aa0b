#include "vboe/adversary/detection.h"

#include <algorithm>

namespace vboe::adversary {

using quantum::Pauli;

namespace {

// Enumerates every plan of colour class `traps`: calls visit(d, theta, r).
template <typename Visit>
void for_each_plan(const mbqc::Graph& graph, const std::vector<Vertex>& traps, Visit visit) {
  std::vector<Vertex> dummies;
  for (Vertex v : graph.vertices()) {
    if (!std::binary_search(traps.begin(), traps.end(), v)) dummies.push_back(v);
  }
  std::size_t theta_tuples = 1;
  for (std::size_t i = 0; i < traps.size(); ++i) theta_tuples *= Angle::kCount;
  for (std::size_t dm = 0; dm < (std::size_t{1} << dummies.size()); ++dm) {
    std::map<Vertex, Bit> d;
    for (std::size_t i = 0; i < dummies.size(); ++i) d[dummies[i]] = (dm >> i) & 1u;
    for (std::size_t tt = 0; tt < theta_tuples; ++tt) {
      std::map<Vertex, Angle> theta;
      std::size_t digits = tt;
      for (Vertex v : traps) {
        theta[v] = Angle(static_cast<int>(digits % Angle::kCount));
        digits /= Angle::kCount;
      }
      for (std::size_t rm = 0; rm < (std::size_t{1} << traps.size()); ++rm) {
        std::map<Vertex, Bit> r;
        for (std::size_t i = 0; i < traps.size(); ++i) r[traps[i]] = (rm >> i) & 1u;
        visit(d, theta, r);
      }
    }
  }
}

Bit neighbour_parity(const mbqc::Graph& graph, const std::map<Vertex, Bit>& d, Vertex v) {
  Bit s = 0;
  for (Vertex k : graph.neighbors(v)) {
    const auto it = d.find(k);
    if (it != d.end()) s ^= it->second;
  }
  return s;
}

// cos^2(k pi / 8) for even k.
Rational cos_squared_eighths(int k) {
  switch (((k % 8) + 8) % 8) {
    case 0: return Rational(1);
    case 2:
    case 6: return Rational(1, 2);
    case 4: return Rational(0);
    default: throw Error(ErrorCode::BadParams, "outcome probability is not dyadic");
  }
}

}  // namespace

Rational exact_test_failure(const mbqc::Graph& graph, const trap::Coloring& coloring,
                            const std::map<Vertex, Pauli>& paulis, PauliFrame frame) {
  if (!coloring.is_proper(graph)) throw Error(ErrorCode::BadParams, "colouring is not proper");
  Rational pass_total = 0;
  for (const auto& traps : coloring.classes) {
    Rational pass_sum = 0;
    std::size_t plans = 0;
    for_each_plan(graph, traps, [&](const auto& d, const auto& theta, const auto& r) {
      Rational pass = 1;
      for (Vertex v : traps) {
        const Bit dv = neighbour_parity(graph, d, v);
        const Angle delta = theta.at(v) + Angle::pi_times(r.at(v));
        Angle alpha = theta.at(v) + Angle::pi_times(dv);
        bool flip = false;
        const auto it = paulis.find(v);
        const Pauli p = it == paulis.end() ? Pauli::I : it->second;
        if (frame == PauliFrame::Measurement) {
          flip = p == Pauli::Z || p == Pauli::Y;
        } else if (p == Pauli::Z) {
          alpha = alpha + Angle::pi();
        } else if (p == Pauli::X) {
          alpha = -alpha;
        } else if (p == Pauli::Y) {
          alpha = -alpha + Angle::pi();
        }
        const Rational p0 = cos_squared_eighths((alpha - delta).units());
        const Bit needed = (r.at(v) ^ dv) ^ (flip ? 1 : 0);
        pass *= needed == 0 ? p0 : Rational(1) - p0;
      }
      pass_sum += pass;
      ++plans;
    });
    pass_total += pass_sum / plans;
  }
  return Rational(1) - pass_total / coloring.size();
}

double simulated_test_failure(const mbqc::Graph& graph, const trap::Coloring& coloring,
                              const std::map<Vertex, Pauli>& paulis, PauliFrame frame) {
  const auto& vertices = graph.vertices();
  auto pos = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  double pass_total = 0.0;
  for (const auto& traps : coloring.classes) {
    double pass_sum = 0.0;
    std::size_t plans = 0;
    for_each_plan(graph, traps, [&](const auto& d, const auto& theta, const auto& r) {
      quantum::StateVector state(0);
      for (Vertex v : vertices) {
        const auto prep = std::binary_search(traps.begin(), traps.end(), v)
                              ? quantum::QubitPreparation::plus(theta.at(v))
                              : quantum::QubitPreparation::computational(d.at(v));
        state = state.tensor(quantum::prepare_qubit(prep));
      }
      for (const auto& [a, b] : graph.edges()) state.apply_cz(pos(a), pos(b));
      std::map<Vertex, Angle> delta;
      for (Vertex v : traps) delta[v] = theta.at(v) + Angle::pi_times(r.at(v));
      for (const auto& [v, p] : paulis) {
        const auto it = delta.find(v);
        apply_pauli_deviation(state, pos(v), p, it == delta.end() ? Angle(0) : it->second, frame);
      }
      double pass = 1.0;
      // Highest position first so lower positions stay valid.
      for (auto it = traps.rbegin(); it != traps.rend() && pass > 0; ++it) {
        const Vertex v = *it;
        const Bit expected = r.at(v) ^ neighbour_parity(graph, d, v);
        auto proj = state.project_rotated(pos(v), delta.at(v), expected);
        pass *= proj.probability;
        if (proj.state) state = std::move(*proj.state);
      }
      pass_sum += pass;
      ++plans;
    });
    pass_total += pass_sum / static_cast<double>(plans);
  }
  return 1.0 - pass_total / static_cast<double>(coloring.size());
}

}  // namespace vboe::adversary
