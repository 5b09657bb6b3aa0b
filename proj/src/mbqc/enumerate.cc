#include "vboe/mbqc/enumerate.h"

#include <algorithm>

namespace vboe::mbqc {

namespace {

std::vector<Vertex> subset(int n, unsigned mask) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1u) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) candidates.emplace_back(a, b);
  }
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
  std::vector<Graph> graphs;
  for (unsigned mask = 0; mask < (1u << candidates.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(candidates[i]);
    }
    graphs.emplace_back(vertices, std::move(edges));
  }
  return graphs;
}

std::vector<Graph> connected_graphs(int n) {
  auto graphs = all_graphs(n);
  std::erase_if(graphs, [](const Graph& g) { return !g.is_connected(); });
  return graphs;
}

std::optional<std::vector<Vertex>> flow_order(const Graph& graph,
                                              const std::map<Vertex, Vertex>& successor) {
  // before[w] lists the vertices that must precede w.
  std::map<Vertex, std::vector<Vertex>> before;
  for (Vertex v : graph.vertices()) before[v];
  for (const auto& [v, fv] : successor) {
    before[fv].push_back(v);
    for (Vertex w : graph.neighbors(fv)) {
      if (w != v) before[w].push_back(v);
    }
  }
  std::vector<Vertex> order;
  std::vector<Vertex> pending = graph.vertices();
  while (!pending.empty()) {
    auto ready = std::find_if(pending.begin(), pending.end(), [&](Vertex w) {
      return std::all_of(before[w].begin(), before[w].end(), [&](Vertex u) {
        return std::find(order.begin(), order.end(), u) != order.end();
      });
    });
    if (ready == pending.end()) return std::nullopt;
    order.push_back(*ready);
    pending.erase(ready);
  }
  return order;
}

std::vector<MeasurementPattern> enumerate_flow_patterns(int max_vertices, bool require_inputs) {
  std::vector<MeasurementPattern> patterns;
  for (int n = 1; n <= max_vertices; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (unsigned in_mask = require_inputs ? 1u : 0u; in_mask < (1u << n); ++in_mask) {
        for (unsigned out_mask = 1; out_mask < (1u << n); ++out_mask) {
          const auto inputs = subset(n, in_mask);
          const auto outputs = subset(n, out_mask);
          const auto measured = subset(n, ~out_mask & ((1u << n) - 1));
          // Candidate successors: non-input neighbours.
          std::vector<std::vector<Vertex>> options;
          bool feasible = true;
          for (Vertex v : measured) {
            std::vector<Vertex> opts;
            for (Vertex w : g.neighbors(v)) {
              if (!(in_mask >> w & 1u)) opts.push_back(w);
            }
            if (opts.empty()) feasible = false;
            options.push_back(std::move(opts));
          }
          if (!feasible) continue;
          std::vector<std::size_t> pick(measured.size(), 0);
          while (true) {
            std::map<Vertex, Vertex> successor;
            for (std::size_t i = 0; i < measured.size(); ++i) successor[measured[i]] = options[i][pick[i]];
            if (auto order = flow_order(g, successor)) {
              Flow flow{successor, *order};
              if (validate_flow(g, inputs, outputs, flow).valid()) {
                patterns.emplace_back(g, inputs, outputs, std::map<Vertex, Angle>{}, std::move(flow));
              }
            }
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
          }
        }
      }
    }
  }
  return patterns;
}

}  // namespace vboe::mbqc
