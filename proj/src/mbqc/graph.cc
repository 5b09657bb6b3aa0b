#include "vboe/mbqc/graph.h"

#include <algorithm>
#include <string>

namespace vboe::mbqc {

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorCode::InvalidPattern, "duplicate vertex");
  }
  for (Vertex v : vertices) {
    if (v < 0) throw Error(ErrorCode::InvalidPattern, "vertex ids must be non-negative");
    adjacency_[v];
  }
  for (auto& [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::InvalidPattern, "self-loop on vertex " + std::to_string(a));
    if (!adjacency_.contains(a) || !adjacency_.contains(b)) {
      throw Error(ErrorCode::InvalidPattern,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) + " references unknown vertex");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [a, b] : edges) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& [v, nbrs] : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
}

Graph Graph::path(int n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    if (i > 0) es.emplace_back(i - 1, i);
  }
  return Graph(std::move(vs), std::move(es));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  const auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<Vertex> stack{vertices_.front()};
  std::map<Vertex, bool> seen{{vertices_.front(), true}};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(vertices_.begin(), vertices_.end(), [&](Vertex v) { return seen[v]; });
}

}  // namespace vboe::mbqc
