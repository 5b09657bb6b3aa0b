#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vboe/types.h"

namespace vboe::mbqc {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph. Vertices are kept ascending, edges normalized to
// (low, high) and sorted lexicographically; this is also the order in which
// graph states are built.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidPattern on self-loops, duplicate vertices or dangling edges.
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  static Graph path(int n);  // vertices 0..n-1

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }

  bool has_vertex(Vertex v) const { return adjacency_.contains(v); }
  bool has_edge(Vertex a, Vertex b) const;
  // Throws UnknownVertex.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::vector<Vertex>> adjacency_;
};

}  // namespace vboe::mbqc
