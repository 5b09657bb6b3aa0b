#include "vboe/trap/coloring.h"

#include <algorithm>
#include <map>
#include <set>

namespace vboe::trap {

bool Coloring::is_proper(const mbqc::Graph& graph) const {
  std::map<Vertex, std::size_t> color_of;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) return false;
    for (Vertex v : classes[c]) {
      if (!graph.has_vertex(v) || !color_of.emplace(v, c).second) return false;
    }
  }
  if (color_of.size() != graph.size()) return false;
  return std::none_of(graph.edges().begin(), graph.edges().end(),
                      [&](const mbqc::Edge& e) { return color_of[e.first] == color_of[e.second]; });
}

Coloring greedy_coloring(const mbqc::Graph& graph) {
  std::vector<Vertex> order = graph.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return graph.degree(a) > graph.degree(b); });
  std::map<Vertex, std::size_t> color_of;
  Coloring coloring;
  for (Vertex v : order) {
    std::set<std::size_t> used;
    for (Vertex w : graph.neighbors(v)) {
      const auto it = color_of.find(w);
      if (it != color_of.end()) used.insert(it->second);
    }
    std::size_t c = 0;
    while (used.contains(c)) ++c;
    color_of[v] = c;
    if (c == coloring.classes.size()) coloring.classes.emplace_back();
    coloring.classes[c].push_back(v);
  }
  for (auto& cls : coloring.classes) std::sort(cls.begin(), cls.end());
  return coloring;
}

}  // namespace vboe::trap
