#include "vboe/mbqc/pattern.h"

#include <algorithm>

namespace vboe::mbqc {

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string name(Vertex v) { return std::to_string(v); }

}  // namespace

bool FlowReport::violates(int condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const FlowViolation& f) { return f.condition == condition; });
}

FlowReport validate_flow(const Graph& graph, const std::vector<Vertex>& inputs_in,
                         const std::vector<Vertex>& outputs_in, const Flow& flow) {
  FlowReport report;
  auto add = [&](int condition, Vertex v, std::string detail) {
    report.violations.push_back({condition, v, std::move(detail)});
  };
  const auto inputs = sorted_unique(inputs_in);
  const auto outputs = sorted_unique(outputs_in);

  std::map<Vertex, std::size_t> position;
  for (std::size_t i = 0; i < flow.order.size(); ++i) {
    const Vertex v = flow.order[i];
    if (!graph.has_vertex(v)) {
      add(0, v, "order names unknown vertex " + name(v));
    } else if (!position.emplace(v, i).second) {
      add(0, v, "vertex " + name(v) + " appears twice in order");
    }
  }
  const bool order_ok = report.valid() && position.size() == graph.size();
  if (report.valid() && !order_ok) add(0, -1, "order does not cover every vertex");

  for (Vertex v : graph.vertices()) {
    const bool output = contains(outputs, v);
    const bool has_f = flow.successor.contains(v);
    if (!output && !has_f) add(0, v, "non-output vertex " + name(v) + " has no flow successor");
    if (output && has_f) add(0, v, "output vertex " + name(v) + " must not have a flow successor");
  }

  for (const auto& [v, fv] : flow.successor) {
    if (!graph.has_vertex(v) || !graph.has_vertex(fv)) {
      add(0, v, "flow maps unknown vertices " + name(v) + " -> " + name(fv));
      continue;
    }
    if (contains(inputs, fv)) add(0, v, "f(" + name(v) + ") = " + name(fv) + " is an input");
    if (!graph.has_edge(v, fv)) {
      add(1, v, "(" + name(v) + ", f(" + name(v) + ")=" + name(fv) + ") is not an edge");
    }
    if (!order_ok) continue;
    if (position.at(v) >= position.at(fv)) {
      add(2, v, name(v) + " is not measured before f(" + name(v) + ")=" + name(fv));
    }
    for (Vertex w : graph.neighbors(fv)) {
      if (w != v && position.at(v) >= position.at(w)) {
        add(3, v, name(v) + " is not measured before " + name(w) + " in N(f(" + name(v) + "))");
      }
    }
  }
  return report;
}

MeasurementPattern::MeasurementPattern(Graph graph, std::vector<Vertex> inputs,
                                       std::vector<Vertex> outputs, std::map<Vertex, Angle> angles,
                                       Flow flow)
    : graph_(std::move(graph)),
      inputs_(sorted_unique(std::move(inputs))),
      outputs_(sorted_unique(std::move(outputs))),
      angles_(std::move(angles)),
      flow_(std::move(flow)) {
  for (Vertex v : inputs_) {
    if (!graph_.has_vertex(v)) throw Error(ErrorCode::InvalidPattern, "input " + name(v) + " not in V");
  }
  for (Vertex v : outputs_) {
    if (!graph_.has_vertex(v)) throw Error(ErrorCode::InvalidPattern, "output " + name(v) + " not in V");
  }
  for (const auto& [v, a] : angles_) {
    if (!graph_.has_vertex(v)) throw Error(ErrorCode::InvalidPattern, "angle for unknown vertex " + name(v));
  }
  for (Vertex v : graph_.vertices()) angles_.try_emplace(v, Angle(0));

  const FlowReport report = validate_flow(graph_, inputs_, outputs_, flow_);
  if (!report.valid()) {
    throw Error(ErrorCode::InvalidFlow, report.violations.front().detail);
  }

  for (Vertex v : graph_.vertices()) dependencies_[v];
  for (const auto& [j, fj] : flow_.successor) {
    dependencies_[fj].x.push_back(j);
    for (Vertex w : graph_.neighbors(fj)) {
      if (w != j) dependencies_[w].z.push_back(j);
    }
  }
  for (auto& [v, deps] : dependencies_) {
    std::sort(deps.x.begin(), deps.x.end());
    std::sort(deps.z.begin(), deps.z.end());
  }
}

Angle MeasurementPattern::angle(Vertex v) const {
  const auto it = angles_.find(v);
  if (it == angles_.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + name(v));
  return it->second;
}

bool MeasurementPattern::is_input(Vertex v) const { return contains(inputs_, v); }
bool MeasurementPattern::is_output(Vertex v) const { return contains(outputs_, v); }

MeasurementPattern MeasurementPattern::with_angles(std::map<Vertex, Angle> angles) const {
  return MeasurementPattern(graph_, inputs_, outputs_, std::move(angles), flow_);
}

const DependencySets& MeasurementPattern::dependencies(Vertex v) const {
  const auto it = dependencies_.find(v);
  if (it == dependencies_.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + name(v));
  return it->second;
}

DependencySets dependency_sets(const MeasurementPattern& pattern, Vertex v) {
  return pattern.dependencies(v);
}

Angle update_angle(Angle phi, Bit s_x, Bit s_z) {
  return Angle::signed_by(s_x, phi) + Angle::pi_times(s_z);
}

Angle adapted_angle(const MeasurementPattern& pattern, Vertex v, const std::map<Vertex, Bit>& bits) {
  const auto& deps = pattern.dependencies(v);
  auto parity = [&](const std::vector<Vertex>& set) {
    Bit s = 0;
    for (Vertex j : set) {
      const auto it = bits.find(j);
      if (it == bits.end()) {
        throw Error(ErrorCode::UnknownVertex,
                    "outcome of " + name(j) + " needed before measuring " + name(v));
      }
      s ^= it->second;
    }
    return s;
  };
  return update_angle(pattern.angle(v), parity(deps.x), parity(deps.z));
}

MeasurementPattern path_pattern(int n, const std::vector<int>& angle_units) {
  Graph g = Graph::path(n);
  Flow flow;
  std::map<Vertex, Angle> angles;
  for (int i = 0; i < n; ++i) {
    flow.order.push_back(i);
    if (i + 1 < n) flow.successor[i] = i + 1;
    if (static_cast<std::size_t>(i) < angle_units.size()) angles[i] = Angle(angle_units[i]);
  }
  return MeasurementPattern(std::move(g), {0}, {n - 1}, std::move(angles), std::move(flow));
}

}  // namespace vboe::mbqc
