#pragma once

#include <map>
#include <string>
#include <vector>

#include "vboe/mbqc/graph.h"

namespace vboe::mbqc {

// Flow (f, order): f maps every non-output vertex to a non-input neighbour;
// `order` is a total measurement order of all vertices extending the flow's
// partial order. Outputs are measured too, last in their position of `order`.
struct Flow {
  std::map<Vertex, Vertex> successor;
  std::vector<Vertex> order;
};

struct FlowViolation {
  // 0 = structural (domain/codomain/order is not a permutation), 1..3 = the
  // three flow conditions.
  int condition = 0;
  Vertex vertex = 0;
  std::string detail;
};

struct FlowReport {
  std::vector<FlowViolation> violations;

  bool valid() const { return violations.empty(); }
  bool violates(int condition) const;
};

FlowReport validate_flow(const Graph& graph, const std::vector<Vertex>& inputs,
                         const std::vector<Vertex>& outputs, const Flow& flow);

struct DependencySets {
  std::vector<Vertex> x;  // f^{-1}(v)
  std::vector<Vertex> z;  // {j != v : v in N(f(j))}

  friend bool operator==(const DependencySets&, const DependencySets&) = default;
};

class MeasurementPattern {
 public:
  // Throws InvalidPattern if I/O are not subsets of V or an angle names an
  // unknown vertex, and InvalidFlow if the flow fails validation. Vertices
  // without an angle default to 0.
  MeasurementPattern(Graph graph, std::vector<Vertex> inputs, std::vector<Vertex> outputs,
                     std::map<Vertex, Angle> angles, Flow flow);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& inputs() const { return inputs_; }
  const std::vector<Vertex>& outputs() const { return outputs_; }
  const Flow& flow() const { return flow_; }
  const std::vector<Vertex>& order() const { return flow_.order; }
  const std::map<Vertex, Angle>& angles() const { return angles_; }
  Angle angle(Vertex v) const;

  bool is_input(Vertex v) const;
  bool is_output(Vertex v) const;

  // Same structure (graph, I, O, flow) with a different angle assignment.
  MeasurementPattern with_angles(std::map<Vertex, Angle> angles) const;

  // Throws UnknownVertex.
  const DependencySets& dependencies(Vertex v) const;

 private:
  Graph graph_;
  std::vector<Vertex> inputs_;
  std::vector<Vertex> outputs_;
  std::map<Vertex, Angle> angles_;
  Flow flow_;
  std::map<Vertex, DependencySets> dependencies_;
};

DependencySets dependency_sets(const MeasurementPattern& pattern, Vertex v);

// (-1)^{s_x} phi + s_z pi
Angle update_angle(Angle phi, Bit s_x, Bit s_z);

// Adapted angle phi'_v given the (corrected) outcome bits of earlier
// vertices. Missing entries for dependency vertices throw UnknownVertex.
Angle adapted_angle(const MeasurementPattern& pattern, Vertex v, const std::map<Vertex, Bit>& bits);

// Canonical line pattern 0-1-...-(n-1), input {0}, output {n-1}, f(i)=i+1.
MeasurementPattern path_pattern(int n, const std::vector<int>& angle_units);

}  // namespace vboe::mbqc
