#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vboe/mbqc/pattern.h"

namespace vboe::ubqc {

// Exact classical-quantum state held by the server in one round, for every
// fixed string of answers it might return. Entry [b][d] is the unnormalized
// density of the qubits it received (vertex i of the ascending vertex list
// is qubit i) jointly with seeing the delta tuple d (base-8 digits in the
// same vertex order), averaged over all client secrets.
struct ServerView {
  std::size_t num_vertices = 0;
  std::vector<std::vector<Eigen::MatrixXcd>> by_answers;
};

// Enumerates every (a_init, r, theta); feasible for up to 3 vertices.
ServerView server_view(const mbqc::MeasurementPattern& pattern);

struct BlindnessAudit {
  double max_view_difference = 0.0;  // entrywise, between the two views
  double max_delta_weight_error = 0.0;  // |Pr[d | b] - 8^-n|
  double max_mixedness_error = 0.0;     // conditional state vs I/2^n
  bool passed(double tolerance = 1e-9) const {
    return max_view_difference <= tolerance && max_delta_weight_error <= tolerance &&
           max_mixedness_error <= tolerance;
  }
};

// Compares the views for two patterns that differ only in their angles.
// Throws InvalidPattern if (G, I, O, flow) differ.
BlindnessAudit audit_blindness(const mbqc::MeasurementPattern& a, const mbqc::MeasurementPattern& b);

}  // namespace vboe::ubqc
