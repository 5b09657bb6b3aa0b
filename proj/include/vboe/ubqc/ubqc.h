#pragma once

#include <functional>
#include <optional>

#include "vboe/ubqc/server.h"
#include "vboe/ubqc/transcript.h"

namespace vboe::ubqc {

struct RoundResult {
  RoundTranscript transcript;
  mbqc::OutputBits output;
};

// Blind delegation of one pattern with |+> inputs. Vertices are sent in
// ascending order and measured in the pattern's order.
RoundResult run_ubqc_round(const mbqc::MeasurementPattern& pattern, Server& server, Rng& rng);

// Server-side deviation allowed by the ideal resource: a classical map of
// the correct output using private randomness.
using OutputDeviation = std::function<mbqc::OutputBits(const mbqc::OutputBits&, Rng&)>;

mbqc::OutputBits bdqc_ideal(const mbqc::MeasurementPattern& pattern, const OutputDeviation& deviation,
                            Rng& rng);
mbqc::OutputBits bdqc_ideal(const mbqc::MeasurementPattern& pattern, Rng& rng);

// Rotation the resource part applies to its half before the Hadamard and
// computational measurement.
enum class EprRotation {
  // theta' = (-1)^{a_init} delta - phi' - a_prop pi. Agrees with the literal
  // rule whenever a_init = 0.
  Teleported,
  // theta' = delta - (-1)^{a_init} phi' - a_prop pi, taken verbatim.
  Literal,
};

// Simulator/resource split of the same round: the server receives EPR halves
// and uniformly random angles; the client's half (or, for inputs, the
// teleported input register) is measured afterwards to produce a_init and r.
// The returned transcript records the equivalent secrets, including the
// theta_v the server's qubit was effectively prepared with.
RoundResult epr_split_round(const mbqc::MeasurementPattern& pattern, Server& server, Rng& rng,
                            EprRotation rotation = EprRotation::Teleported);

// s_X, s_Z from corrected bits b_j ^ r_j, then phi'_v.
Angle corrected_angle(const mbqc::MeasurementPattern& pattern, Vertex v, const std::map<Vertex, Bit>& b,
                      const std::map<Vertex, Bit>& r);

}  // namespace vboe::ubqc
