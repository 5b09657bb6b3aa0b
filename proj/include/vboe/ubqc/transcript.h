#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vboe/mbqc/dmbqc.h"
#include "vboe/trap/plan.h"
#include "vboe/ubqc/secrets.h"

namespace vboe::ubqc {

enum class RoundKind { Computation, Test };

const char* to_string(RoundKind kind);

// Everything that crossed the channel in one round, plus the client's own
// secrets. Sent qubits are stored by their classical description.
struct RoundTranscript {
  RoundKind kind = RoundKind::Computation;
  std::vector<Vertex> order;
  std::map<Vertex, quantum::QubitPreparation> sent;
  std::map<Vertex, Angle> delta;
  std::map<Vertex, Bit> b;
  std::optional<BlindingSecrets> secrets;   // computation rounds
  std::optional<trap::TestRoundPlan> plan;  // test rounds
  mbqc::OutputBits output;                  // computation rounds, decoded
  bool passed = true;                       // test rounds

  friend bool operator==(const RoundTranscript&, const RoundTranscript&) = default;
};

// Message log, one JSON object per line:
//   {"direction": "to_server" | "to_client" | "client", "vertex": v | null, "payload": {...}}
// The first line is a client-side header carrying the round kind and the
// pattern; "client" lines are local to the client and never sent. Messages
// that cross the channel have the same shape in test and computation
// rounds: {"type": "qubit"}, {"type": "entangle"}, {"type": "delta",
// "angle": k} and {"type": "bit", "value": b}.
std::string to_jsonl(const RoundTranscript& transcript, const mbqc::MeasurementPattern& pattern);

struct ParsedTranscript {
  RoundTranscript transcript;
  std::optional<mbqc::MeasurementPattern> pattern;
};

// Throws ParseError with the offending line number.
ParsedTranscript parse_jsonl(std::string_view text);

}  // namespace vboe::ubqc
