#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vboe/types.h"

namespace vboe::harness {

enum class MismatchKind {
  Preparation,   // sent qubit disagrees with the recorded secrets or plan
  TrapEquation,  // trap answer != r xor parity of neighbouring dummies
  TrapDelta,     // trap delta != theta + r pi
  Verdict,       // recorded test verdict disagrees with the traps
  Decode,        // delta or output disagrees with its recomputation
};

const char* to_string(MismatchKind kind);

struct Mismatch {
  MismatchKind kind;
  std::optional<Vertex> vertex;
  std::string detail;
};

struct ReplayResult {
  std::string round_kind;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Re-runs the client's checks on a recorded round (the JSON-lines format of
// ubqc::to_jsonl). Throws ParseError if the text does not parse or carries
// no pattern or secrets.
ReplayResult replay_transcript(std::string_view text);

// Throws MismatchFound listing the mismatches, if any.
void require_consistent(const ReplayResult& result);

}  // namespace vboe::harness
