#include "vboe/harness/replay.h"

#include "vboe/trap/test_round.h"
#include "vboe/ubqc/ubqc.h"

namespace vboe::harness {

const char* to_string(MismatchKind kind) {
  switch (kind) {
    case MismatchKind::Preparation: return "preparation";
    case MismatchKind::TrapEquation: return "trap_equation";
    case MismatchKind::TrapDelta: return "trap_delta";
    case MismatchKind::Verdict: return "verdict";
    case MismatchKind::Decode: return "decode";
  }
  return "?";
}

namespace {

std::string units(Angle a) { return std::to_string(a.units()); }

void replay_computation(const ubqc::RoundTranscript& t, const mbqc::MeasurementPattern& pattern,
                        std::vector<Mismatch>& out) {
  if (!t.secrets) throw Error(ErrorCode::ParseError, "computation transcript carries no secrets");
  const auto& s = *t.secrets;
  for (Vertex v : pattern.graph().vertices()) {
    if (!s.theta.contains(v) || !s.r.contains(v)) {
      throw Error(ErrorCode::ParseError, "no secrets for vertex " + std::to_string(v));
    }
    const auto it = t.sent.find(v);
    if (it == t.sent.end() || it->second != quantum::QubitPreparation::plus(s.theta.at(v))) {
      out.push_back({MismatchKind::Preparation, v, "sent qubit is not |+_theta> for the recorded theta"});
    }
  }
  // Replay the adaptive angles from the recorded answers.
  std::map<Vertex, Bit> b;
  for (Vertex v : pattern.order()) {
    if (!t.delta.contains(v) || !t.b.contains(v)) {
      out.push_back({MismatchKind::Decode, v, "vertex was never measured"});
      return;
    }
    const Angle expected = ubqc::blind_angle(ubqc::corrected_angle(pattern, v, b, s.r), s, v);
    if (t.delta.at(v) != expected) {
      out.push_back({MismatchKind::Decode, v,
                     "delta " + units(t.delta.at(v)) + " recorded, " + units(expected) + " recomputed"});
    }
    b[v] = t.b.at(v);
  }
  mbqc::OutputBits decoded;
  for (Vertex o : pattern.outputs()) decoded.push_back(b.at(o) ^ s.r.at(o));
  if (decoded != t.output) {
    out.push_back({MismatchKind::Decode, std::nullopt, "recorded output differs from b xor r on the outputs"});
  }
}

void replay_test(const ubqc::RoundTranscript& t, const mbqc::Graph& graph, std::vector<Mismatch>& out) {
  const auto& plan = *t.plan;
  std::size_t failed = 0;
  for (Vertex v : graph.vertices()) {
    const bool trap = plan.is_trap(v);
    if (!trap && !plan.dummy_bits.contains(v)) {
      throw Error(ErrorCode::ParseError, "vertex " + std::to_string(v) + " is neither trap nor dummy");
    }
    const auto expected = trap ? quantum::QubitPreparation::plus(plan.trap_theta.at(v))
                               : quantum::QubitPreparation::computational(plan.dummy_bits.at(v));
    const auto it = t.sent.find(v);
    if (it == t.sent.end() || it->second != expected) {
      out.push_back({MismatchKind::Preparation, v, trap ? "trap qubit does not match its theta"
                                                        : "dummy qubit does not match its bit"});
    }
    if (!trap) continue;
    if (!t.delta.contains(v) || !t.b.contains(v)) {
      out.push_back({MismatchKind::TrapEquation, v, "trap was never measured"});
      ++failed;
      continue;
    }
    const Angle delta = plan.trap_theta.at(v) + Angle::pi_times(plan.trap_r.at(v));
    if (t.delta.at(v) != delta) {
      out.push_back({MismatchKind::TrapDelta, v,
                     "delta " + units(t.delta.at(v)) + " recorded, " + units(delta) + " expected"});
    }
    const Bit want = trap::expected_trap_bit(plan, graph, v);
    if (t.b.at(v) != want) {
      out.push_back({MismatchKind::TrapEquation, v,
                     "answer " + std::to_string(t.b.at(v)) + ", trap equation gives " + std::to_string(want)});
      ++failed;
    }
  }
  if (t.passed != (failed == 0)) {
    out.push_back({MismatchKind::Verdict, std::nullopt,
                   std::string("recorded ") + (t.passed ? "pass" : "fail") + ", traps give " +
                       (failed == 0 ? "pass" : "fail")});
  }
}

}  // namespace

ReplayResult replay_transcript(std::string_view text) {
  const auto parsed = ubqc::parse_jsonl(text);
  if (!parsed.pattern) throw Error(ErrorCode::ParseError, "line 1: header carries no pattern");
  ReplayResult result;
  result.round_kind = ubqc::to_string(parsed.transcript.kind);
  if (parsed.transcript.kind == ubqc::RoundKind::Computation) {
    replay_computation(parsed.transcript, *parsed.pattern, result.mismatches);
  } else {
    replay_test(parsed.transcript, parsed.pattern->graph(), result.mismatches);
  }
  return result;
}

void require_consistent(const ReplayResult& result) {
  if (result.ok()) return;
  std::string message = std::to_string(result.mismatches.size()) + " mismatch(es)";
  for (const auto& m : result.mismatches) {
    message += "; " + std::string(to_string(m.kind));
    if (m.vertex) message += " at vertex " + std::to_string(*m.vertex);
    message += ": " + m.detail;
  }
  throw Error(ErrorCode::MismatchFound, message);
}

}  // namespace vboe::harness
