#include "vboe/ubqc/transcript.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "vboe/mbqc/pattern_io.h"

namespace vboe::ubqc {

using nlohmann::json;
using quantum::QubitPreparation;

const char* to_string(RoundKind kind) {
  return kind == RoundKind::Computation ? "computation" : "test";
}

namespace {

struct BadLine {
  std::string message;
};

json line(const char* direction, std::optional<Vertex> v, json payload) {
  json j;
  j["direction"] = direction;
  j["vertex"] = v ? json(*v) : json(nullptr);
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace

std::string to_jsonl(const RoundTranscript& t, const mbqc::MeasurementPattern& pattern) {
  std::vector<json> lines;
  json header{{"type", "header"}, {"kind", to_string(t.kind)}};
  if (t.plan) header["color"] = t.plan->color;
  header["pattern"] = json::parse(mbqc::pattern_to_json(pattern));
  lines.push_back(line("client", std::nullopt, header));

  for (const auto& [v, prep] : t.sent) {
    if (t.secrets) {
      lines.push_back(line("client", v,
                           {{"type", "secret"},
                            {"a_init", t.secrets->a_init.at(v)},
                            {"r", t.secrets->r.at(v)},
                            {"theta", t.secrets->theta.at(v).units()}}));
    } else if (t.plan && t.plan->is_trap(v)) {
      lines.push_back(line("client", v,
                           {{"type", "trap"},
                            {"theta", t.plan->trap_theta.at(v).units()},
                            {"r", t.plan->trap_r.at(v)}}));
    } else if (t.plan) {
      lines.push_back(line("client", v, {{"type", "dummy"}, {"d", t.plan->dummy_bits.at(v)}}));
    }
  }
  // The description stays with the client; the server only gets the qubit.
  for (const auto& [v, prep] : t.sent) {
    json payload{{"type", "prepared"}};
    if (prep.kind == QubitPreparation::Kind::PlusTheta) {
      payload["state"] = "plus";
      payload["theta"] = prep.theta.units();
    } else {
      payload["state"] = "computational";
      payload["bit"] = prep.bit;
    }
    lines.push_back(line("client", v, payload));
    lines.push_back(line("to_server", v, {{"type", "qubit"}}));
  }
  lines.push_back(line("to_server", std::nullopt, {{"type", "entangle"}}));
  for (Vertex v : t.order) {
    lines.push_back(line("to_server", v, {{"type", "delta"}, {"angle", t.delta.at(v).units()}}));
    lines.push_back(line("to_client", v, {{"type", "bit"}, {"value", t.b.at(v)}}));
  }
  if (t.kind == RoundKind::Computation) {
    lines.push_back(line("client", std::nullopt, {{"type", "output"}, {"bits", t.output}}));
  } else {
    lines.push_back(line("client", std::nullopt, {{"type", "verdict"}, {"passed", t.passed}}));
  }
  std::ostringstream out;
  for (const auto& l : lines) out << l.dump() << '\n';
  return out.str();
}

ParsedTranscript parse_jsonl(std::string_view text) {
  ParsedTranscript parsed;
  RoundTranscript& t = parsed.transcript;
  std::size_t number = 0;
  std::size_t start = 0;
  bool header = false;
  BlindingSecrets secrets;
  trap::TestRoundPlan plan;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (raw.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto fail = [](const std::string& message) -> void { throw BadLine{message}; };
    try {
      const json j = json::parse(raw);
      const std::string direction = j.at("direction").get<std::string>();
      const json& payload = j.at("payload");
      const std::string type = payload.at("type").get<std::string>();
      const std::optional<Vertex> v =
          j.at("vertex").is_null() ? std::nullopt : std::optional<Vertex>(j.at("vertex").get<Vertex>());
      auto need_vertex = [&] {
        if (!v) fail("message of type " + type + " needs a vertex");
        return *v;
      };
      if (!header && type != "header") fail("first message must be the header");
      if (type == "header") {
        if (header) fail("duplicate header");
        header = true;
        const std::string kind = payload.at("kind").get<std::string>();
        if (kind != "computation" && kind != "test") fail("unknown round kind " + kind);
        t.kind = kind == "test" ? RoundKind::Test : RoundKind::Computation;
        if (payload.contains("color")) plan.color = payload.at("color").get<std::size_t>();
        if (payload.contains("pattern")) parsed.pattern = mbqc::parse_pattern(payload.at("pattern").dump());
      } else if (type == "secret") {
        const Vertex u = need_vertex();
        secrets.a_init[u] = payload.at("a_init").get<Bit>();
        secrets.r[u] = payload.at("r").get<Bit>();
        secrets.theta[u] = Angle(payload.at("theta").get<int>());
      } else if (type == "trap") {
        const Vertex u = need_vertex();
        plan.traps.push_back(u);
        plan.trap_theta[u] = Angle(payload.at("theta").get<int>());
        plan.trap_r[u] = payload.at("r").get<Bit>();
      } else if (type == "dummy") {
        plan.dummy_bits[need_vertex()] = payload.at("d").get<Bit>();
      } else if (type == "qubit") {
        need_vertex();
      } else if (type == "prepared") {
        const Vertex u = need_vertex();
        const std::string state = payload.at("state").get<std::string>();
        if (state == "plus") {
          t.sent[u] = QubitPreparation::plus(Angle(payload.at("theta").get<int>()));
        } else if (state == "computational") {
          t.sent[u] = QubitPreparation::computational(payload.at("bit").get<Bit>());
        } else {
          fail("unknown qubit state " + state);
        }
      } else if (type == "entangle") {
      } else if (type == "delta") {
        const Vertex u = need_vertex();
        t.order.push_back(u);
        t.delta[u] = Angle(payload.at("angle").get<int>());
      } else if (type == "bit") {
        t.b[need_vertex()] = payload.at("value").get<Bit>();
      } else if (type == "output") {
        t.output = payload.at("bits").get<mbqc::OutputBits>();
      } else if (type == "verdict") {
        t.passed = payload.at("passed").get<bool>();
      } else {
        fail("unknown message type " + type);
      }
      if ((direction == "to_server") != (type == "qubit" || type == "entangle" || type == "delta") ||
          (direction == "to_client") != (type == "bit")) {
        fail("message " + type + " has wrong direction " + direction);
      }
    } catch (const BadLine& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": " + e.message);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (!header) throw Error(ErrorCode::ParseError, "line 1: empty transcript");
  if (t.kind == RoundKind::Computation) {
    if (!secrets.theta.empty()) {
      secrets.a_prop = parsed.pattern ? propagate_a_init(parsed.pattern->graph(), secrets.a_init)
                                      : std::map<Vertex, Bit>{};
      t.secrets = std::move(secrets);
    }
  } else {
    std::sort(plan.traps.begin(), plan.traps.end());
    t.plan = std::move(plan);
  }
  return parsed;
}

}  // namespace vboe::ubqc
