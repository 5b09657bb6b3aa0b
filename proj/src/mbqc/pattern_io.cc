#include "vboe/mbqc/pattern_io.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vboe::mbqc {

using nlohmann::json;

namespace {

const std::set<std::string> kKeys = {"vertices", "edges", "inputs", "outputs", "angles", "flow", "order"};

class PatternReader {
 public:
  explicit PatternReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_of_key(key)) + ": " + key + ": " + message);
  }

  std::size_t line_of_key(const std::string& key) const {
    const auto pos = text_.find("\"" + key + "\"");
    return pos == std::string_view::npos ? 1 : line_of_offset(text_, pos);
  }

  Vertex vertex(const json& j, const std::string& key) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(key, "vertex ids must be non-negative integers");
    return static_cast<Vertex>(j.get<long long>());
  }

  Vertex vertex_key(const std::string& s, const std::string& key) const {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return static_cast<Vertex>(v);
    } catch (const std::exception&) {
      fail(key, "object key \"" + s + "\" is not a vertex id");
    }
  }

  std::vector<Vertex> vertex_list(const json& doc, const std::string& key) const {
    if (!doc.contains(key)) fail(key, "missing required key");
    const json& arr = doc.at(key);
    if (!arr.is_array()) fail(key, "expected an array of vertex ids");
    std::vector<Vertex> out;
    for (const auto& item : arr) out.push_back(vertex(item, key));
    return out;
  }

  MeasurementPattern read() const {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "line 1: pattern must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (!kKeys.contains(key)) fail(key, "unknown key");
    }

    const auto vertices = vertex_list(doc, "vertices");
    std::vector<Edge> edges;
    if (!doc.contains("edges") || !doc["edges"].is_array()) fail("edges", "expected an array of [a, b] pairs");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) fail("edges", "each edge must be a pair [a, b]");
      edges.emplace_back(vertex(e[0], "edges"), vertex(e[1], "edges"));
    }
    const auto inputs = vertex_list(doc, "inputs");
    const auto outputs = vertex_list(doc, "outputs");

    std::map<Vertex, Angle> angles;
    if (doc.contains("angles")) {
      if (!doc["angles"].is_object()) fail("angles", "expected an object {\"vertex\": units}");
      for (const auto& [k, v] : doc["angles"].items()) {
        if (!v.is_number_integer()) fail("angles", "angle of vertex " + k + " must be an integer");
        angles[vertex_key(k, "angles")] = Angle(static_cast<int>(v.get<long long>() % Angle::kCount));
      }
    }
    Flow flow;
    if (!doc.contains("flow") || !doc["flow"].is_object()) fail("flow", "expected an object {\"v\": f(v)}");
    for (const auto& [k, v] : doc["flow"].items()) {
      flow.successor[vertex_key(k, "flow")] = vertex(v, "flow");
    }
    flow.order = vertex_list(doc, "order");

    Graph graph;
    try {
      graph = Graph(vertices, edges);
    } catch (const Error& e) {
      const std::string what = e.what();
      fail(what.find("edge") != std::string::npos || what.find("self-loop") != std::string::npos
               ? "edges"
               : "vertices",
           what);
    }
    // Ordering conditions point at "order", successor conditions at "flow".
    const FlowReport report = validate_flow(graph, inputs, outputs, flow);
    const auto in_graph = [&](const std::vector<Vertex>& vs) {
      return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return graph.has_vertex(v); });
    };
    if (!report.valid() && in_graph(inputs) && in_graph(outputs)) {
      const auto& first = report.violations.front();
      const bool about_order = first.condition >= 2 || first.detail.find("order") != std::string::npos;
      fail(about_order ? "order" : "flow", first.detail);
    }
    try {
      return MeasurementPattern(std::move(graph), inputs, outputs, std::move(angles), std::move(flow));
    } catch (const Error& e) {
      const std::string what = e.what();
      std::string key = "flow";
      if (what.find("input ") != std::string::npos && e.code() == ErrorCode::InvalidPattern) key = "inputs";
      if (what.find("output ") != std::string::npos && e.code() == ErrorCode::InvalidPattern) key = "outputs";
      if (what.find("angle") != std::string::npos) key = "angles";
      if (what.find("order") != std::string::npos) key = "order";
      fail(key, what);
    }
  }

 private:
  std::string_view text_;
};

}  // namespace

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

MeasurementPattern parse_pattern(std::string_view text) { return PatternReader(text).read(); }

MeasurementPattern load_pattern(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open pattern file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern(buffer.str());
}

std::string pattern_to_json(const MeasurementPattern& pattern) {
  json doc;
  doc["vertices"] = pattern.graph().vertices();
  json edges = json::array();
  for (const auto& [a, b] : pattern.graph().edges()) edges.push_back({a, b});
  doc["edges"] = edges;
  doc["inputs"] = pattern.inputs();
  doc["outputs"] = pattern.outputs();
  json angles = json::object();
  for (const auto& [v, a] : pattern.angles()) angles[std::to_string(v)] = a.units();
  doc["angles"] = angles;
  json flow = json::object();
  for (const auto& [v, f] : pattern.flow().successor) flow[std::to_string(v)] = f;
  doc["flow"] = flow;
  doc["order"] = pattern.order();
  return doc.dump(2);
}

}  // namespace vboe::mbqc
