#include "vboe/harness/experiment.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "vboe/adversary/detection.h"
#include "vboe/mbqc/dmbqc.h"
#include "vboe/mbqc/enumerate.h"
#include "vboe/parallel.h"
#include "vboe/protocol/vboe.h"
#include "vboe/stats/bounds.h"
#include "vboe/stats/estimators.h"
#include "vboe/trap/test_round.h"
#include "vboe/ubqc/blindness.h"

namespace vboe::harness {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Strips the "Code: " prefix Error adds, so the message can be rewrapped.
std::string bare_message(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(vboe::to_string(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Runs body(t) for every trial and tags any Error with the trial index.
template <typename Body>
void for_each_trial(std::size_t trials, std::size_t threads, const std::string& label, Body&& body) {
  parallel_for(trials, threads, [&](std::size_t t) {
    try {
      body(t);
    } catch (const Error& e) {
      throw Error(e.code(), label + "trial " + std::to_string(t) + ": " + bare_message(e));
    }
  });
}

std::string number(double x) { return json(x).dump(); }

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : width_(header.size()) { row(header); }

  void row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::logic_error("csv row width");
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  std::size_t width_;
  std::ostringstream out_;
};

struct Context {
  const ExperimentConfig& config;
  std::size_t threads;
  ordered_json results = ordered_json::object();
  std::vector<Assertion> assertions;
  std::string csv;

  void check(std::string name, bool passed, std::string detail) {
    assertions.push_back({std::move(name), passed, std::move(detail)});
  }
};

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Frequency limit for an event whose probability is at most `bound`: the
// bound plus three standard errors evaluated at the bound.
double with_noise(double bound, std::size_t trials) {
  return bound + 3.0 * stats::standard_error(clamp01(bound), trials);
}

ordered_json bound_json(const stats::BoundReport& b) {
  return ordered_json{{"m0", b.m0},
                      {"gamma1_term", b.gamma1_term},
                      {"boundz_term", b.boundz_term},
                      {"boundy_term_test", b.boundy_term_test},
                      {"boundy_term_binom", b.boundy_term_binom},
                      {"total", b.total}};
}

enum class Event { Abort, Close, Far };

const char* to_string(Event e) {
  switch (e) {
    case Event::Abort: return "abort";
    case Event::Close: return "close";
    case Event::Far: return "far";
  }
  return "?";
}

Event classify(const protocol::Verdict& v, double p, double epsilon) {
  if (!v.accepted) return Event::Abort;
  return std::abs(v.estimate - p) >= epsilon ? Event::Far : Event::Close;
}

ordered_json verdict_row(std::size_t t, std::uint64_t seed, const protocol::Verdict& v, Event e) {
  return ordered_json{{"trial", t},
                      {"seed", seed},
                      {"event", to_string(e)},
                      {"estimate", v.accepted ? ordered_json(v.estimate) : ordered_json(nullptr)},
                      {"failed_tests", v.failed_tests},
                      {"attacked_computation", v.attacked_computation},
                      {"attacked_test", v.attacked_test}};
}

std::uint64_t trial_seed(const ExperimentConfig& c, std::uint64_t group, std::uint64_t t) {
  return derive_seed(c.seed, {group, t});
}

void honest_acceptance(Context& ctx) {
  const auto& c = ctx.config;
  const auto& pattern = *c.pattern;
  const double p = mbqc::output_one_probability(pattern);
  const auto servers = adversary::honest_factory(pattern.graph());
  std::vector<protocol::Verdict> verdicts(c.trials);
  for_each_trial(c.trials, ctx.threads, "", [&](std::size_t t) {
    verdicts[t] = protocol::run_vboe(pattern, c.params, servers, trial_seed(c, 0, t));
  });

  std::size_t aborts = 0;
  std::size_t far = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  ordered_json rows = ordered_json::array();
  for (std::size_t t = 0; t < c.trials; ++t) {
    const auto& v = verdicts[t];
    const Event e = classify(v, p, c.params.epsilon);
    aborts += e == Event::Abort;
    far += e == Event::Far;
    if (v.accepted) {
      sum += v.estimate;
      sum_sq += v.estimate * v.estimate;
    }
    rows.push_back(verdict_row(t, trial_seed(c, 0, t), v, e));
  }
  const std::size_t accepted = c.trials - aborts;
  const double mean = accepted ? sum / static_cast<double>(accepted) : 0.0;
  const double var = accepted > 1 ? (sum_sq - accepted * mean * mean) / static_cast<double>(accepted - 1) : 0.0;
  const double trials = static_cast<double>(c.trials);
  const double far_freq = static_cast<double>(far) / trials;
  const double bound = clamp01(stats::hoeffding_mean_bound(c.params.epsilon, c.params.n_c));
  const double limit = with_noise(bound, c.trials);

  ctx.results = ordered_json{{"p", p},
                             {"trials", c.trials},
                             {"aborts", aborts},
                             {"abort_frequency", static_cast<double>(aborts) / trials},
                             {"far", far},
                             {"far_frequency", far_freq},
                             {"far_standard_error", stats::standard_error(far_freq, c.trials)},
                             {"hoeffding_bound", bound},
                             {"far_limit", limit},
                             {"mean_estimate", mean},
                             {"estimate_standard_error", std::sqrt(std::max(0.0, var) / std::max(1.0, double(accepted)))},
                             {"verdicts", rows}};
  ctx.check("no_aborts", aborts == 0, std::to_string(aborts) + " of " + std::to_string(c.trials) + " runs aborted");
  ctx.check("far_within_hoeffding", far_freq <= limit,
            "far frequency " + number(far_freq) + " vs bound + 3 SE " + number(limit));

  Csv csv({"trials", "p", "abort_frequency", "far_frequency", "hoeffding_bound", "far_limit", "mean_estimate"});
  csv.row({std::to_string(c.trials), number(p), number(static_cast<double>(aborts) / trials), number(far_freq),
           number(bound), number(limit), number(mean)});
  ctx.csv = csv.str();
}

void attack_detection(Context& ctx) {
  const auto& c = ctx.config;
  const auto frame = c.adversary ? c.adversary->frame : adversary::PauliFrame::Measurement;

  std::vector<mbqc::Graph> graphs;
  std::vector<std::vector<Vertex>> orders;
  if (c.pattern) {
    graphs.push_back(c.pattern->graph());
    orders.push_back(c.pattern->order());
  } else {
    for (int n = 1; n <= 4; ++n) {
      for (auto& g : mbqc::connected_graphs(n)) {
        orders.push_back(g.vertices());
        graphs.push_back(std::move(g));
      }
    }
  }

  struct Row {
    std::size_t graph;
    Vertex vertex;
    quantum::Pauli pauli;
    std::size_t colours;
    stats::Rational exact;
    bool effective;
    std::size_t failures = 0;
  };
  std::vector<Row> rows;
  std::vector<trap::Coloring> colorings;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    colorings.push_back(trap::greedy_coloring(graphs[g]));
    for (Vertex v : graphs[g].vertices()) {
      for (auto pauli : {quantum::Pauli::X, quantum::Pauli::Y, quantum::Pauli::Z}) {
        // In the measurement frame X commutes with the readout and leaves
        // the answer distribution untouched.
        const bool effective = !(frame == adversary::PauliFrame::Measurement && pauli == quantum::Pauli::X);
        rows.push_back({g, v, pauli, colorings[g].size(),
                        adversary::exact_test_failure(graphs[g], colorings[g], {{v, pauli}}, frame), effective});
      }
    }
  }

  for (std::size_t d = 0; d < rows.size(); ++d) {
    Row& row = rows[d];
    const auto& graph = graphs[row.graph];
    std::vector<char> failed(c.trials, 0);
    for_each_trial(c.trials, ctx.threads, "deviation " + std::to_string(d) + ", ", [&](std::size_t t) {
      Rng rng(derive_seed(c.seed, {d, t, 0}));
      const auto plan = trap::build_test_round(graph, colorings[row.graph], rng);
      auto server =
          adversary::pauli_attack_server(graph, {{row.vertex, row.pauli}}, derive_seed(c.seed, {d, t, 1}), frame);
      failed[t] = !trap::run_test_round(plan, graph, *server, rng, orders[row.graph]).passed;
    });
    row.failures = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
  }

  bool floor_ok = true;
  bool invisible_ok = true;
  bool mc_ok = true;
  bool mc_floor_ok = true;
  std::size_t effective_count = 0;
  ordered_json out = ordered_json::array();
  Csv csv({"graph", "vertices", "edges", "colours", "vertex", "pauli", "effective", "exact", "exact_value",
           "monte_carlo", "floor"});
  for (const auto& row : rows) {
    const auto& graph = graphs[row.graph];
    const double exact = static_cast<double>(row.exact);
    const double mc = static_cast<double>(row.failures) / static_cast<double>(c.trials);
    const double floor = 1.0 / static_cast<double>(row.colours);
    const double se = stats::standard_error(clamp01(exact), c.trials);
    const bool meets_floor = row.exact * static_cast<long>(row.colours) >= 1;
    if (row.effective) {
      ++effective_count;
      floor_ok = floor_ok && meets_floor;
      mc_floor_ok = mc_floor_ok && mc >= floor - std::max(0.02, 4.0 * stats::standard_error(floor, c.trials));
    } else {
      invisible_ok = invisible_ok && row.exact == 0;
    }
    mc_ok = mc_ok && std::abs(mc - exact) <= 4.0 * se + 1e-12;

    json edges = json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
    out.push_back(ordered_json{{"graph", row.graph},
                               {"vertices", graph.vertices()},
                               {"edges", edges},
                               {"colours", row.colours},
                               {"vertex", row.vertex},
                               {"pauli", quantum::to_string(row.pauli)},
                               {"effective", row.effective},
                               {"exact", row.exact.str()},
                               {"exact_value", exact},
                               {"monte_carlo", mc},
                               {"floor", floor},
                               {"meets_floor", meets_floor}});
    csv.row({std::to_string(row.graph), std::to_string(graph.vertices().size()), std::to_string(graph.edges().size()),
             std::to_string(row.colours), std::to_string(row.vertex), quantum::to_string(row.pauli),
             row.effective ? "1" : "0", row.exact.str(), number(exact), number(mc), number(floor)});
  }
  ctx.results = ordered_json{{"frame", adversary::to_string(frame)},
                             {"graphs", graphs.size()},
                             {"deviations", rows.size()},
                             {"effective_deviations", effective_count},
                             {"rounds_per_deviation", c.trials},
                             {"rows", out}};
  ctx.check("exact_floor", floor_ok, "every effective single-vertex Pauli fails a test round w.p. >= 1/K");
  ctx.check("ineffective_invisible", invisible_ok, "deviations that commute with the readout never fail a test");
  ctx.check("monte_carlo_matches_exact", mc_ok, "simulated failure rates within 4 SE of the exact values");
  ctx.check("monte_carlo_floor", mc_floor_ok, "simulated rates of effective deviations >= 1/K - max(0.02, 4 SE)");
  ctx.csv = csv.str();
}

void security_frequency(Context& ctx) {
  const auto& c = ctx.config;
  const auto& pattern = *c.pattern;
  const double p = mbqc::output_one_probability(pattern);
  const std::size_t total_rounds = c.params.n_c + c.params.n_t;
  const auto bound = stats::security_failure_bound(c.params);
  const double limit = with_noise(bound.total, c.trials);

  ordered_json rows = ordered_json::array();
  Csv csv({"attack_fraction", "m", "trials", "accept_frequency", "bad_frequency", "standard_error", "bound",
           "limit", "passed"});
  for (std::size_t fi = 0; fi < c.attack_fractions.size(); ++fi) {
    const double fraction = c.attack_fractions[fi];
    adversary::DeviationSpec spec = *c.adversary;
    spec.count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(total_rounds)));
    std::vector<protocol::Verdict> verdicts(c.trials);
    for_each_trial(c.trials, ctx.threads, "fraction " + number(fraction) + ", ", [&](std::size_t t) {
      Rng pick(derive_seed(c.seed, {fi, t, 1}));
      auto attacked = adversary::choose_attacked_rounds(spec, total_rounds, pick);
      const auto servers = adversary::make_server_factory(pattern.graph(), spec, attacked);
      verdicts[t] = protocol::run_vboe(pattern, c.params, servers, derive_seed(c.seed, {fi, t, 0}), attacked);
    });
    std::size_t accepted = 0;
    std::size_t bad = 0;
    std::size_t failed_tests = 0;
    for (const auto& v : verdicts) {
      const Event e = classify(v, p, c.params.epsilon);
      accepted += e != Event::Abort;
      bad += e == Event::Far;
      failed_tests += v.failed_tests;
    }
    const double trials = static_cast<double>(c.trials);
    const double freq = static_cast<double>(bad) / trials;
    const bool ok = freq <= limit;
    rows.push_back(ordered_json{{"attack_fraction", fraction},
                                {"m", *spec.count},
                                {"accept_frequency", static_cast<double>(accepted) / trials},
                                {"bad", bad},
                                {"bad_frequency", freq},
                                {"standard_error", stats::standard_error(freq, c.trials)},
                                {"mean_failed_tests", static_cast<double>(failed_tests) / trials},
                                {"bound", bound.total},
                                {"limit", limit},
                                {"passed", ok}});
    csv.row({number(fraction), std::to_string(*spec.count), std::to_string(c.trials),
             number(static_cast<double>(accepted) / trials), number(freq),
             number(stats::standard_error(freq, c.trials)), number(bound.total), number(limit), ok ? "1" : "0"});
    ctx.check("bad_within_bound[m=" + std::to_string(*spec.count) + "]", ok,
              "Pr[accept and far] frequency " + number(freq) + " vs bound + 3 SE " + number(limit));
  }
  ctx.results = ordered_json{{"p", p}, {"trials", c.trials}, {"bound", bound_json(bound)}, {"fractions", rows}};
  ctx.csv = csv.str();
}

void blindness_audit(Context& ctx) {
  const auto& c = ctx.config;
  const std::vector<mbqc::MeasurementPattern> patterns =
      c.pattern ? std::vector<mbqc::MeasurementPattern>{*c.pattern} : mbqc::enumerate_flow_patterns(3);
  constexpr double kTolerance = 1e-9;

  struct Row {
    std::size_t pattern;
    std::map<Vertex, Angle> a;
    std::map<Vertex, Angle> b;
    ubqc::BlindnessAudit audit;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& vertices = patterns[i].graph().vertices();
    for (std::size_t j = 0; j < c.trials; ++j) {
      Rng rng(derive_seed(c.seed, {i, j}));
      auto draw = [&] {
        std::map<Vertex, Angle> angles;
        for (Vertex v : vertices) angles[v] = rng.angle();
        return angles;
      };
      std::map<Vertex, Angle> a = (c.pattern && j == 0) ? patterns[i].angles() : draw();
      for (Vertex v : vertices) a.emplace(v, Angle(0));
      std::map<Vertex, Angle> b = draw();
      while (b == a) b = draw();
      rows.push_back({i, std::move(a), std::move(b), {}});
    }
  }
  for_each_trial(rows.size(), ctx.threads, "audit ", [&](std::size_t r) {
    const auto& p = patterns[rows[r].pattern];
    rows[r].audit = ubqc::audit_blindness(p.with_angles(rows[r].a), p.with_angles(rows[r].b));
  });

  auto angles_json = [](const std::map<Vertex, Angle>& m) {
    ordered_json j = ordered_json::object();
    for (const auto& [v, a] : m) j[std::to_string(v)] = a.units();
    return j;
  };
  double worst_view = 0.0;
  double worst_delta = 0.0;
  double worst_mixed = 0.0;
  ordered_json out = ordered_json::array();
  Csv csv({"pattern", "vertices", "edges", "inputs", "outputs", "max_view_difference", "max_delta_weight_error",
           "max_mixedness_error"});
  for (const auto& row : rows) {
    const auto& p = patterns[row.pattern];
    worst_view = std::max(worst_view, row.audit.max_view_difference);
    worst_delta = std::max(worst_delta, row.audit.max_delta_weight_error);
    worst_mixed = std::max(worst_mixed, row.audit.max_mixedness_error);
    json edges = json::array();
    for (const auto& [a, b] : p.graph().edges()) edges.push_back({a, b});
    out.push_back(ordered_json{{"pattern", row.pattern},
                               {"vertices", p.graph().vertices()},
                               {"edges", edges},
                               {"inputs", p.inputs()},
                               {"outputs", p.outputs()},
                               {"angles_a", angles_json(row.a)},
                               {"angles_b", angles_json(row.b)},
                               {"max_view_difference", row.audit.max_view_difference},
                               {"max_delta_weight_error", row.audit.max_delta_weight_error},
                               {"max_mixedness_error", row.audit.max_mixedness_error}});
    csv.row({std::to_string(row.pattern), std::to_string(p.graph().vertices().size()),
             std::to_string(p.graph().edges().size()), std::to_string(p.inputs().size()),
             std::to_string(p.outputs().size()), number(row.audit.max_view_difference),
             number(row.audit.max_delta_weight_error), number(row.audit.max_mixedness_error)});
  }
  ctx.results = ordered_json{{"patterns", patterns.size()},
                             {"angle_pairs", rows.size()},
                             {"tolerance", kTolerance},
                             {"max_view_difference", worst_view},
                             {"max_delta_weight_error", worst_delta},
                             {"max_mixedness_error", worst_mixed},
                             {"audits", out}};
  ctx.check("views_identical", worst_view <= kTolerance,
            "largest entrywise view difference " + number(worst_view));
  ctx.check("delta_uniform", worst_delta <= kTolerance, "largest |Pr[delta | b] - 8^-n| " + number(worst_delta));
  ctx.check("states_maximally_mixed", worst_mixed <= kTolerance,
            "largest deviation from I/2^n " + number(worst_mixed));
  ctx.csv = csv.str();
}

void real_vs_ideal(Context& ctx) {
  const auto& c = ctx.config;
  const auto& pattern = *c.pattern;
  const double p = mbqc::output_one_probability(pattern);
  const std::size_t total_rounds = c.params.n_c + c.params.n_t;
  std::vector<protocol::Verdict> real(c.trials);
  std::vector<protocol::Verdict> ideal(c.trials);
  for_each_trial(c.trials, ctx.threads, "", [&](std::size_t t) {
    const std::uint64_t seed = trial_seed(c, 0, t);
    std::vector<bool> attacked;
    ubqc::ServerFactory servers = adversary::honest_factory(pattern.graph());
    if (c.adversary) {
      Rng pick(derive_seed(c.seed, {1, t}));
      attacked = adversary::choose_attacked_rounds(*c.adversary, total_rounds, pick);
      servers = adversary::make_server_factory(pattern.graph(), c.adversary, attacked);
    }
    real[t] = protocol::run_vboe(pattern, c.params, servers, seed, attacked);
    std::optional<protocol::ServerProgram> program;
    if (c.adversary) program = protocol::protocol_program(pattern, c.params, servers, attacked);
    ideal[t] = protocol::sdoe_ideal(pattern, c.params, program, seed);
  });

  // Abort is encoded as -1 so that estimates and verdicts share one sample.
  std::vector<double> real_values;
  std::vector<double> ideal_values;
  std::vector<int> real_events;
  std::vector<int> ideal_events;
  std::array<std::size_t, 3> real_counts{};
  std::array<std::size_t, 3> ideal_counts{};
  ordered_json rows = ordered_json::array();
  for (std::size_t t = 0; t < c.trials; ++t) {
    const Event re = classify(real[t], p, c.params.epsilon);
    const Event ie = classify(ideal[t], p, c.params.epsilon);
    real_values.push_back(real[t].accepted ? real[t].estimate : -1.0);
    ideal_values.push_back(ideal[t].accepted ? ideal[t].estimate : -1.0);
    real_events.push_back(static_cast<int>(re));
    ideal_events.push_back(static_cast<int>(ie));
    ++real_counts[static_cast<std::size_t>(re)];
    ++ideal_counts[static_cast<std::size_t>(ie)];
    rows.push_back(ordered_json{{"trial", t},
                                {"seed", trial_seed(c, 0, t)},
                                {"real", to_string(re)},
                                {"real_estimate", real[t].accepted ? ordered_json(real[t].estimate) : ordered_json(nullptr)},
                                {"ideal", to_string(ie)},
                                {"ideal_estimate",
                                 ideal[t].accepted ? ordered_json(ideal[t].estimate) : ordered_json(nullptr)}});
  }
  const double estimate_tvd = stats::tvd_estimate(real_values, ideal_values);
  const double event_tvd = stats::tvd_estimate(real_events, ideal_events);

  double bound = 0.0;
  std::string bound_source;
  double noise = 0.0;
  const double trials = static_cast<double>(c.trials);
  if (c.adversary) {
    // The ideal world runs the same program on the same seed, so the two
    // samples are coupled and differ exactly on the clamped runs.
    bound = stats::security_failure_bound(c.params).total;
    bound_source = "security_failure_bound";
    noise = 3.0 * stats::standard_error(clamp01(bound), c.trials);
  } else {
    bound = clamp01(stats::hoeffding_mean_bound(c.params.epsilon, c.params.n_c));
    bound_source = "hoeffding";
    // Independent samples: three standard errors per cell of the difference.
    for (std::size_t i = 0; i < 3; ++i) {
      const double q = static_cast<double>(real_counts[i] + ideal_counts[i]) / (2.0 * trials);
      noise += 0.5 * 3.0 * std::sqrt(2.0 * q * (1.0 - q) / trials);
    }
  }
  const double limit = bound + noise;
  auto counts_json = [&](const std::array<std::size_t, 3>& counts) {
    return ordered_json{{"abort", counts[0]}, {"close", counts[1]}, {"far", counts[2]}};
  };
  ctx.results = ordered_json{{"p", p},
                             {"trials", c.trials},
                             {"real_events", counts_json(real_counts)},
                             {"ideal_events", counts_json(ideal_counts)},
                             {"event_tvd", event_tvd},
                             {"estimate_tvd", estimate_tvd},
                             {"bound", bound},
                             {"bound_source", bound_source},
                             {"limit", limit},
                             {"pairs", rows}};
  ctx.check("event_tvd_within_bound", event_tvd <= limit,
            "TVD over {abort, close, far} " + number(event_tvd) + " vs " + number(limit));
  Csv csv({"trials", "p", "real_abort", "real_close", "real_far", "ideal_abort", "ideal_close", "ideal_far",
           "event_tvd", "estimate_tvd", "bound", "limit"});
  csv.row({std::to_string(c.trials), number(p), std::to_string(real_counts[0]), std::to_string(real_counts[1]),
           std::to_string(real_counts[2]), std::to_string(ideal_counts[0]), std::to_string(ideal_counts[1]),
           std::to_string(ideal_counts[2]), number(event_tvd), number(estimate_tvd), number(bound), number(limit)});
  ctx.csv = csv.str();
}

void bound_tables(Context& ctx) {
  const auto& c = ctx.config;
  std::vector<std::size_t> sizes = c.bound_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  ordered_json rows = ordered_json::array();
  Csv csv({"n_c", "n_t", "m0", "gamma1_term", "boundz_term", "boundy_term_test", "boundy_term_binom", "total",
           "hoeffding"});
  std::vector<stats::BoundReport> reports;
  std::vector<double> hoeffding;
  for (std::size_t n : sizes) {
    auto params = c.params;
    params.n_c = n;
    params.n_t = n;
    reports.push_back(stats::security_failure_bound(params));
    hoeffding.push_back(clamp01(stats::hoeffding_mean_bound(params.epsilon, n)));
    auto row = bound_json(reports.back());
    row["n_c"] = n;
    row["n_t"] = n;
    row["hoeffding"] = hoeffding.back();
    rows.push_back(row);
    const auto& b = reports.back();
    csv.row({std::to_string(n), std::to_string(n), number(b.m0), number(b.gamma1_term), number(b.boundz_term),
             number(b.boundy_term_test), number(b.boundy_term_binom), number(b.total), number(hoeffding.back())});
  }
  bool monotone = true;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto& a = reports[i - 1];
    const auto& b = reports[i];
    monotone = monotone && b.gamma1_term <= a.gamma1_term && b.boundz_term <= a.boundz_term &&
               b.boundy_term_test <= a.boundy_term_test && b.boundy_term_binom <= a.boundy_term_binom &&
               b.total <= a.total && hoeffding[i] <= hoeffding[i - 1];
  }
  ctx.results = ordered_json{{"rows", rows}};
  ctx.check("columns_monotone", monotone, "every bound term is non-increasing in N_c = N_t");
  ctx.csv = csv.str();
}

}  // namespace

bool ExperimentReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

ExperimentReport run_experiment(const ExperimentConfig& config, std::size_t threads) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();
  Context ctx{config, threads, ordered_json::object(), {}, {}};
  switch (config.kind) {
    case ExperimentKind::HonestAcceptance: honest_acceptance(ctx); break;
    case ExperimentKind::AttackDetection: attack_detection(ctx); break;
    case ExperimentKind::SecurityFrequency: security_frequency(ctx); break;
    case ExperimentKind::BlindnessAudit: blindness_audit(ctx); break;
    case ExperimentKind::RealVsIdeal: real_vs_ideal(ctx); break;
    case ExperimentKind::BoundTables: bound_tables(ctx); break;
  }

  ExperimentReport report;
  report.assertions = std::move(ctx.assertions);
  report.summary_csv = std::move(ctx.csv);
  ordered_json assertions = ordered_json::array();
  for (const auto& a : report.assertions) {
    assertions.push_back(ordered_json{{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  ordered_json doc;
  doc["kind"] = to_string(config.kind);
  doc["config"] = ordered_json::parse(config_to_json(config));
  doc["seed"] = config.seed;
  doc["seed_source"] = config.seed_source;
  doc["results"] = std::move(ctx.results);
  doc["assertions"] = std::move(assertions);
  doc["passed"] = report.passed();
  report.json = doc.dump(2) + "\n";
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace vboe::harness
