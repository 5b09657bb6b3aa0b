#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vboe/protocol/params.h"
#include "vboe/trap/test_round.h"
#include "vboe/ubqc/server.h"
#include "vboe/ubqc/transcript.h"

namespace vboe::protocol {

using ubqc::RoundKind;

struct RoundSchedule {
  std::vector<RoundKind> kinds;
  std::vector<std::size_t> computation;  // S_C, ascending
  std::vector<std::size_t> test;         // S_T, ascending
};

// Test positions uniform over all C(N_c + N_t, N_t) subsets. Throws
// InvalidParams if either count is zero.
RoundSchedule sample_schedule(std::size_t n_c, std::size_t n_t, Rng& rng);

struct RoundSummary {
  RoundKind kind = RoundKind::Computation;
  bool attacked = false;
  Bit output = 0;               // computation rounds
  bool passed = true;           // test rounds
  std::size_t failed_traps = 0;  // test rounds
};

struct Verdict {
  bool accepted = false;
  double estimate = 0.0;  // meaningful only when accepted
  std::size_t failed_tests = 0;
  std::size_t attacked_computation = 0;
  std::size_t attacked_test = 0;
  std::vector<RoundSummary> rounds;
  ProtocolParams params;
  std::uint64_t seed = 0;
};

std::string verdict_to_json(const Verdict& verdict);

// Strict rule: accept iff failed_tests < w N_t.
bool accepts(const ProtocolParams& params, std::size_t failed_tests);

// Runs the protocol against one server instance per round. Round seeds are
// derived from `seed` by round index, so the verdict does not depend on
// `threads`. `attacked` (indexed by round) only feeds the diagnostics; the
// factory decides on its own which rounds it deviates in.
//
// Throws InvalidParams if the params fail validation or k is smaller than
// the number of colour classes of the greedy colouring, and InvalidPattern
// unless the pattern has exactly one output.
Verdict run_vboe(const mbqc::MeasurementPattern& pattern, const ProtocolParams& params,
                 const ubqc::ServerFactory& servers, std::uint64_t seed, const std::vector<bool>& attacked = {},
                 std::size_t threads = 1);

// The server's side of the ideal resource when it asks for full access:
// given a seed, produce a scalar or nullopt for Abort.
using ServerProgram = std::function<std::optional<double>(std::uint64_t seed)>;

// The concrete protocol run against `servers`, as a server program.
ServerProgram protocol_program(const mbqc::MeasurementPattern& pattern, const ProtocolParams& params,
                               ubqc::ServerFactory servers, std::vector<bool> attacked = {});

// Secure delegated observable estimation. Without a deviation the estimate
// is the mean of N_c Bernoulli(p) draws with p from the exact oracle; with
// one, the program's output. Either way the result is replaced by Abort
// when it is Abort or at distance >= epsilon from p. Throws InvalidParams.
Verdict sdoe_ideal(const mbqc::MeasurementPattern& pattern, const ProtocolParams& params,
                   const std::optional<ServerProgram>& deviation, std::uint64_t seed);

// Secure delegated quantum computation: the correct output when d = 0,
// Reject when d = 1.
trap::RvbqcVerdict sdqc_ideal(const mbqc::MeasurementPattern& pattern, Bit d, Rng& rng);

}  // namespace vboe::protocol
