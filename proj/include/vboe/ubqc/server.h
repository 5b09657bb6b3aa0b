#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "vboe/quantum/quantum_memory.h"
#include "vboe/types.h"

namespace vboe::ubqc {

// What the client talks to. A server sees qubits and angles only; nothing in
// this interface tells it whether a round is a computation or a test.
class Server {
 public:
  virtual ~Server() = default;

  virtual void receive_qubit(Vertex v, quantum::QubitHandle qubit) = 0;
  virtual void entangle() = 0;
  // nullopt means the server gave no answer; clients turn that into
  // ServerTimeout.
  virtual std::optional<Bit> measure(Vertex v, Angle delta) = 0;
};

// Builds the server instance for one round. The round index is the only
// per-round information a strategy gets.
using ServerFactory = std::function<std::unique_ptr<Server>(std::size_t round, std::uint64_t seed)>;

}  // namespace vboe::ubqc
