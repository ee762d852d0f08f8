#pragma once

#include <stdexcept>
#include <string>

namespace cclique {

/// Malformed input files (Matrix Market, edge lists).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A protocol broke the simulation contract: a message to a node that does
/// not exist, a send from a local-only step, or a request the target cannot
/// answer from its own state.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph algorithms that need a connected input.
class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cclique
