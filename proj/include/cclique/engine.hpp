#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cclique/graph.hpp"
#include "cclique/semiring.hpp"

namespace cclique {

/// One O(log n)-bit message: a tag plus two indices and a scalar. Matrix
/// entries travel with their coordinates in `first`/`second`.
struct Word {
  std::uint16_t tag = 0;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  Value value = 0;

  friend bool operator==(const Word&, const Word&) = default;
};

struct Message {
  NodeId src = 0;
  NodeId dst = 0;
  Word word;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Cost of one routing wave.
struct LedgerEntry {
  std::string phase;
  std::uint64_t rounds = 0;
  std::uint64_t max_send = 0;
  std::uint64_t max_recv = 0;
  std::uint64_t total_msgs = 0;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Per-wave accounting. Messages a node addresses to itself are local and
/// never charged.
class RoundLedger {
 public:
  void record(LedgerEntry entry) { entries_.push_back(std::move(entry)); }
  /// Copies every entry of `other`, prefixing its phase label.
  void append(const RoundLedger& other, std::string_view prefix = {});

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  std::uint64_t total_rounds() const;
  std::uint64_t total_messages() const;
  /// Sum of rounds over entries whose label starts with `prefix`.
  std::uint64_t rounds_with_prefix(std::string_view prefix) const;
  /// Largest max_send / max_recv over entries whose label starts with `prefix`.
  std::uint64_t max_send_with_prefix(std::string_view prefix) const;
  std::uint64_t max_recv_with_prefix(std::string_view prefix) const;
  /// Entries whose label ends with `suffix`.
  std::size_t count_with_suffix(std::string_view suffix) const;

  /// CSV with header `phase,rounds,max_send,max_recv,total_msgs`.
  void write_csv(std::ostream& out) const;

  friend bool operator==(const RoundLedger&, const RoundLedger&) = default;

 private:
  std::vector<LedgerEntry> entries_;
};

struct EngineOptions {
  /// Rounds charged per full (n-1)-message load; the routing scheme's
  /// hidden constant.
  std::uint64_t lenzen_constant = 1;
  /// Run node handlers on worker threads within each step.
  bool parallel = false;
  unsigned threads = 0;
};

/// What a node handler sees: its id, the messages delivered to it at the
/// last round boundary, and a way to emit messages. A handler can reach its
/// own slot of a NodeLocal only through this context.
class NodeContext {
 public:
  NodeId id() const { return id_; }
  std::size_t n() const { return n_; }
  std::span<const Message> inbox() const { return inbox_; }

  /// Throws SimulationError if dst is not a node, or if this is a local step.
  void send(NodeId dst, Word word);
  /// One word to every other node.
  void broadcast(Word word);

 private:
  friend class Clique;
  NodeContext(NodeId id, std::size_t n, std::span<const Message> inbox, std::vector<Message>* outbox)
      : id_(id), n_(n), inbox_(inbox), outbox_(outbox) {}

  NodeId id_;
  std::size_t n_;
  std::span<const Message> inbox_;
  std::vector<Message>* outbox_;
};

/// Per-node state. Inside a handler only `at(ctx)` is reachable, which
/// yields the calling node's own slot.
template <class T>
class NodeLocal {
 public:
  NodeLocal() = default;
  explicit NodeLocal(std::size_t n) : values_(n) {}
  explicit NodeLocal(std::vector<T> values) : values_(std::move(values)) {}

  T& at(const NodeContext& ctx) { return values_[ctx.id()]; }
  const T& at(const NodeContext& ctx) const { return values_[ctx.id()]; }

  /// Input placement and output collection happen outside the simulation.
  std::vector<T>& setup() { return values_; }
  const std::vector<T>& results() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<T> values_;
};

/// n fully connected nodes advancing in synchronous steps.
///
/// A step runs every node's handler on its current inbox, then routes all
/// emitted messages as one wave: the wave is charged
/// lenzen_constant * ceil(max(max_send, max_recv) / (n - 1)) rounds and the
/// messages become the next inbox, ordered by (src, emission order).
class Clique {
 public:
  using Handler = std::function<void(NodeContext&)>;

  explicit Clique(std::size_t n, EngineOptions options = {});

  std::size_t size() const { return n_; }
  const RoundLedger& ledger() const { return ledger_; }
  const EngineOptions& options() const { return options_; }

  /// Label prefix applied to every subsequently recorded wave.
  void set_label_prefix(std::string prefix) { prefix_ = std::move(prefix); }
  const std::string& label_prefix() const { return prefix_; }

  /// Compute on the current inbox and send; records one ledger entry.
  void step(std::string_view label, const Handler& handler);
  /// Compute on the current inbox without sending. The inbox is kept.
  void local(const Handler& handler);

 private:
  void run_all(const Handler& handler, std::vector<std::vector<Message>>* outboxes);
  void route(std::string_view label, std::vector<std::vector<Message>>& outboxes);

  std::size_t n_;
  EngineOptions options_;
  RoundLedger ledger_;
  std::string prefix_;
  std::vector<std::vector<Message>> inbox_;
};

/// A named protocol phase; `communicates == false` runs it as a local step.
template <class State>
struct Phase {
  std::string label;
  std::function<void(NodeContext&, State&)> run;
  bool communicates = true;
};

template <class State>
struct ProtocolRun {
  std::vector<State> states;
  RoundLedger ledger;
};

/// Runs the phases in order on nodes initialised with `initial`.
template <class State>
ProtocolRun<State> run_protocol(std::vector<State> initial, std::span<const Phase<State>> phases,
                                EngineOptions options = {}) {
  Clique clique(initial.size(), options);
  NodeLocal<State> states(std::move(initial));
  for (const auto& phase : phases) {
    auto handler = [&](NodeContext& ctx) { phase.run(ctx, states.at(ctx)); };
    if (phase.communicates)
      clique.step(phase.label, handler);
    else
      clique.local(handler);
  }
  return {std::move(states.setup()), clique.ledger()};
}

}  // namespace cclique
