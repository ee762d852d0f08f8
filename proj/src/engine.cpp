#include "cclique/engine.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <string>
#include <thread>

#include "cclique/errors.hpp"

namespace cclique {

void RoundLedger::append(const RoundLedger& other, std::string_view prefix) {
  for (auto entry : other.entries_) {
    entry.phase = std::string(prefix) + entry.phase;
    entries_.push_back(std::move(entry));
  }
}

std::uint64_t RoundLedger::total_rounds() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.rounds;
  return total;
}

std::uint64_t RoundLedger::total_messages() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.total_msgs;
  return total;
}

std::uint64_t RoundLedger::rounds_with_prefix(std::string_view prefix) const {
  std::uint64_t total = 0;
  for (const auto& e : entries_)
    if (std::string_view(e.phase).starts_with(prefix)) total += e.rounds;
  return total;
}

std::uint64_t RoundLedger::max_send_with_prefix(std::string_view prefix) const {
  std::uint64_t best = 0;
  for (const auto& e : entries_)
    if (std::string_view(e.phase).starts_with(prefix)) best = std::max(best, e.max_send);
  return best;
}

std::uint64_t RoundLedger::max_recv_with_prefix(std::string_view prefix) const {
  std::uint64_t best = 0;
  for (const auto& e : entries_)
    if (std::string_view(e.phase).starts_with(prefix)) best = std::max(best, e.max_recv);
  return best;
}

std::size_t RoundLedger::count_with_suffix(std::string_view suffix) const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [&](const LedgerEntry& e) {
    return std::string_view(e.phase).ends_with(suffix);
  }));
}

void RoundLedger::write_csv(std::ostream& out) const {
  out << "phase,rounds,max_send,max_recv,total_msgs\n";
  for (const auto& e : entries_)
    out << e.phase << ',' << e.rounds << ',' << e.max_send << ',' << e.max_recv << ',' << e.total_msgs << '\n';
}

void NodeContext::send(NodeId dst, Word word) {
  if (outbox_ == nullptr)
    throw SimulationError("node " + std::to_string(id_) + " attempted to send during a local step");
  if (dst >= n_)
    throw SimulationError("node " + std::to_string(id_) + " addressed nonexistent node " + std::to_string(dst));
  outbox_->push_back(Message{id_, dst, word});
}

void NodeContext::broadcast(Word word) {
  for (NodeId u = 0; u < n_; ++u)
    if (u != id_) send(u, word);
}

Clique::Clique(std::size_t n, EngineOptions options) : n_(n), options_(options), inbox_(n) {}

void Clique::run_all(const Handler& handler, std::vector<std::vector<Message>>* outboxes) {
  auto run_node = [&](NodeId v) {
    NodeContext ctx(v, n_, inbox_[v], outboxes ? &(*outboxes)[v] : nullptr);
    handler(ctx);
  };

  unsigned workers = options_.threads != 0 ? options_.threads : std::max(1u, std::thread::hardware_concurrency());
  if (!options_.parallel || workers <= 1 || n_ < 2) {
    for (NodeId v = 0; v < n_; ++v) run_node(v);
    return;
  }

  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_));
  std::vector<std::exception_ptr> errors(n_);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t v = w; v < n_; v += workers) {
          try {
            run_node(static_cast<NodeId>(v));
          } catch (...) {
            errors[v] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void Clique::route(std::string_view label, std::vector<std::vector<Message>>& outboxes) {
  std::vector<std::uint64_t> sent(n_, 0), received(n_, 0);
  std::vector<std::vector<Message>> next(n_);
  std::uint64_t total = 0;
  for (NodeId src = 0; src < n_; ++src) {
    for (auto& m : outboxes[src]) {
      if (m.dst != src) {
        ++sent[src];
        ++received[m.dst];
        ++total;
      }
      next[m.dst].push_back(m);
    }
  }

  LedgerEntry entry;
  entry.phase = prefix_ + std::string(label);
  entry.max_send = n_ ? *std::max_element(sent.begin(), sent.end()) : 0;
  entry.max_recv = n_ ? *std::max_element(received.begin(), received.end()) : 0;
  entry.total_msgs = total;
  const std::uint64_t load = std::max(entry.max_send, entry.max_recv);
  if (load > 0) {
    const std::uint64_t capacity = n_ - 1;
    entry.rounds = options_.lenzen_constant * ((load + capacity - 1) / capacity);
  }
  ledger_.record(std::move(entry));
  inbox_ = std::move(next);
}

void Clique::step(std::string_view label, const Handler& handler) {
  std::vector<std::vector<Message>> outboxes(n_);
  run_all(handler, &outboxes);
  route(label, outboxes);
}

void Clique::local(const Handler& handler) { run_all(handler, nullptr); }

}  // namespace cclique
