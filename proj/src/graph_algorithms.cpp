#include "cclique/graph_algorithms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cclique/errors.hpp"
#include "cclique/smm.hpp"

namespace cclique {
namespace {

enum Tag : std::uint16_t {
  kTraceColumn = 0x300,
  kDiagonal,
  kDegree,
  kLevel,
};

}  // namespace

Value run_trace_product(Clique& clique, const SparseMatrix& a, const SparseMatrix& b) {
  const std::size_t n = clique.size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("trace_product: size mismatch");
  const Semiring sr = counting_semiring();
  if (!(a.semiring() == sr) || !(b.semiring() == sr))
    throw std::invalid_argument("trace_product works over the counting semiring");

  struct TraceNode {
    SparseRow column;
    Value trace = 0;
  };
  NodeLocal<TraceNode> nodes(n);

  clique.step("trace.columns", [&](NodeContext& ctx) {
    for (const auto& e : b.row(ctx.id())) ctx.send(e.index, Word{kTraceColumn, ctx.id(), e.index, e.value});
  });

  clique.step("trace.diagonal", [&](NodeContext& ctx) {
    auto& me = nodes.at(ctx);
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kTraceColumn) me.column.push_back({m.word.first, m.word.value});
    normalize_row(me.column, n);
    // (AB)[v][v] = sum_k A[v][k] * B[k][v]: merge row v of A with column v of B.
    Value diag = sr.omitted;
    const auto row = a.row(ctx.id());
    auto x = row.begin();
    auto y = me.column.begin();
    while (x != row.end() && y != me.column.end()) {
      if (x->index < y->index) {
        ++x;
      } else if (y->index < x->index) {
        ++y;
      } else {
        diag = sr.add(diag, sr.mul(x->value, y->value));
        ++x;
        ++y;
      }
    }
    me.trace = diag;
    ctx.broadcast(Word{kDiagonal, ctx.id(), 0, diag});
  });

  clique.local([&](NodeContext& ctx) {
    auto& me = nodes.at(ctx);
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kDiagonal) me.trace = sr.add(me.trace, m.word.value);
  });

  const Value trace = nodes.results().empty() ? 0 : nodes.results().front().trace;
  for (const auto& node : nodes.results())
    if (node.trace != trace) throw SimulationError("nodes disagree on the trace");
  return trace;
}

TraceResult trace_product(const SparseMatrix& a, const SparseMatrix& b, EngineOptions options) {
  Clique clique(a.size(), options);
  TraceResult out;
  out.trace = run_trace_product(clique, a, b);
  out.ledger = clique.ledger();
  return out;
}

FourCycleResult count_4_cycles(const Graph& g, EngineOptions options) {
  if (!g.is_symmetric()) throw std::invalid_argument("count_4_cycles needs an undirected graph");
  const std::size_t n = g.size();
  FourCycleResult out;
  if (n == 0) return out;
  const SparseMatrix a = adjacency_matrix(g, counting_semiring(), 1);
  Clique clique(n, options);
  const SparseMatrix a2 = run_smm(clique, a, a).product;
  out.trace_a4 = run_trace_product(clique, a2, a2);

  NodeLocal<std::uint64_t> degree_term(n);
  clique.step("four_cycles.degrees", [&](NodeContext& ctx) {
    ctx.broadcast(Word{kDegree, ctx.id(), 0, static_cast<Value>(a.row_nz(ctx.id()))});
  });
  clique.local([&](NodeContext& ctx) {
    auto term = [](std::uint64_t d) { return 2 * d * d - d; };
    std::uint64_t sum = term(a.row_nz(ctx.id()));
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kDegree) sum += term(static_cast<std::uint64_t>(m.word.value));
    degree_term.at(ctx) = sum;
  });
  out.degree_term = degree_term.results().front();

  const auto trace = static_cast<std::uint64_t>(out.trace_a4);
  if (trace < out.degree_term || (trace - out.degree_term) % 8 != 0)
    throw std::logic_error("4-cycle count is not integral: trace " + std::to_string(trace) + ", degree term " +
                           std::to_string(out.degree_term));
  out.count = (trace - out.degree_term) / 8;
  out.ledger = clique.ledger();
  return out;
}

std::uint32_t run_bfs_ecc(Clique& clique, const Graph& g, NodeId root) {
  const std::size_t n = clique.size();
  if (g.size() != n) throw std::invalid_argument("bfs_ecc: graph size differs from the clique size");
  if (root >= n) throw std::invalid_argument("bfs_ecc: root out of range");

  struct BfsNode {
    std::int64_t level = -1;
    std::uint64_t reached = 0;  // nodes this node has heard join, itself included
    std::int64_t deepest = -1;  // last level in which anyone joined
    bool joined_now = false;
  };
  NodeLocal<BfsNode> nodes(n);

  for (std::int64_t wave = 0;; ++wave) {
    clique.step("bfs.level", [&](NodeContext& ctx) {
      auto& me = nodes.at(ctx);
      me.joined_now = false;
      bool neighbour_joined = false;
      for (const auto& m : ctx.inbox()) {
        if (m.word.tag != kLevel) continue;
        ++me.reached;
        me.deepest = std::max<std::int64_t>(me.deepest, m.word.value);
        if (g.has_edge(ctx.id(), m.src)) neighbour_joined = true;
      }
      const bool joins = me.level < 0 && (wave == 0 ? ctx.id() == root : neighbour_joined);
      if (!joins) return;
      me.level = wave;
      me.joined_now = true;
      ++me.reached;
      me.deepest = std::max(me.deepest, wave);
      ctx.broadcast(Word{kLevel, ctx.id(), 0, wave});
    });
    // Absence of any broadcast is what every node observes in the next wave.
    const auto& all = nodes.results();
    if (std::none_of(all.begin(), all.end(), [](const BfsNode& b) { return b.joined_now; })) break;
  }

  const auto& all = nodes.results();
  const auto& view = all.front();
  for (const auto& b : all)
    if (b.reached != view.reached || b.deepest != view.deepest)
      throw SimulationError("nodes disagree on the BFS outcome");
  if (view.reached != n)
    throw DisconnectedGraph("graph is disconnected: " + std::to_string(view.reached) + " of " + std::to_string(n) +
                            " nodes reachable from " + std::to_string(root));
  return static_cast<std::uint32_t>(view.deepest);
}

EccentricityResult bfs_ecc(const Graph& g, NodeId root, EngineOptions options) {
  Clique clique(g.size(), options);
  EccentricityResult out;
  out.eccentricity = run_bfs_ecc(clique, g, root);
  out.ledger = clique.ledger();
  return out;
}

ApspResult apsp(const Graph& g, EngineOptions options) {
  if (!g.is_symmetric()) throw std::invalid_argument("apsp needs an undirected graph");
  const std::size_t n = g.size();
  ApspResult out;
  if (n == 0) return out;
  Clique clique(n, options);
  out.eccentricity = run_bfs_ecc(clique, g, 0);

  const SparseMatrix m = adjacency_matrix(g, min_plus_semiring(), 1, true, 0);
  out.multiplications = out.eccentricity == 0 ? 0 : 2 * static_cast<std::size_t>(out.eccentricity) - 1;
  SparseMatrix power = m;
  for (std::size_t t = 1; t <= out.multiplications; ++t) {
    clique.set_label_prefix("apsp.power" + std::to_string(t + 1) + ".");
    power = run_smm(clique, power, m).product;
  }
  clique.set_label_prefix("");

  out.distances.assign(n, std::vector<Value>(n, kInfinity));
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& e : power.row(u)) out.distances[u][e.index] = e.value;
  out.ledger = clique.ledger();
  return out;
}

}  // namespace cclique
