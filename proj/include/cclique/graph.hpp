#pragma once

#include <cstddef>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cclique/sparse_matrix.hpp"

namespace cclique {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Simple directed graph on nodes [0, n). Undirected graphs are stored with
/// both orientations of every edge.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicates or ids >= n.
  Graph(std::size_t n, std::span<const Edge> directed_edges);
  /// Each pair becomes two directed edges; repeated pairs collapse.
  static Graph undirected(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return out_.size(); }
  /// Directed edge count.
  std::size_t edge_count() const { return m_; }

  std::span<const NodeId> out(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in(NodeId v) const { return in_[v]; }
  std::size_t d_out(NodeId v) const { return out_[v].size(); }
  std::size_t d_in(NodeId v) const { return in_[v].size(); }
  bool has_edge(NodeId u, NodeId v) const;
  /// All edges sorted lexicographically.
  std::vector<Edge> edges() const;
  /// True iff every edge has its reverse.
  bool is_symmetric() const;

  /// The same graph with isolated nodes appended up to `n`.
  Graph padded(std::size_t n) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::size_t m_ = 0;
};

/// Directed triangle v0 -> v1 -> v2 -> v0.
struct Triangle {
  NodeId v0 = 0;
  NodeId v1 = 0;
  NodeId v2 = 0;

  /// The rotation starting at the smallest id.
  Triangle canonical() const;
  /// The node set in ascending order; identifies the undirected triangle.
  Triangle sorted() const;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// dist[u][v] in hops; kInfinity when v is unreachable from u.
using DistanceMatrix = std::vector<std::vector<Value>>;

/// Adjacency matrix with `edge_value` on every edge. With `with_diagonal`
/// the diagonal holds `diagonal_value` (min-plus self-distances).
SparseMatrix adjacency_matrix(const Graph& g, Semiring semiring, Value edge_value,
                              bool with_diagonal = false, Value diagonal_value = 0);

}  // namespace cclique
