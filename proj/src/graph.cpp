#include "cclique/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cclique {

Graph::Graph(std::size_t n, std::span<const Edge> directed_edges) : out_(n), in_(n) {
  for (auto [u, v] : directed_edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("Graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end())
      throw std::invalid_argument("Graph: duplicate edge out of " + std::to_string(v));
    m_ += out_[v].size();
  }
}

Graph Graph::undirected(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> both;
  both.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    both.emplace_back(u, v);
    both.emplace_back(v, u);
  }
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  return Graph(n, both);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& o = out_[u];
  return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> all;
  all.reserve(m_);
  for (NodeId u = 0; u < size(); ++u)
    for (auto v : out_[u]) all.emplace_back(u, v);
  return all;
}

bool Graph::is_symmetric() const {
  for (NodeId u = 0; u < size(); ++u)
    for (auto v : out_[u])
      if (!has_edge(v, u)) return false;
  return true;
}

Graph Graph::padded(std::size_t n) const {
  if (n < size()) throw std::invalid_argument("Graph::padded: cannot shrink");
  auto e = edges();
  return Graph(n, e);
}

SparseMatrix adjacency_matrix(const Graph& g, Semiring semiring, Value edge_value, bool with_diagonal,
                              Value diagonal_value) {
  std::vector<SparseRow> rows(g.size());
  for (NodeId u = 0; u < g.size(); ++u) {
    if (with_diagonal) rows[u].push_back({u, diagonal_value});
    for (auto v : g.out(u)) rows[u].push_back({v, edge_value});
  }
  return SparseMatrix::from_rows(g.size(), semiring, std::move(rows));
}

Triangle Triangle::canonical() const {
  if (v1 < v0 && v1 < v2) return {v1, v2, v0};
  if (v2 < v0 && v2 < v1) return {v2, v0, v1};
  return *this;
}

Triangle Triangle::sorted() const {
  NodeId x[3] = {v0, v1, v2};
  std::sort(x, x + 3);
  return {x[0], x[1], x[2]};
}

}  // namespace cclique
