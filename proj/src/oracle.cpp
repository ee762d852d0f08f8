#include "cclique/oracle.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cclique::oracle {

SparseMatrix dense_multiply(const SparseMatrix& s, const SparseMatrix& t) {
  if (s.size() != t.size()) throw std::invalid_argument("dense_multiply: dimension mismatch");
  if (!(s.semiring() == t.semiring())) throw std::invalid_argument("dense_multiply: semiring mismatch");
  const std::size_t n = s.size();
  const Semiring& sr = s.semiring();
  std::vector<std::vector<Value>> a(n, std::vector<Value>(n, sr.omitted)), b = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : s.row(i)) a[i][e.index] = e.value;
    for (const auto& e : t.row(i)) b[i][e.index] = e.value;
  }
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Value acc = sr.omitted;
      for (std::size_t k = 0; k < n; ++k) acc = sr.add(acc, sr.mul(a[i][k], b[k][j]));
      if (!sr.is_omitted(acc))
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), acc});
    }
  return SparseMatrix::from_triplets(n, sr, out);
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  const auto n = static_cast<NodeId>(g.size());
  std::vector<Triangle> out;
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = 0; y < n; ++y)
      for (NodeId z = 0; z < n; ++z)
        if (g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(z, x)) out.push_back(Triangle{x, y, z}.canonical());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t enumerate_4_cycles(const Graph& g) {
  const auto n = static_cast<NodeId>(g.size());
  auto adj = [&](NodeId x, NodeId y) { return g.has_edge(x, y) && g.has_edge(y, x); };
  auto cycle = [&](NodeId p, NodeId q, NodeId r, NodeId s) { return adj(p, q) && adj(q, r) && adj(r, s) && adj(s, p); };
  std::uint64_t count = 0;
  // A 4-set {a < b < c < d} carries at most three distinct 4-cycles.
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c)
        for (NodeId d = c + 1; d < n; ++d)
          count += cycle(a, b, c, d) + cycle(a, b, d, c) + cycle(a, c, b, d);
  return count;
}

DistanceMatrix apsp_bfs(const Graph& g) {
  const std::size_t n = g.size();
  DistanceMatrix dist(n, std::vector<Value>(n, kInfinity));
  for (NodeId src = 0; src < n; ++src) {
    std::queue<NodeId> frontier;
    dist[src][src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (auto w : g.out(u))
        if (dist[src][w] == kInfinity) {
          dist[src][w] = dist[src][u] + 1;
          frontier.push(w);
        }
    }
  }
  return dist;
}

}  // namespace cclique::oracle
