#include "cclique/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cclique::gen {
namespace {

// First k entries of a partial Fisher-Yates shuffle of [0, universe).
std::vector<std::uint64_t> sample(std::uint64_t universe, std::uint64_t k, Rng& rng) {
  if (k > universe)
    throw std::invalid_argument("cannot draw " + std::to_string(k) + " distinct items from " + std::to_string(universe));
  std::vector<std::uint64_t> pool(universe);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(universe - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Edge> unordered_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

SparseMatrix random_matrix(std::size_t n, std::uint64_t nz, const Semiring& sr, std::uint64_t seed) {
  Rng rng(seed);
  const auto cells = sample(static_cast<std::uint64_t>(n) * n, nz, rng);
  std::vector<Triplet> entries;
  entries.reserve(cells.size());
  const bool boolean = sr.name == "bool";
  for (auto cell : cells)
    entries.push_back({static_cast<std::uint32_t>(cell / n), static_cast<std::uint32_t>(cell % n),
                       boolean ? Value{1} : static_cast<Value>(rng.between(1, 9))});
  return SparseMatrix::from_triplets(n, sr, entries);
}

Graph random_digraph(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t slots = n == 0 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  std::vector<Edge> edges;
  for (auto x : sample(slots, m, rng)) {
    const auto u = static_cast<NodeId>(x / (n - 1));
    auto v = static_cast<NodeId>(x % (n - 1));
    if (v >= u) ++v;
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph random_graph(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  Rng rng(seed);
  const auto pairs = unordered_pairs(n);
  std::vector<Edge> edges;
  for (auto x : sample(pairs.size(), m, rng)) edges.push_back(pairs[x]);
  return Graph::undirected(n, edges);
}

Graph random_connected_graph(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  if (n == 0) return Graph(0, {});
  if (m + 1 < n) throw std::invalid_argument("a connected graph on " + std::to_string(n) + " nodes needs n - 1 edges");
  Rng rng(seed);
  std::vector<NodeId> label(n);
  std::iota(label.begin(), label.end(), NodeId{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(label[i], label[rng.below(i + 1)]);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    NodeId x = label[v], y = label[rng.below(v)];
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> rest;
  for (const auto& p : unordered_pairs(n))
    if (!std::binary_search(edges.begin(), edges.end(), p)) rest.push_back(p);
  for (auto x : sample(rest.size(), m - (n - 1), rng)) edges.push_back(rest[x]);
  return Graph::undirected(n, edges);
}

}  // namespace cclique::gen
