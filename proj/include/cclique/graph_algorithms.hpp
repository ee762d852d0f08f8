#pragma once

#include <cstdint>

#include "cclique/engine.hpp"
#include "cclique/graph.hpp"
#include "cclique/sparse_matrix.hpp"

namespace cclique {

/// trace(A * B) over the counting semiring in two waves: node v gathers
/// column v of B, computes (AB)[v][v], and broadcasts it. Returns the value
/// every node ends up with.
Value run_trace_product(Clique& clique, const SparseMatrix& a, const SparseMatrix& b);

struct TraceResult {
  Value trace = 0;
  RoundLedger ledger;
};
TraceResult trace_product(const SparseMatrix& a, const SparseMatrix& b, EngineOptions options = {});

struct FourCycleResult {
  std::uint64_t count = 0;
  Value trace_a4 = 0;
  std::uint64_t degree_term = 0;  // sum of 2 d^2 - d
  RoundLedger ledger;
};
/// Counts 4-cycles of a symmetric graph from trace(A^2 * A^2) and degrees.
/// Throws std::invalid_argument for asymmetric input and std::logic_error
/// if the count does not come out integral.
FourCycleResult count_4_cycles(const Graph& g, EngineOptions options = {});

/// Synchronous BFS from `root`; each level costs one broadcast wave.
/// Throws DisconnectedGraph if some node is never reached.
std::uint32_t run_bfs_ecc(Clique& clique, const Graph& g, NodeId root);

struct EccentricityResult {
  std::uint32_t eccentricity = 0;
  RoundLedger ledger;
};
EccentricityResult bfs_ecc(const Graph& g, NodeId root, EngineOptions options = {});

struct ApspResult {
  DistanceMatrix distances;
  std::uint32_t eccentricity = 0;  // from node 0
  std::size_t multiplications = 0;
  RoundLedger ledger;
};
/// Hop distances of a connected undirected graph: the min-plus adjacency
/// matrix with a zero diagonal is multiplied by itself 2e - 1 times, where e
/// is the eccentricity of node 0.
ApspResult apsp(const Graph& g, EngineOptions options = {});

}  // namespace cclique
