#pragma once

#include <cstdint>
#include <vector>

#include "cclique/graph.hpp"
#include "cclique/sparse_matrix.hpp"

// Straightforward sequential references. Nothing here touches the clique
// engine.
namespace cclique::oracle {

/// Triple loop: P[i][j] = add over k of mul(S[i][k], T[k][j]).
SparseMatrix dense_multiply(const SparseMatrix& s, const SparseMatrix& t);

/// Every directed triangle, canonical rotation, sorted and distinct.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Simple 4-cycles of an undirected graph, each counted once.
std::uint64_t enumerate_4_cycles(const Graph& g);

/// BFS from every source; kInfinity marks unreachable pairs.
DistanceMatrix apsp_bfs(const Graph& g);

}  // namespace cclique::oracle
