#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cclique/engine.hpp"
#include "cclique/graph.hpp"
#include "cclique/rational.hpp"

namespace cclique {

/// Edges from N_{i,j,l} (a subset of V_i) into V_j are small enough for one
/// group D_k of c nodes to learn.
struct NSet {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t l = 0;
  std::vector<NodeId> members;  // ascending
  std::uint64_t edges = 0;      // |E(N, V_j)|

  friend bool operator==(const NSet&, const NSet&) = default;
};

/// What group D_k works on in one half.
struct GroupTask {
  bool active = false;
  std::uint32_t set = 0;  // index into TriplePartitionState::n_sets
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::vector<std::vector<NodeId>> p_parts;  // P_0 .. P_{c-1}; node k*c + d learns paths through P_d
  std::vector<std::uint64_t> p_weights;      // |E(V_j, P_d)| + |E(P_d, V_i)|

  friend bool operator==(const GroupTask&, const GroupTask&) = default;
};

/// The partitions the nodes agreed on, gathered after a run.
struct TriplePartitionState {
  std::size_t c = 0;   // n = c^3
  std::uint64_t m = 0; // directed edges
  Rational alpha;      // m / c + n
  Rational beta;       // m / c^2 + n
  std::vector<std::vector<NodeId>> v_parts;  // V_0 .. V_{c-1}, ascending ids
  std::vector<std::uint32_t> v_index;        // node -> i with node in V_i
  std::vector<NSet> n_sets;                  // ordered by (i, j, l)
  std::size_t first_half = 0;                // |A^1|; A^2 is the rest
  std::array<std::vector<GroupTask>, 2> tasks;  // [half][k], k < c^2

  friend bool operator==(const TriplePartitionState&, const TriplePartitionState&) = default;
};

/// Descriptions of every violated size bound; empty when all hold.
std::vector<std::string> check_partition_invariants(const Graph& g, const TriplePartitionState& state);

/// Destination node of each out-edge packet of node v (in out-edge order),
/// given every node's out-degree. Out-edges of v are cut into blocks of
/// floor(m / n) + 1; blocks are numbered across all nodes and block q goes
/// to node q mod n.
std::vector<NodeId> packet_owners(std::span<const std::uint64_t> d_out, NodeId v);

struct TriangleOptions {
  EngineOptions engine;
  /// Appends isolated nodes up to the next cube instead of rejecting n.
  bool pad_to_cube = false;
};

struct TriangleResult {
  std::vector<Triangle> triangles;             // canonical, sorted, distinct
  std::vector<std::vector<Triangle>> per_node; // canonical, as each node output them
  std::size_t simulated_nodes = 0;
  TriplePartitionState state;
  RoundLedger ledger;
};

/// Lists every directed triangle. Undirected graphs (both orientations
/// stored) report each triangle in both directions.
/// Throws std::invalid_argument if n is not a cube and padding is off.
TriangleResult list_triangles(const Graph& g, TriangleOptions options = {});

bool is_perfect_cube(std::size_t n);
std::size_t cube_root(std::size_t n);  // floor

}  // namespace cclique
