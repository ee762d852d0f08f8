#pragma once

#include <cstdint>
#include <random>

#include "cclique/graph.hpp"
#include "cclique/sparse_matrix.hpp"

namespace cclique::gen {

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementation, so instances match everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// Exactly `nz` entries at uniformly chosen positions. Values: 1 for bool,
/// 1..9 for count and minplus. Throws std::invalid_argument if nz > n^2.
SparseMatrix random_matrix(std::size_t n, std::uint64_t nz, const Semiring& sr, std::uint64_t seed);

/// Exactly m distinct ordered pairs u != v. Throws if m > n(n-1).
Graph random_digraph(std::size_t n, std::uint64_t m, std::uint64_t seed);
/// Exactly m distinct unordered pairs, stored in both orientations.
Graph random_graph(std::size_t n, std::uint64_t m, std::uint64_t seed);
/// Connected: a random spanning tree plus m - (n - 1) further pairs.
/// Throws if m < n - 1 or m > n(n-1)/2.
Graph random_connected_graph(std::size_t n, std::uint64_t m, std::uint64_t seed);

}  // namespace cclique::gen
