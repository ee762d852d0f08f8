#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cclique/rational.hpp"

namespace cclique {

/// Disjoint index sets covering the input, with the bound they were built for.
struct PartitionSpec {
  std::vector<std::vector<std::size_t>> parts;

  /// Chunk partitions: bound on |part| is `size_bound` (c + 1, or avg + 1).
  Rational size_bound{};
  /// Weight partitions: k parts, element bound x.
  std::size_t k = 0;
  std::uint64_t x = 0;

  std::size_t part_count() const { return parts.size(); }
};

/// Splits [0, t) into ceil(t / c) consecutive blocks of c + 1 indices.
/// Trailing blocks may be short or empty. Requires 1 <= c <= t.
PartitionSpec chunk_partition(std::size_t t, std::size_t c);

/// For sets of the given sizes with avg = sum / n (exact), splits set i into
/// ceil(t_i / avg) consecutive blocks of at most avg + 1 indices. All sets
/// empty gives n specs with no parts.
std::vector<PartitionSpec> avg_partition(std::span<const std::uint64_t> sizes);

/// Part count ceil(t * n / total) for one set of size t under avg = total / n.
std::size_t avg_part_count(std::uint64_t t, std::uint64_t total, std::size_t n);
/// Block length floor(avg) + 1 used by avg_partition.
std::size_t avg_block_size(std::uint64_t total, std::size_t n);

/// Strided split of a sorted multiset into k parts of n / k positions:
/// part j = { j, j + k, j + 2k, ... }. Every part sums to at most sum / k + x.
/// Throws std::invalid_argument if `sorted` is not ascending, some weight
/// exceeds x, or k does not divide n.
PartitionSpec weight_balanced_partition(std::span<const std::uint64_t> sorted, std::size_t k, std::uint64_t x);

/// weight_balanced_partition applied to unsorted weights. Indices are sorted
/// by (weight, index) first; parts hold original indices, each part listing
/// them in sorted-view order.
struct IndexedPartition {
  std::vector<std::size_t> order;  // order[p] = original index at sorted position p
  PartitionSpec spec;
};
IndexedPartition weight_balanced_partition_indexed(std::span<const std::uint64_t> weights, std::size_t k,
                                                   std::uint64_t x);

/// sum(part) <= sum / k + x for every part, checked exactly.
bool satisfies_weight_bound(const PartitionSpec& spec, std::span<const std::uint64_t> weights);

}  // namespace cclique
