#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cclique {

struct PartitionCheckReport {
  std::uint64_t weight_cases = 0;  // (multiset, k, x) triples tried
  std::uint64_t avg_cases = 0;     // random size vectors tried
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Every ascending multiset of length n <= max_n over [0, max_weight], every
/// k dividing n, every x from the largest element up to max_weight: each
/// strided part has exactly n / k positions and sums to at most sum / k + x.
void check_weight_partitions(PartitionCheckReport& report, std::size_t max_n = 8, std::uint64_t max_weight = 4);

/// Random size vectors: avg_partition uses at most 2n parts overall, each
/// part holds at most floor(avg) + 1 indices, and the parts of each set
/// cover it exactly.
void check_avg_partitions(PartitionCheckReport& report, std::size_t vectors = 1000, std::uint64_t seed = 1);

}  // namespace cclique
