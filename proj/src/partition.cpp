#include "cclique/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cclique {

PartitionSpec chunk_partition(std::size_t t, std::size_t c) {
  if (c < 1 || c > t)
    throw std::invalid_argument("chunk_partition: need 1 <= c <= t (t=" + std::to_string(t) +
                                ", c=" + std::to_string(c) + ")");
  PartitionSpec spec;
  spec.size_bound = Rational(c + 1);
  const std::size_t count = (t + c - 1) / c;
  spec.parts.resize(count);
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t idx = j * (c + 1); idx < std::min(t, (j + 1) * (c + 1)); ++idx) spec.parts[j].push_back(idx);
  return spec;
}

std::size_t avg_part_count(std::uint64_t t, std::uint64_t total, std::size_t n) {
  if (t == 0 || total == 0) return 0;
  // ceil(t / (total / n)) = ceil(t * n / total)
  detail::uint128 num = static_cast<detail::uint128>(t) * n;
  return static_cast<std::size_t>((num + total - 1) / total);
}

std::size_t avg_block_size(std::uint64_t total, std::size_t n) {
  return static_cast<std::size_t>(total / n) + 1;
}

std::vector<PartitionSpec> avg_partition(std::span<const std::uint64_t> sizes) {
  if (sizes.empty()) throw std::invalid_argument("avg_partition: no sets");
  const std::size_t n = sizes.size();
  const std::uint64_t total = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
  std::vector<PartitionSpec> out(n);
  const Rational bound = Rational(total, n) + Rational(1);
  const std::size_t block = avg_block_size(total, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& spec = out[i];
    spec.size_bound = bound;
    const std::size_t count = avg_part_count(sizes[i], total, n);
    spec.parts.resize(count);
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t idx = j * block; idx < std::min<std::size_t>(sizes[i], (j + 1) * block); ++idx)
        spec.parts[j].push_back(idx);
  }
  return out;
}

PartitionSpec weight_balanced_partition(std::span<const std::uint64_t> sorted, std::size_t k, std::uint64_t x) {
  const std::size_t n = sorted.size();
  if (k == 0 || n % k != 0)
    throw std::invalid_argument("weight_balanced_partition: k=" + std::to_string(k) + " does not divide n=" +
                                std::to_string(n));
  if (!std::is_sorted(sorted.begin(), sorted.end()))
    throw std::invalid_argument("weight_balanced_partition: weights not sorted ascending");
  if (n > 0 && sorted.back() > x)
    throw std::invalid_argument("weight_balanced_partition: weight " + std::to_string(sorted.back()) +
                                " exceeds bound " + std::to_string(x));
  PartitionSpec spec;
  spec.k = k;
  spec.x = x;
  spec.parts.resize(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t pos = j; pos < n; pos += k) spec.parts[j].push_back(pos);
  return spec;
}

IndexedPartition weight_balanced_partition_indexed(std::span<const std::uint64_t> weights, std::size_t k,
                                                   std::uint64_t x) {
  IndexedPartition out;
  out.order.resize(weights.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t p, std::size_t q) { return weights[p] < weights[q]; });
  std::vector<std::uint64_t> sorted(weights.size());
  for (std::size_t p = 0; p < sorted.size(); ++p) sorted[p] = weights[out.order[p]];
  out.spec = weight_balanced_partition(sorted, k, x);
  for (auto& part : out.spec.parts)
    for (auto& pos : part) pos = out.order[pos];
  return out;
}

bool satisfies_weight_bound(const PartitionSpec& spec, std::span<const std::uint64_t> weights) {
  if (spec.k == 0) return false;
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  const Rational bound = Rational(total, spec.k) + Rational(spec.x);
  for (const auto& part : spec.parts) {
    std::uint64_t sum = 0;
    for (auto idx : part) sum += weights[idx];
    if (Rational(sum) > bound) return false;
  }
  return true;
}

}  // namespace cclique
