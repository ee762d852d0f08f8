#include "cclique/partition_checks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cclique/generate.hpp"
#include "cclique/partition.hpp"

namespace cclique {
namespace {

std::string show(const std::vector<std::uint64_t>& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ']';
  return os.str();
}

void check_one(PartitionCheckReport& report, const std::vector<std::uint64_t>& w, std::size_t k, std::uint64_t x) {
  ++report.weight_cases;
  const std::size_t n = w.size();
  const std::uint64_t sum = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
  const auto spec = weight_balanced_partition(w, k, x);
  std::vector<int> seen(n, 0);
  bool good = spec.parts.size() == k;
  for (const auto& part : spec.parts) {
    good = good && part.size() == n / k;
    std::uint64_t s = 0;
    for (auto p : part) {
      ++seen[p];
      s += w[p];
    }
    good = good && s * k <= sum + k * x;
  }
  for (int c : seen) good = good && c == 1;
  if (!good)
    report.failures.push_back("weight partition " + show(w) + " k=" + std::to_string(k) + " x=" + std::to_string(x));
}

void all_multisets(PartitionCheckReport& report, std::vector<std::uint64_t>& w, std::size_t n, std::uint64_t max_weight) {
  if (w.size() == n) {
    const std::uint64_t top = w.empty() ? 0 : w.back();
    for (std::size_t k = 1; k <= n; ++k)
      if (n % k == 0)
        for (std::uint64_t x = top; x <= max_weight; ++x) check_one(report, w, k, x);
    return;
  }
  for (std::uint64_t v = w.empty() ? 0 : w.back(); v <= max_weight; ++v) {
    w.push_back(v);
    all_multisets(report, w, n, max_weight);
    w.pop_back();
  }
}

}  // namespace

void check_weight_partitions(PartitionCheckReport& report, std::size_t max_n, std::uint64_t max_weight) {
  std::vector<std::uint64_t> w;
  for (std::size_t n = 1; n <= max_n; ++n) all_multisets(report, w, n, max_weight);
}

void check_avg_partitions(PartitionCheckReport& report, std::size_t vectors, std::uint64_t seed) {
  gen::Rng rng(seed);
  for (std::size_t trial = 0; trial < vectors; ++trial) {
    ++report.avg_cases;
    const std::size_t n = rng.between(1, 64);
    std::vector<std::uint64_t> sizes(n);
    // Mix flat and heavily skewed vectors.
    const std::uint64_t cap = trial % 3 == 0 ? 3 : trial % 3 == 1 ? 50 : 1000;
    for (auto& s : sizes) s = rng.below(4) == 0 ? rng.between(0, cap * 20) : rng.between(0, cap);
    if (trial % 7 == 0) {
      std::fill(sizes.begin(), sizes.end(), 0);
      sizes[rng.below(n)] = rng.between(0, 5000);
    }
    const std::uint64_t total = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
    const auto specs = avg_partition(sizes);
    std::size_t parts = 0;
    bool good = specs.size() == n;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      parts += specs[i].parts.size();
      std::size_t next = 0;
      for (const auto& part : specs[i].parts)
        for (auto idx : part) good = good && idx == next++;
      for (const auto& part : specs[i].parts) good = good && part.size() * n <= total + n;
      good = good && next == sizes[i];
    }
    good = good && parts <= 2 * n;
    if (!good) report.failures.push_back("avg partition over " + show(sizes));
  }
}

}  // namespace cclique
