#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cclique/smm.hpp"

namespace cclique {

enum class BenchSuite { smm, triangles };

struct BenchConfig {
  BenchSuite suite = BenchSuite::smm;
  std::vector<std::size_t> sizes;
  /// smm: fraction of n^2 filled in each operand, in (0, 1].
  std::vector<double> densities;
  /// smm: nonzeros per operand; triangles: directed edges.
  std::vector<std::uint64_t> counts;
  std::uint64_t seed = 1;
  PadMode pad = PadMode::none;
};

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t nz_lhs = 0;
  std::uint64_t nz_rhs = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint64_t rounds_total = 0;
  std::vector<std::pair<std::string, std::uint64_t>> rounds_by_group;
  double bound = 0;
  double ratio = 0;
};

/// Column groups reported for a suite, in CSV order.
std::vector<std::string> bench_groups(BenchSuite suite);
/// nz(S)^(1/3) nz(T)^(1/3) / n + 1.
double smm_bound(std::uint64_t nz_s, std::uint64_t nz_t, std::size_t n);
/// m / n^(5/3) + 1.
double triangle_bound(std::uint64_t m, std::size_t n);

/// One row per (size, density or count). Throws std::invalid_argument on
/// a bad configuration.
std::vector<BenchRow> run_bench(const BenchConfig& config);
void write_bench_csv(std::ostream& out, BenchSuite suite, const std::vector<BenchRow>& rows);

}  // namespace cclique
