#include "cclique/bench.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "cclique/generate.hpp"
#include "cclique/triangles.hpp"

namespace cclique {
namespace {

struct Group {
  std::string column;
  std::vector<std::string> prefixes;
};

std::vector<Group> groups(BenchSuite suite) {
  if (suite == BenchSuite::smm)
    return {{"distribute", {"smm.distribute"}},
            {"stats", {"smm.stats"}},
            {"balance", {"smm.balance"}},
            {"sending", {"sbmm.sending"}},
            {"receiving", {"sbmm.receiving"}},
            {"routing", {"sbmm.routing"}},
            {"reduce", {"sbmm.reduce"}},
            {"unpermute", {"smm.unpermute"}}};
  return {{"setup", {"tri.degrees", "tri.band_counts", "tri.nset_counts"}},
          {"learn_edges", {"tri.h1.learn_edges", "tri.h2.learn_edges"}},
          {"path_counts", {"tri.h1.path_counts", "tri.h2.path_counts"}},
          {"learn_paths", {"tri.h1.learn_paths", "tri.h2.learn_paths"}}};
}

std::vector<std::pair<std::string, std::uint64_t>> group_rounds(BenchSuite suite, const RoundLedger& ledger) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& g : groups(suite)) {
    std::uint64_t r = 0;
    for (const auto& p : g.prefixes) r += ledger.rounds_with_prefix(p);
    out.emplace_back(g.column, r);
  }
  return out;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t n, std::uint64_t target, std::uint64_t which) {
  // splitmix64 finalizer over the combined key.
  std::uint64_t z = seed ^ (n * 0x9E3779B97F4A7C15ULL) ^ (target * 0xBF58476D1CE4E5B9ULL) ^ (which * 0x94D049BB133111EBULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::string> bench_groups(BenchSuite suite) {
  std::vector<std::string> out;
  for (const auto& g : groups(suite)) out.push_back(g.column);
  return out;
}

double smm_bound(std::uint64_t nz_s, std::uint64_t nz_t, std::size_t n) {
  return std::cbrt(static_cast<double>(nz_s)) * std::cbrt(static_cast<double>(nz_t)) / static_cast<double>(n) + 1.0;
}

double triangle_bound(std::uint64_t m, std::size_t n) {
  return static_cast<double>(m) / std::pow(static_cast<double>(n), 5.0 / 3.0) + 1.0;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (auto n0 : config.sizes) {
    if (n0 == 0) throw std::invalid_argument("bench sizes must be positive");
    if (config.suite == BenchSuite::smm) {
      const std::size_t n = padded_size(n0, config.pad);
      std::vector<std::uint64_t> targets = config.counts;
      for (double d : config.densities) {
        if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("densities must lie in (0, 1]");
        targets.push_back(static_cast<std::uint64_t>(std::llround(d * static_cast<double>(n0) * static_cast<double>(n0))));
      }
      for (auto nz : targets) {
        const Semiring sr = counting_semiring();
        const auto s = pad_matrix(gen::random_matrix(n0, nz, sr, instance_seed(config.seed, n0, nz, 0)), n);
        const auto t = pad_matrix(gen::random_matrix(n0, nz, sr, instance_seed(config.seed, n0, nz, 1)), n);
        const auto result = smm(s, t);
        BenchRow row;
        row.n = n;
        row.m = nz;
        row.nz_lhs = s.nz();
        row.nz_rhs = t.nz();
        row.a = result.split.a;
        row.b = result.split.b;
        row.rounds_total = result.ledger.total_rounds();
        row.rounds_by_group = group_rounds(config.suite, result.ledger);
        row.bound = smm_bound(row.nz_lhs, row.nz_rhs, n);
        row.ratio = static_cast<double>(row.rounds_total) / row.bound;
        rows.push_back(std::move(row));
      }
    } else {
      if (!config.densities.empty()) throw std::invalid_argument("the triangles suite takes edge counts, not densities");
      const bool pad = config.pad != PadMode::none;
      if (!pad && !is_perfect_cube(n0))
        throw std::invalid_argument("triangles suite needs cube sizes unless padding is on; got " + std::to_string(n0));
      for (auto m : config.counts) {
        const Graph g = gen::random_digraph(n0, m, instance_seed(config.seed, n0, m, 0));
        TriangleOptions options;
        options.pad_to_cube = pad;
        const auto result = list_triangles(g, options);
        BenchRow row;
        row.n = result.simulated_nodes;
        row.m = m;
        row.nz_lhs = m;
        row.nz_rhs = m;
        row.a = row.b = static_cast<std::uint32_t>(result.state.c);
        row.rounds_total = result.ledger.total_rounds();
        row.rounds_by_group = group_rounds(config.suite, result.ledger);
        row.bound = triangle_bound(m, row.n);
        row.ratio = static_cast<double>(row.rounds_total) / row.bound;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, BenchSuite suite, const std::vector<BenchRow>& rows) {
  out << "n,m,nz_lhs,nz_rhs,a,b,rounds_total";
  for (const auto& g : bench_groups(suite)) out << ",rounds_" << g;
  out << ",bound_value,ratio\n";
  const auto flags = out.flags();
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << r.nz_lhs << ',' << r.nz_rhs << ',' << r.a << ',' << r.b << ',' << r.rounds_total;
    for (const auto& [name, rounds] : r.rounds_by_group) out << ',' << rounds;
    out << std::fixed << std::setprecision(6) << ',' << r.bound << ',' << r.ratio << '\n';
    out.flags(flags);
  }
}

}  // namespace cclique
