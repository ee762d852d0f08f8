#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cclique/bench.hpp"
#include "cclique/graph_algorithms.hpp"
#include "cclique/matrix_io.hpp"
#include "cclique/oracle.hpp"
#include "cclique/partition_checks.hpp"
#include "cclique/smm.hpp"
#include "cclique/triangles.hpp"

namespace fs = std::filesystem;
using namespace cclique;

namespace {

constexpr int kMismatch = 2;

// Relative output paths land in $CCLIQUE_OUT_DIR when it is set.
fs::path output_path(const std::string& path) {
  fs::path p(path);
  if (p.is_relative())
    if (const char* dir = std::getenv("CCLIQUE_OUT_DIR"); dir && *dir) {
      fs::create_directories(dir);
      return fs::path(dir) / p;
    }
  return p;
}

template <typename Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(output_path(path));
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
}

void write_ledger(const std::string& path, const RoundLedger& ledger) {
  if (!path.empty()) with_output(path, [&](std::ostream& os) { ledger.write_csv(os); });
}

struct Common {
  std::uint64_t seed = 1;
  bool verify = false;
  std::string ledger;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_out = true) {
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_flag("--verify", c.verify, "Compare against the sequential oracle; exit 2 on mismatch");
  cmd->add_option("--ledger", c.ledger, "Write the per-wave round ledger as CSV");
  if (with_out) cmd->add_option("--out", c.out, "Output file (default: stdout)");
}

int report(bool match, const std::string& what) {
  std::cerr << "verify " << what << ": " << (match ? "ok" : "MISMATCH") << '\n';
  return match ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse matrix multiplication and graph algorithms on a simulated congested clique"};
  app.require_subcommand(1);

  // multiply
  Common mul;
  std::string lhs, rhs, semiring_name = "count", pad_name = "none";
  auto* multiply = app.add_subcommand("multiply", "Multiply two Matrix Market matrices");
  multiply->add_option("--lhs", lhs, "Left operand (.mtx)")->required()->check(CLI::ExistingFile);
  multiply->add_option("--rhs", rhs, "Right operand (.mtx)")->required()->check(CLI::ExistingFile);
  multiply->add_option("--semiring", semiring_name)->check(CLI::IsMember({"bool", "count", "minplus"}))->capture_default_str();
  multiply->add_option("--pad", pad_name, "Pad n up to a power of two or a cube")
      ->check(CLI::IsMember({"none", "pow2", "cube"}))
      ->capture_default_str();
  add_common(multiply, mul);

  // triangles
  Common tri;
  std::string tri_graph;
  bool directed = false, pad_cube = false;
  std::optional<std::size_t> tri_nodes;
  auto* triangles = app.add_subcommand("triangles", "List triangles of an edge-list graph");
  triangles->add_option("--graph", tri_graph, "Edge list, one 'u v' per line")->required()->check(CLI::ExistingFile);
  triangles->add_flag("--directed", directed, "Treat edges as directed");
  triangles->add_flag("--pad-cube", pad_cube, "Pad n with isolated nodes up to the next cube");
  triangles->add_option("--nodes", tri_nodes, "Node count (default: from the file)");
  add_common(triangles, tri);

  // four-cycles
  Common four;
  std::string four_graph;
  std::optional<std::size_t> four_nodes;
  auto* cycles = app.add_subcommand("four-cycles", "Count 4-cycles of an undirected graph");
  cycles->add_option("--graph", four_graph)->required()->check(CLI::ExistingFile);
  cycles->add_option("--nodes", four_nodes, "Node count (default: from the file)");
  add_common(cycles, four);

  // apsp
  Common ap;
  std::string ap_graph;
  std::optional<std::size_t> ap_nodes;
  auto* apsp_cmd = app.add_subcommand("apsp", "Unweighted all-pairs shortest paths");
  apsp_cmd->add_option("--graph", ap_graph)->required()->check(CLI::ExistingFile);
  apsp_cmd->add_option("--nodes", ap_nodes, "Node count (default: from the file)");
  add_common(apsp_cmd, ap);

  // bench
  BenchConfig bench_config;
  std::string suite_name = "smm", bench_pad = "none", bench_out;
  auto* bench = app.add_subcommand("bench", "Round counts against the theoretical bounds, as CSV");
  bench->add_option("--suite", suite_name)->check(CLI::IsMember({"smm", "triangles"}))->capture_default_str();
  bench->add_option("--sizes", bench_config.sizes, "Node counts")->delimiter(',');
  bench->add_option("--densities", bench_config.densities, "smm: fraction of n^2 per operand")->delimiter(',');
  bench->add_option("--counts", bench_config.counts, "smm: nonzeros per operand; triangles: directed edges")
      ->delimiter(',');
  bench->add_option("--seed", bench_config.seed)->capture_default_str();
  bench->add_option("--pad", bench_pad)->check(CLI::IsMember({"none", "pow2", "cube"}))->capture_default_str();
  bench->add_option("--out", bench_out, "CSV file (default: stdout)");

  // verify-partitions
  std::uint64_t partition_seed = 1;
  std::size_t partition_vectors = 1000;
  auto* partitions = app.add_subcommand("verify-partitions", "Check the partition claims exhaustively and randomly");
  partitions->add_option("--seed", partition_seed)->capture_default_str();
  partitions->add_option("--vectors", partition_vectors, "Random size vectors")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*multiply) {
      const Semiring sr = *semiring_by_name(semiring_name);
      const auto s = load_matrix_market(lhs, sr);
      const auto t = load_matrix_market(rhs, sr);
      if (s.size() != t.size()) throw std::invalid_argument("operands differ in size");
      const PadMode mode = pad_name == "pow2" ? PadMode::pow2 : pad_name == "cube" ? PadMode::cube : PadMode::none;
      const std::size_t n = padded_size(s.size(), mode);
      const auto result = smm(pad_matrix(s, n), pad_matrix(t, n));
      const auto product = crop_matrix(result.product, s.size());
      with_output(mul.out, [&](std::ostream& os) { write_matrix_market(os, product); });
      write_ledger(mul.ledger, result.ledger);
      std::cerr << "n=" << n << " split=(" << result.split.a << "," << result.split.b
                << ") rounds=" << result.ledger.total_rounds() << '\n';
      if (mul.verify) return report(product == oracle::dense_multiply(s, t), "product");
      return 0;
    }

    if (*triangles) {
      const Graph g = load_edge_list(tri_graph, directed, tri_nodes);
      TriangleOptions options;
      options.pad_to_cube = pad_cube;
      const auto result = list_triangles(g, options);
      auto reduce = [&](std::vector<Triangle> list) {
        if (directed) return list;
        for (auto& x : list) x = x.sorted();
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        return list;
      };
      const auto listed = reduce(result.triangles);
      with_output(tri.out, [&](std::ostream& os) {
        for (const auto& x : listed) os << x.v0 << ' ' << x.v1 << ' ' << x.v2 << '\n';
      });
      write_ledger(tri.ledger, result.ledger);
      std::cerr << "n=" << result.simulated_nodes << " triangles=" << listed.size()
                << " rounds=" << result.ledger.total_rounds() << '\n';
      if (tri.verify) {
        const auto invariants = check_partition_invariants(g.padded(result.simulated_nodes), result.state);
        for (const auto& v : invariants) std::cerr << "invariant violated: " << v << '\n';
        return report(listed == reduce(oracle::enumerate_triangles(g)) && invariants.empty(), "triangles");
      }
      return 0;
    }

    if (*cycles) {
      const Graph g = load_edge_list(four_graph, false, four_nodes);
      const auto result = count_4_cycles(g);
      with_output(four.out, [&](std::ostream& os) { os << result.count << '\n'; });
      write_ledger(four.ledger, result.ledger);
      std::cerr << "trace(A^4)=" << result.trace_a4 << " degree_term=" << result.degree_term
                << " rounds=" << result.ledger.total_rounds() << '\n';
      if (four.verify) return report(result.count == oracle::enumerate_4_cycles(g), "four-cycles");
      return 0;
    }

    if (*apsp_cmd) {
      const Graph g = load_edge_list(ap_graph, false, ap_nodes);
      const auto result = apsp(g);
      std::vector<Triplet> entries;
      for (std::size_t u = 0; u < result.distances.size(); ++u)
        for (std::size_t v = 0; v < result.distances.size(); ++v)
          if (result.distances[u][v] != kInfinity)
            entries.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), result.distances[u][v]});
      const auto matrix = SparseMatrix::from_triplets(g.size(), min_plus_semiring(), entries);
      with_output(ap.out, [&](std::ostream& os) { write_matrix_market(os, matrix); });
      write_ledger(ap.ledger, result.ledger);
      std::cerr << "eccentricity(0)=" << result.eccentricity << " multiplications=" << result.multiplications
                << " rounds=" << result.ledger.total_rounds() << '\n';
      if (ap.verify) return report(result.distances == oracle::apsp_bfs(g), "apsp");
      return 0;
    }

    if (*bench) {
      bench_config.suite = suite_name == "smm" ? BenchSuite::smm : BenchSuite::triangles;
      bench_config.pad = bench_pad == "pow2" ? PadMode::pow2 : bench_pad == "cube" ? PadMode::cube : PadMode::none;
      const auto rows = run_bench(bench_config);
      with_output(bench_out, [&](std::ostream& os) { write_bench_csv(os, bench_config.suite, rows); });
      return 0;
    }

    if (*partitions) {
      PartitionCheckReport rep;
      check_weight_partitions(rep);
      check_avg_partitions(rep, partition_vectors, partition_seed);
      std::cout << "weight-balanced cases: " << rep.weight_cases << "\navg-partition vectors: " << rep.avg_cases
                << "\nfailures: " << rep.failures.size() << '\n';
      for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
      return rep.ok() ? 0 : kMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
