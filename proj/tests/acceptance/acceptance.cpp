// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [path/to/cclique data_dir work_dir]
//
// With the optional arguments, criterion 10 also runs the command-line tool.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cclique/bench.hpp"
#include "cclique/generate.hpp"
#include "cclique/graph_algorithms.hpp"
#include "cclique/matrix_io.hpp"
#include "cclique/oracle.hpp"
#include "cclique/partition_checks.hpp"
#include "cclique/smm.hpp"
#include "cclique/triangles.hpp"
#include "smm_checks.hpp"

namespace fs = std::filesystem;
using namespace cclique;

namespace {

// Per-node LearnEdges / LearnPaths loads must stay below this multiple of
// beta = m / c^2 + n. Fixed before the sweep was run.
constexpr std::uint64_t kBetaConstant = 12;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 8) failures.push_back(std::move(what));
  }
};

std::string ledger_text(const RoundLedger& l) {
  std::ostringstream os;
  l.write_csv(os);
  return os.str();
}

std::string matrix_text(const SparseMatrix& m) {
  std::ostringstream os;
  write_matrix_market(os, m);
  return os.str();
}

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Criteria 1-3 share the same runs.
struct SmmSweep {
  Outcome equivalence, balance, loads;
};

SmmSweep smm_sweep() {
  SmmSweep out;
  std::size_t runs = 0;
  for (const auto& sr : {boolean_semiring(), counting_semiring(), min_plus_semiring()})
    for (std::size_t n : {4, 8, 16, 27, 32, 64})
      for (double density : {0.05, 0.2, 0.8})
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
          const auto nz = static_cast<std::uint64_t>(std::llround(density * static_cast<double>(n * n)));
          const auto s = gen::random_matrix(n, nz, sr, seed * 1000 + n);
          const auto t = gen::random_matrix(n, nz, sr, seed * 1000 + n + 500);
          const auto r = smm(s, t);
          ++runs;
          const std::string tag = std::string(sr.name) + " n=" + std::to_string(n) + " d=" + std::to_string(density) +
                                  " seed=" + std::to_string(seed);
          if (!(r.product == oracle::dense_multiply(s, t))) out.equivalence.fail(tag + ": product differs");
          for (const auto& v : checks::balance_violations(s, t, r)) out.balance.fail(tag + ": " + v);
          for (const auto& v : checks::load_violations(s, t, r)) out.loads.fail(tag + ": " + v);
        }
  out.equivalence.detail = std::to_string(runs) + " products";
  out.balance.detail = std::to_string(runs) + " balanced pairs";
  out.loads.detail = std::to_string(runs) + " ledgers";
  return out;
}

Outcome smm_scaling() {
  Outcome out;
  const std::size_t n = 64;
  const std::vector<std::uint64_t> ms = {1u << 6, 1u << 8, 1u << 10, 1u << 12};
  const int seeds = 5;
  std::vector<double> rounds;
  for (auto m : ms) {
    double sum = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
      const auto s = gen::random_matrix(n, m, counting_semiring(), 7000 + 2 * seed);
      const auto t = gen::random_matrix(n, m, counting_semiring(), 7001 + 2 * seed);
      sum += static_cast<double>(smm(s, t).ledger.total_rounds());
    }
    rounds.push_back(sum / seeds);
  }
  std::vector<double> x, y;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const double excess = rounds[i] - rounds[0];
    if (excess <= 0) {
      out.fail("rounds at m=" + std::to_string(ms[i]) + " do not exceed those at m=64");
      continue;
    }
    x.push_back(static_cast<double>(ms[i]));
    y.push_back(excess);
  }
  const double slope = x.size() >= 2 ? log_slope(x, y) : 0.0;
  // The bound curve itself through the same subtract-and-fit procedure.
  std::vector<double> bx, by;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    bx.push_back(static_cast<double>(ms[i]));
    by.push_back((std::pow(static_cast<double>(ms[i]), 2.0 / 3.0) - std::pow(static_cast<double>(ms[0]), 2.0 / 3.0)) / n);
  }
  const double reference = log_slope(bx, by);
  std::vector<double> ratio;
  for (std::size_t i = 0; i < ms.size(); ++i)
    ratio.push_back(rounds[i] / (std::pow(static_cast<double>(ms[i]), 2.0 / 3.0) / n + 1.0));
  const double spread = *std::max_element(ratio.begin(), ratio.end()) / *std::min_element(ratio.begin(), ratio.end());
  std::ostringstream d;
  d << "rounds";
  for (auto r : rounds) d << ' ' << r;
  d << "; slope " << slope << " (bound curve " << reference << "); ratio spread " << spread;
  out.detail = d.str();
  if (std::abs(slope - 2.0 / 3.0) > 0.2) out.fail("slope outside 2/3 +- 0.2");
  if (spread > 3.0) out.fail("ratio spread above 3");
  return out;
}

Outcome triangle_completeness() {
  Outcome out;
  // All digraphs on 4 labeled vertices embedded in 8 nodes.
  std::vector<Edge> slots;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = 0; v < 4; ++v)
      if (u != v) slots.push_back({u, v});
  std::size_t cases = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1u) e.push_back(slots[b]);
    const Graph g(8, e);
    if (list_triangles(g).triangles != oracle::enumerate_triangles(g)) out.fail("4-vertex mask " + std::to_string(mask));
    ++cases;
  }
  gen::Rng rng(2024);
  for (std::size_t n : {27, 64})
    for (int i = 0; i < 100; ++i) {
      const std::uint64_t m = rng.below(n * (n - 1) / 2 + 1);
      const auto g = gen::random_digraph(n, m, rng.below(1u << 30));
      const auto r = list_triangles(g);
      if (r.triangles != oracle::enumerate_triangles(g))
        out.fail("G(" + std::to_string(n) + ", " + std::to_string(m) + ") listing differs");
      for (const auto& v : check_partition_invariants(g, r.state)) out.fail("invariant: " + v);
      ++cases;
    }
  out.detail = std::to_string(cases) + " graphs";
  return out;
}

Outcome triangle_scaling() {
  Outcome out;
  const std::size_t n = 64;
  const int seeds = 5;
  std::vector<double> ratio;
  double worst = 0;
  std::ostringstream d;
  d << "rounds";
  for (std::uint64_t m : {1u << 7, 1u << 9, 1u << 11}) {
    double sum = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
      const auto g = gen::random_digraph(n, m, 9000 + seed);
      const auto r = list_triangles(g);
      sum += static_cast<double>(r.ledger.total_rounds());
      for (const auto& e : r.ledger.entries()) {
        const bool tracked = e.phase.find("learn_edges") != std::string::npos ||
                             e.phase.find("learn_paths") != std::string::npos;
        if (!tracked) continue;
        const Rational load(std::max(e.max_send, e.max_recv));
        worst = std::max(worst, (load / r.state.beta).to_double());
        if (load > Rational(kBetaConstant) * r.state.beta)
          out.fail(e.phase + " load " + std::to_string(std::max(e.max_send, e.max_recv)) + " at m=" + std::to_string(m));
      }
    }
    const double mean = sum / seeds;
    d << ' ' << mean;
    ratio.push_back(mean / (static_cast<double>(m) / std::pow(64.0, 5.0 / 3.0) + 1.0));
  }
  const double spread = *std::max_element(ratio.begin(), ratio.end()) / *std::min_element(ratio.begin(), ratio.end());
  d << "; ratio spread " << spread << "; max load/beta " << worst << " (limit " << kBetaConstant << ")";
  out.detail = d.str();
  if (spread > 3.0) out.fail("ratio spread above 3");
  return out;
}

Outcome four_cycles() {
  Outcome out;
  std::vector<Edge> slots;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) slots.push_back({u, v});
  std::size_t cases = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1u) e.push_back(slots[b]);
    const auto g = Graph::undirected(5, e);
    if (count_4_cycles(g).count != oracle::enumerate_4_cycles(g)) out.fail("5-vertex mask " + std::to_string(mask));
    ++cases;
  }
  gen::Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t m = rng.below(16 * 15 / 2 + 1);
    const auto g = gen::random_graph(16, m, rng.below(1u << 30));
    if (count_4_cycles(g).count != oracle::enumerate_4_cycles(g)) out.fail("G(16, " + std::to_string(m) + ")");
    ++cases;
  }
  const std::vector<Edge> c4 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const std::vector<Edge> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  if (count_4_cycles(Graph::undirected(4, c4)).count != 1) out.fail("C4 does not give 1");
  if (count_4_cycles(Graph::undirected(4, k4)).count != 3) out.fail("K4 does not give 3");
  std::size_t max_waves = 0;
  for (std::size_t n : {2, 5, 16, 64, 128}) {
    const auto a = gen::random_matrix(n, n * n / 4, counting_semiring(), n);
    const auto r = trace_product(a, a);
    std::size_t waves = 0;
    for (const auto& e : r.ledger.entries())
      if (e.rounds > 0) ++waves;
    max_waves = std::max(max_waves, waves);
    if (waves > 3) out.fail("trace_product charged " + std::to_string(waves) + " waves at n=" + std::to_string(n));
  }
  out.detail = std::to_string(cases) + " graphs; trace waves <= " + std::to_string(max_waves);
  return out;
}

Outcome apsp_check() {
  Outcome out;
  std::size_t cases = 0;
  gen::Rng rng(33);
  for (std::size_t n : {16, 32})
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t m = rng.between(n - 1, 3 * n);
      const auto g = gen::random_connected_graph(n, m, rng.below(1u << 30));
      const auto r = apsp(g);
      const std::string tag = "G(" + std::to_string(n) + ", " + std::to_string(m) + ")";
      if (r.distances != oracle::apsp_bfs(g)) out.fail(tag + " distances differ");
      const auto ecc = bfs_ecc(g, 0).eccentricity;
      const std::size_t calls = r.ledger.count_with_suffix("smm.stats");
      if (calls != 2 * static_cast<std::size_t>(ecc) - 1 || calls != r.multiplications)
        out.fail(tag + ": " + std::to_string(calls) + " smm calls for eccentricity " + std::to_string(ecc));
      ++cases;
    }
  out.detail = std::to_string(cases) + " graphs";
  return out;
}

Outcome partition_claims() {
  Outcome out;
  PartitionCheckReport rep;
  check_weight_partitions(rep, 8, 4);
  check_avg_partitions(rep, 1000, 9);
  for (const auto& f : rep.failures) out.fail(f);
  out.detail = std::to_string(rep.weight_cases) + " weight cases, " + std::to_string(rep.avg_cases) + " size vectors";
  return out;
}

// Runs `produce` three times and requires identical strings.
void same_thrice(Outcome& out, const std::string& what, const std::function<std::string()>& produce) {
  const std::string first = produce();
  for (int i = 0; i < 2; ++i)
    if (produce() != first) {
      out.fail(what + " differs between runs");
      return;
    }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism(int argc, char** argv) {
  Outcome out;
  same_thrice(out, "multiply", [] {
    const auto s = gen::random_matrix(27, 200, min_plus_semiring(), 1);
    const auto t = gen::random_matrix(27, 90, min_plus_semiring(), 2);
    SmmOptions opt;
    opt.engine.parallel = true;
    const auto r = smm(s, t, opt);
    return matrix_text(r.product) + ledger_text(r.ledger);
  });
  same_thrice(out, "triangles", [] {
    TriangleOptions opt;
    opt.engine.parallel = true;
    const auto r = list_triangles(gen::random_digraph(64, 900, 3), opt);
    std::ostringstream os;
    for (const auto& t : r.triangles) os << t.v0 << ' ' << t.v1 << ' ' << t.v2 << '\n';
    return os.str() + ledger_text(r.ledger);
  });
  same_thrice(out, "four-cycles", [] {
    const auto r = count_4_cycles(gen::random_graph(16, 40, 4));
    return std::to_string(r.count) + "\n" + ledger_text(r.ledger);
  });
  same_thrice(out, "apsp", [] {
    const auto r = apsp(gen::random_connected_graph(24, 40, 5));
    std::ostringstream os;
    for (const auto& row : r.distances)
      for (auto d : row) os << d << ' ';
    return os.str() + ledger_text(r.ledger);
  });
  same_thrice(out, "bench", [] {
    BenchConfig cfg;
    cfg.sizes = {16};
    cfg.counts = {20, 100};
    cfg.seed = 7;
    std::ostringstream os;
    write_bench_csv(os, cfg.suite, run_bench(cfg));
    return os.str();
  });
  std::size_t commands = 5;

  if (argc >= 4) {
    const fs::path cli = argv[1], data = argv[2], work = argv[3];
    fs::create_directories(work);
    const std::vector<std::string> invocations = {
        "multiply --lhs " + (data / "lhs.mtx").string() + " --rhs " + (data / "rhs.mtx").string() + " --semiring minplus",
        "triangles --graph " + (data / "digraph.txt").string() + " --directed --pad-cube",
        "four-cycles --graph " + (data / "grid.txt").string(),
        "apsp --graph " + (data / "grid.txt").string(),
        "bench --suite triangles --sizes 27 --counts 100,300 --seed 5",
        "verify-partitions --vectors 50 --seed 3",
    };
    for (std::size_t k = 0; k < invocations.size(); ++k) {
      same_thrice(out, "cli " + invocations[k].substr(0, invocations[k].find(' ')), [&, k] {
        const fs::path o = work / ("out" + std::to_string(k)), l = work / ("ledger" + std::to_string(k));
        fs::remove(o);
        fs::remove(l);
        const bool takes_ledger = k < 4;
        const std::string cmd = "\"" + cli.string() + "\" " + invocations[k] +
                                (takes_ledger ? " --ledger \"" + l.string() + "\"" : "") + " > \"" + o.string() +
                                "\" 2> /dev/null";
        const int status = std::system(cmd.c_str());
        return std::to_string(status) + "\n" + read_file(o) + read_file(l);
      });
      ++commands;
    }
  }
  out.detail = std::to_string(commands) + " commands x 3 runs";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int failed = 0;
  auto emit = [&](int id, const char* name, const Outcome& o, double seconds) {
    std::cout << "criterion " << id << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << "  [" << o.detail
              << "; " << std::fixed;
    std::cout.precision(1);
    std::cout << seconds << "s]\n";
    std::cout.unsetf(std::ios::fixed);
    std::cout.precision(6);
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
    if (!o.pass) ++failed;
  };
  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    return std::pair{std::move(result),
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
  };

  auto [sweep, t1] = timed(smm_sweep);
  emit(1, "oracle equivalence", sweep.equivalence, t1);
  emit(2, "sparsity balance", sweep.balance, 0);
  emit(3, "load bounds", sweep.loads, 0);
  {
    auto [o, t] = timed(smm_scaling);
    emit(4, "smm scaling", o, t);
  }
  {
    auto [o, t] = timed(triangle_completeness);
    emit(5, "triangle completeness", o, t);
  }
  {
    auto [o, t] = timed(triangle_scaling);
    emit(6, "triangle scaling", o, t);
  }
  {
    auto [o, t] = timed(four_cycles);
    emit(7, "4-cycle counting", o, t);
  }
  {
    auto [o, t] = timed(apsp_check);
    emit(8, "apsp", o, t);
  }
  {
    auto [o, t] = timed(partition_claims);
    emit(9, "partition claims", o, t);
  }
  {
    auto [o, t] = timed([&] { return determinism(argc, argv); });
    emit(10, "determinism", o, t);
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
