#include <doctest.h>

#include <vector>

#include "cclique/generate.hpp"
#include "cclique/oracle.hpp"

using namespace cclique;

// Closed forms on structured families.

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::undirected(n, e);
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("complete graphs") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto g = complete(n);
    CHECK(oracle::enumerate_triangles(g).size() == 2 * choose(n, 3));
    CHECK(oracle::enumerate_4_cycles(g) == 3 * choose(n, 4));
  }
}

TEST_CASE("complete bipartite graphs") {
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q) {
      std::vector<Edge> e;
      for (NodeId u = 0; u < p; ++u)
        for (NodeId v = 0; v < q; ++v) e.push_back({u, static_cast<NodeId>(p + v)});
      const auto g = Graph::undirected(p + q, e);
      CHECK(oracle::enumerate_triangles(g).empty());
      CHECK(oracle::enumerate_4_cycles(g) == choose(p, 2) * choose(q, 2));
    }
}

TEST_CASE("paths and cycles") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<Edge> e;
    for (NodeId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    const auto d = oracle::apsp_bfs(Graph::undirected(n, e));
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) CHECK(d[u][v] == (u > v ? u - v : v - u));
    e.push_back({static_cast<NodeId>(n - 1), 0});
    if (n >= 3) {
      const auto dc = oracle::apsp_bfs(Graph::undirected(n, e));
      for (NodeId v = 0; v < n; ++v) CHECK(dc[0][v] == std::min<Value>(v, n - v));
    }
  }
}

TEST_CASE("multiplication identities") {
  for (const auto& sr : {boolean_semiring(), counting_semiring(), min_plus_semiring()}) {
    const auto m = gen::random_matrix(10, 35, sr, 3);
    const auto id = SparseMatrix::identity(10, sr);
    CHECK(oracle::dense_multiply(m, id) == m);
    CHECK(oracle::dense_multiply(id, m) == m);
    const auto a = gen::random_matrix(10, 20, sr, 4);
    const auto b = gen::random_matrix(10, 20, sr, 5);
    CHECK(oracle::dense_multiply(oracle::dense_multiply(m, a), b) ==
          oracle::dense_multiply(m, oracle::dense_multiply(a, b)));
    CHECK(transpose(oracle::dense_multiply(a, b)) == oracle::dense_multiply(transpose(b), transpose(a)));
  }
}
