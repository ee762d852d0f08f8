#include <doctest.h>

#include <vector>

#include "cclique/oracle.hpp"

using namespace cclique;

TEST_CASE("dense multiply by hand") {
  const std::vector<Triplet> a = {{0, 0, 1}, {0, 1, 2}, {1, 0, 3}, {1, 1, 4}};
  const std::vector<Triplet> b = {{0, 0, 5}, {0, 1, 6}, {1, 0, 7}, {1, 1, 8}};
  const auto p = oracle::dense_multiply(SparseMatrix::from_triplets(2, counting_semiring(), a),
                                        SparseMatrix::from_triplets(2, counting_semiring(), b));
  CHECK(p.at(0, 0) == 19);
  CHECK(p.at(0, 1) == 22);
  CHECK(p.at(1, 0) == 43);
  CHECK(p.at(1, 1) == 50);

  const auto q = oracle::dense_multiply(SparseMatrix::from_triplets(2, min_plus_semiring(), a),
                                        SparseMatrix::from_triplets(2, min_plus_semiring(), b));
  CHECK(q.at(0, 0) == 6);   // min(1 + 5, 2 + 7)
  CHECK(q.at(1, 1) == 9);   // min(3 + 6, 4 + 8)

  const std::vector<Triplet> c = {{0, 1, 1}};
  const auto r = SparseMatrix::from_triplets(2, boolean_semiring(), c);
  CHECK(oracle::dense_multiply(r, r).nz() == 0);
}

TEST_CASE("triangle enumeration by hand") {
  const std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  const auto ts = oracle::enumerate_triangles(Graph(4, e));
  CHECK(ts == std::vector<Triangle>{{0, 1, 2}});

  const std::vector<Edge> k3 = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(oracle::enumerate_triangles(Graph::undirected(3, k3)) == std::vector<Triangle>{{0, 1, 2}, {0, 2, 1}});
}

TEST_CASE("4-cycle enumeration by hand") {
  const std::vector<Edge> c4 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(oracle::enumerate_4_cycles(Graph::undirected(4, c4)) == 1);
  const std::vector<Edge> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(oracle::enumerate_4_cycles(Graph::undirected(4, k4)) == 3);
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {2, 0}};
  CHECK(oracle::enumerate_4_cycles(Graph::undirected(3, tri)) == 0);
}

TEST_CASE("bfs distances by hand") {
  const std::vector<Edge> p = {{0, 1}, {1, 2}, {2, 3}};
  const auto d = oracle::apsp_bfs(Graph::undirected(5, p));
  CHECK(d[0][3] == 3);
  CHECK(d[3][1] == 2);
  CHECK(d[0][4] == kInfinity);
  CHECK(d[4][4] == 0);
}

TEST_CASE("boolean closure of a DAG") {
  // 0 -> 1 -> 2 -> 3 and 0 -> 4; squares reach exactly the 2-step pairs.
  const std::vector<Triplet> e = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 4, 1},
                                  {0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}};
  const auto a = SparseMatrix::from_triplets(5, boolean_semiring(), e);
  const auto r = oracle::dense_multiply(a, a);
  const std::vector<std::pair<int, int>> reach = {{0, 0}, {0, 1}, {0, 2}, {0, 4}, {1, 1}, {1, 2}, {1, 3},
                                                  {2, 2}, {2, 3}, {3, 3}, {4, 4}};
  CHECK(r.nz() == reach.size());
  for (auto [u, v] : reach) CHECK(r.at(u, v) == 1);
}

TEST_CASE("acyclic and tree shapes") {
  const std::vector<Edge> dag = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}};
  CHECK(oracle::enumerate_triangles(Graph(4, dag)).empty());
  const std::vector<Edge> tree = {{0, 1}, {0, 2}, {2, 3}, {2, 4}};
  CHECK(oracle::enumerate_4_cycles(Graph::undirected(5, tree)) == 0);
  const std::vector<Edge> k3 = {{0, 1}, {1, 2}, {0, 2}};
  const auto d = oracle::apsp_bfs(Graph::undirected(3, k3));
  CHECK(d == DistanceMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}
