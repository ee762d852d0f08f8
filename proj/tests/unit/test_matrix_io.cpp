#include <doctest.h>

#include <sstream>

#include "cclique/errors.hpp"
#include "cclique/generate.hpp"
#include "cclique/matrix_io.hpp"

using namespace cclique;

namespace {
SparseMatrix parse(const std::string& text, Semiring sr = counting_semiring()) {
  std::istringstream in(text);
  return read_matrix_market(in, sr);
}
}  // namespace

TEST_CASE("single entry file") {
  const auto m = parse("%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 1 5\n");
  CHECK(m.size() == 2);
  CHECK(m.nz() == 1);
  CHECK(m.at(0, 0) == 5);
}

TEST_CASE("seven coordinate lines give seven entries") {
  const auto m = parse(
      "%%MatrixMarket matrix coordinate integer general\n% comment\n4 4 7\n"
      "1 1 1\n1 2 2\n2 3 3\n3 1 4\n3 4 5\n4 2 6\n4 4 7\n");
  CHECK(m.nz() == 7);
  CHECK(m.at(3, 3) == 7);
}

TEST_CASE("explicit omitted values are dropped") {
  const auto m = parse("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 0\n2 2 3\n");
  CHECK(m.nz() == 1);
}

TEST_CASE("malformed files raise ParseError") {
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 5\n1 1 6\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate integer general\n2 3 1\n1 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse("2 2 1\n1 1 5\n"), ParseError);
}

TEST_CASE("pattern and symmetric files") {
  const auto p = parse("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n3 1\n", boolean_semiring());
  CHECK(p.at(0, 1) == 1);
  CHECK(p.at(2, 0) == 1);
  const auto s = parse("%%MatrixMarket matrix coordinate integer symmetric\n3 3 2\n2 1 4\n3 3 1\n");
  CHECK(s.at(0, 1) == 4);
  CHECK(s.at(1, 0) == 4);
  CHECK(s.nz() == 3);
}

TEST_CASE("write then read is the identity") {
  for (const auto& sr : {boolean_semiring(), counting_semiring(), min_plus_semiring()}) {
    const auto m = gen::random_matrix(12, 40, sr, 3);
    std::ostringstream out;
    write_matrix_market(out, m);
    CHECK(parse(out.str(), sr) == m);
  }
}

TEST_CASE("edge lists") {
  std::istringstream in("# triangle\n0 1\n1 2\n2 0  # closing edge\n");
  const auto g = read_edge_list(in, true);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 2));

  std::istringstream und("0 1\n1 0\n");
  const auto u = read_edge_list(und, false, 5);
  CHECK(u.size() == 5);
  CHECK(u.edge_count() == 2);

  std::istringstream loop("1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop, true), ParseError);
  std::istringstream junk("0 x\n");
  CHECK_THROWS_AS(read_edge_list(junk, true), ParseError);
}

TEST_CASE("edge list round trip keeps isolated nodes") {
  const auto g = gen::random_digraph(10, 5, 4).padded(13);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in, true) == g);
}
