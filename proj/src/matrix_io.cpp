#include "cclique/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cclique/errors.hpp"

namespace cclique {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SparseMatrix read_matrix_market(std::istream& in, Semiring semiring) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market input");
  ++line_no;

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") fail(line_no, "missing %%MatrixMarket banner");
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix" || format != "coordinate") fail(line_no, "only 'matrix coordinate' is supported");
  if (field != "integer" && field != "real" && field != "pattern")
    fail(line_no, "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    fail(line_no, "unsupported symmetry '" + symmetry + "'");
  const bool pattern = field == "pattern";
  const bool symmetric = symmetry == "symmetric";

  std::size_t rows = 0, cols = 0, count = 0;
  bool have_size = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> count)) fail(line_no, "malformed size line");
    have_size = true;
    break;
  }
  if (!have_size) throw ParseError("missing size line");
  if (rows != cols) fail(line_no, "matrix must be square");
  const std::size_t n = rows;

  std::vector<Triplet> entries;
  entries.reserve(symmetric ? 2 * count : count);
  std::size_t seen = 0;
  while (seen < count && std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    if (!(entry >> i >> j)) fail(line_no, "malformed entry");
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
      fail(line_no, "index out of range");
    Value value = semiring.one;
    if (!pattern) {
      std::string token;
      if (!(entry >> token)) fail(line_no, "missing value");
      if (field == "integer") {
        std::size_t used = 0;
        try {
          value = std::stoll(token, &used);
        } catch (const std::exception&) {
          fail(line_no, "bad integer '" + token + "'");
        }
        if (used != token.size()) fail(line_no, "bad integer '" + token + "'");
      } else {
        double d = 0;
        try {
          d = std::stod(token);
        } catch (const std::exception&) {
          fail(line_no, "bad value '" + token + "'");
        }
        if (std::isinf(d) && d > 0) {
          value = kInfinity;
        } else {
          if (!std::isfinite(d) || std::trunc(d) != d) fail(line_no, "value '" + token + "' is not integral");
          value = static_cast<Value>(d);
        }
      }
    }
    auto r = static_cast<std::uint32_t>(i - 1);
    auto c = static_cast<std::uint32_t>(j - 1);
    entries.push_back({r, c, value});
    if (symmetric && r != c) entries.push_back({c, r, value});
    ++seen;
  }
  if (seen < count) throw ParseError("expected " + std::to_string(count) + " entries, found " + std::to_string(seen));

  try {
    return SparseMatrix::from_triplets(n, semiring, entries);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SparseMatrix load_matrix_market(const std::filesystem::path& path, Semiring semiring) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_matrix_market(in, semiring);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& m) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << "% semiring " << m.semiring().name << '\n';
  out << m.size() << ' ' << m.size() << ' ' << m.nz() << '\n';
  for (const auto& t : m.triplets()) out << (t.row + 1) << ' ' << (t.col + 1) << ' ' << t.value << '\n';
}

void save_matrix_market(const std::filesystem::path& path, const SparseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix_market(out, m);
}

Graph read_edge_list(std::istream& in, bool directed, std::optional<std::size_t> nodes) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_id = 0;
  bool any = false;
  std::optional<std::size_t> declared;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("# nodes ", 0) == 0) {
      std::istringstream count(line.substr(8));
      std::size_t k = 0;
      if (!(count >> k)) fail(line_no, "bad '# nodes' header");
      declared = k;
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    std::istringstream pair(line);
    long long u = 0, v = 0;
    if (!(pair >> u >> v)) fail(line_no, "expected 'u v'");
    std::string rest;
    if (pair >> rest) fail(line_no, "trailing data '" + rest + "'");
    if (u < 0 || v < 0 || u > UINT32_MAX - 1 || v > UINT32_MAX - 1) fail(line_no, "node id out of range");
    if (u == v) fail(line_no, "self-loop");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(std::max(u, v)));
    any = true;
  }
  std::size_t n = any ? max_id + 1 : 0;
  if (!nodes && declared) {
    if (*declared < n) fail(line_no, "'# nodes' header is smaller than the largest id");
    n = *declared;
  }
  if (nodes) {
    if (*nodes < n) throw ParseError("edge list references node " + std::to_string(max_id) + " beyond --nodes");
    n = *nodes;
  }
  try {
    return directed ? Graph(n, edges) : Graph::undirected(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph load_edge_list(const std::filesystem::path& path, bool directed, std::optional<std::size_t> nodes) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_edge_list(in, directed, nodes);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace cclique
