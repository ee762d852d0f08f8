#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "cclique/graph.hpp"
#include "cclique/sparse_matrix.hpp"

namespace cclique {

/// Reads `%%MatrixMarket matrix coordinate {integer|real|pattern} {general|symmetric}`.
/// Coordinates are 1-indexed in the file. Stored values equal to the
/// semiring's omitted element are dropped; duplicate coordinates, non-square
/// shapes and out-of-range indices raise ParseError.
SparseMatrix read_matrix_market(std::istream& in, Semiring semiring);
SparseMatrix load_matrix_market(const std::filesystem::path& path, Semiring semiring);

/// Writes `coordinate integer general`, rows then columns ascending.
void write_matrix_market(std::ostream& out, const SparseMatrix& m);
void save_matrix_market(const std::filesystem::path& path, const SparseMatrix& m);

/// One `u v` pair per line, 0-indexed; `#` starts a comment. The node count is
/// max id + 1 unless `nodes` is given or a `# nodes N` line declares it.
Graph read_edge_list(std::istream& in, bool directed, std::optional<std::size_t> nodes = std::nullopt);
Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     std::optional<std::size_t> nodes = std::nullopt);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace cclique
