#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cclique/semiring.hpp"

namespace cclique {

/// One stored entry of a row (index = column) or of a column (index = row).
struct Entry {
  std::uint32_t index = 0;
  Value value = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Strictly increasing in `index`, never holding the omitted element.
using SparseRow = std::vector<Entry>;

struct Triplet {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Value value = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Bijection on [0, n) with its inverse precomputed.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t n);
  /// Throws std::invalid_argument unless `forward` is a bijection on [0, n).
  static Permutation from_forward(std::vector<std::uint32_t> forward);

  std::size_t size() const { return forward_.size(); }
  std::uint32_t operator()(std::size_t i) const { return forward_[i]; }
  std::uint32_t inverse_of(std::size_t i) const { return inverse_[i]; }
  Permutation inverse() const;
  std::span<const std::uint32_t> forward() const { return forward_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

/// n x n coordinate-sparse matrix over a semiring, stored by rows.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t n, Semiring semiring);

  /// Drops entries equal to the omitted element. Throws std::invalid_argument
  /// on an out-of-range or duplicate coordinate.
  static SparseMatrix from_triplets(std::size_t n, Semiring semiring, std::span<const Triplet> entries);
  /// Takes per-row entry lists in any order; same validation as from_triplets.
  static SparseMatrix from_rows(std::size_t n, Semiring semiring, std::vector<SparseRow> rows);
  static SparseMatrix identity(std::size_t n, Semiring semiring);

  std::size_t size() const { return rows_.size(); }
  const Semiring& semiring() const { return semiring_; }

  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  /// The stored value, or the omitted element.
  Value at(std::size_t i, std::size_t j) const;

  std::size_t nz() const { return nz_; }
  std::size_t row_nz(std::size_t i) const { return rows_[i].size(); }
  std::vector<std::uint64_t> row_counts() const;
  std::vector<std::uint64_t> column_counts() const;
  /// Stored entries in rows [lo, hi).
  std::size_t nz_row_band(std::size_t lo, std::size_t hi) const;
  /// Stored entries in columns [lo, hi).
  std::size_t nz_col_band(std::size_t lo, std::size_t hi) const;

  std::vector<Triplet> triplets() const;

  friend bool operator==(const SparseMatrix& x, const SparseMatrix& y) {
    return x.semiring_ == y.semiring_ && x.rows_ == y.rows_;
  }

 private:
  Semiring semiring_{};
  std::vector<SparseRow> rows_;
  std::size_t nz_ = 0;
};

/// result[sigma(i)][j] = m[i][j].
SparseMatrix permute_rows(const SparseMatrix& m, const Permutation& sigma);
/// result[i][tau(j)] = m[i][j].
SparseMatrix permute_cols(const SparseMatrix& m, const Permutation& tau);
/// result[j][i] = m[i][j]; the column-major view each node gets of its column.
SparseMatrix transpose(const SparseMatrix& m);

/// Sorts a row by index and rejects duplicates and out-of-range indices.
void normalize_row(SparseRow& row, std::size_t n);

}  // namespace cclique
