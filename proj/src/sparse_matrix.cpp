#include "cclique/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cclique {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<std::uint32_t>(i);
  return from_forward(std::move(f));
}

Permutation Permutation::from_forward(std::vector<std::uint32_t> forward) {
  Permutation p;
  const std::size_t n = forward.size();
  p.inverse_.assign(n, UINT32_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = forward[i];
    if (f >= n || p.inverse_[f] != UINT32_MAX)
      throw std::invalid_argument("Permutation: not a bijection at index " + std::to_string(i));
    p.inverse_[f] = static_cast<std::uint32_t>(i);
  }
  p.forward_ = std::move(forward);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.forward_ = inverse_;
  p.inverse_ = forward_;
  return p;
}

SparseMatrix::SparseMatrix(std::size_t n, Semiring semiring) : semiring_(semiring), rows_(n) {}

void normalize_row(SparseRow& row, std::size_t n) {
  std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].index >= n)
      throw std::invalid_argument("index " + std::to_string(row[k].index) + " out of range");
    if (k > 0 && row[k].index == row[k - 1].index)
      throw std::invalid_argument("duplicate entry at index " + std::to_string(row[k].index));
  }
}

SparseMatrix SparseMatrix::from_rows(std::size_t n, Semiring semiring, std::vector<SparseRow> rows) {
  if (rows.size() != n) throw std::invalid_argument("SparseMatrix: expected " + std::to_string(n) + " rows");
  SparseMatrix m(n, semiring);
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = rows[i];
    try {
      normalize_row(row, n);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("SparseMatrix row " + std::to_string(i) + ": " + e.what());
    }
    std::erase_if(row, [&](const Entry& e) { return semiring.is_omitted(e.value); });
    m.nz_ += row.size();
    m.rows_[i] = std::move(row);
  }
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t n, Semiring semiring, std::span<const Triplet> entries) {
  std::vector<SparseRow> rows(n);
  for (const auto& t : entries) {
    if (t.row >= n || t.col >= n)
      throw std::invalid_argument("SparseMatrix: coordinate (" + std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ") out of range");
    rows[t.row].push_back({t.col, t.value});
  }
  return from_rows(n, semiring, std::move(rows));
}

SparseMatrix SparseMatrix::identity(std::size_t n, Semiring semiring) {
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].push_back({static_cast<std::uint32_t>(i), semiring.one});
  return from_rows(n, semiring, std::move(rows));
}

Value SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, std::size_t idx) { return e.index < idx; });
  if (it != row.end() && it->index == j) return it->value;
  return semiring_.omitted;
}

std::vector<std::uint64_t> SparseMatrix::row_counts() const {
  std::vector<std::uint64_t> counts(size());
  for (std::size_t i = 0; i < size(); ++i) counts[i] = rows_[i].size();
  return counts;
}

std::vector<std::uint64_t> SparseMatrix::column_counts() const {
  std::vector<std::uint64_t> counts(size());
  for (const auto& row : rows_)
    for (const auto& e : row) ++counts[e.index];
  return counts;
}

std::size_t SparseMatrix::nz_row_band(std::size_t lo, std::size_t hi) const {
  std::size_t total = 0;
  for (std::size_t i = lo; i < hi; ++i) total += rows_[i].size();
  return total;
}

std::size_t SparseMatrix::nz_col_band(std::size_t lo, std::size_t hi) const {
  std::size_t total = 0;
  for (const auto& row : rows_)
    for (const auto& e : row)
      if (e.index >= lo && e.index < hi) ++total;
  return total;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nz_);
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& e : rows_[i]) out.push_back({static_cast<std::uint32_t>(i), e.index, e.value});
  return out;
}

SparseMatrix permute_rows(const SparseMatrix& m, const Permutation& sigma) {
  if (sigma.size() != m.size()) throw std::invalid_argument("permute_rows: size mismatch");
  std::vector<SparseRow> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto r = m.row(i);
    rows[sigma(i)] = SparseRow(r.begin(), r.end());
  }
  return SparseMatrix::from_rows(m.size(), m.semiring(), std::move(rows));
}

SparseMatrix permute_cols(const SparseMatrix& m, const Permutation& tau) {
  if (tau.size() != m.size()) throw std::invalid_argument("permute_cols: size mismatch");
  std::vector<SparseRow> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m.row(i)) rows[i].push_back({tau(e.index), e.value});
  return SparseMatrix::from_rows(m.size(), m.semiring(), std::move(rows));
}

SparseMatrix transpose(const SparseMatrix& m) {
  std::vector<SparseRow> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m.row(i)) rows[e.index].push_back({static_cast<std::uint32_t>(i), e.value});
  return SparseMatrix::from_rows(m.size(), m.semiring(), std::move(rows));
}

}  // namespace cclique
