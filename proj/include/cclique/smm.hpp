#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cclique/engine.hpp"
#include "cclique/rational.hpp"
#include "cclique/routing.hpp"
#include "cclique/sparse_matrix.hpp"

namespace cclique {

/// Row bands (a) and column bands (b). Valid for n when a | n, b | n, ab | n.
struct SplitPair {
  std::uint32_t a = 1;
  std::uint32_t b = 1;

  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

/// All valid pairs for n, sorted lexicographically.
std::vector<SplitPair> split_pairs(std::size_t n);
bool is_valid_split(std::size_t n, SplitPair p);
/// nzS * b / n^2 + nzT * a / n^2 + n / (ab), exactly.
Rational split_cost(std::uint64_t nz_s, std::uint64_t nz_t, std::size_t n, SplitPair p);
/// Minimizes split_cost over split_pairs(n); ties go to the smallest (a, b).
SplitPair choose_split(std::uint64_t nz_s, std::uint64_t nz_t, std::size_t n);

/// Node v plays v_{i,j,k} with v = (i * b + j) * (n / ab) + k.
struct NodeTriple {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  friend bool operator==(const NodeTriple&, const NodeTriple&) = default;
};
NodeTriple alias(NodeId v, std::size_t n, SplitPair p);
NodeId alias_node(NodeTriple t, std::size_t n, SplitPair p);

/// Maps index v to band position: the weight-balanced partition of `counts`
/// into `bands` parts (bound x) lays part p out over band p.
Permutation band_permutation(std::span<const std::uint64_t> counts, std::size_t bands, std::uint64_t x);

struct BalancedPair {
  SparseMatrix s;  // rows permuted by sigma
  SparseMatrix t;  // columns permuted by tau
  Permutation sigma;
  Permutation tau;
  SplitPair split;
};
BalancedPair balance_inputs(const SparseMatrix& s, const SparseMatrix& t, SplitPair split);

/// nz(S_i) * a <= nz(S) + a * n for every row band and the same for T's
/// column bands with b.
bool is_sparsity_balanced(const SparseMatrix& s, const SparseMatrix& t, SplitPair split);

/// Pages handed to v_{i,j,k} for k = 0 .. n/ab - 1, given the page weights
/// w_l of one (i, j) pair. Ties in weight go to the smaller page.
std::vector<std::vector<std::uint32_t>> page_assignment(std::span<const std::uint64_t> weights, SplitPair split);

/// What the balanced multiplication decided, gathered after the run.
struct SbmmAudit {
  routing::SubsequenceDirectory directory;
  std::vector<std::vector<std::uint32_t>> pages;          // per node
  std::vector<std::vector<std::uint64_t>> page_weights;   // per node, weights of its (i, j) pair
  std::vector<std::vector<routing::HeldSubsequence>> held_s, held_t;
};

struct SbmmResult {
  SparseMatrix product;
  RoundLedger ledger;
  SbmmAudit audit;
};

/// Balanced multiplication of a pair that already satisfies the balance
/// condition. Throws std::invalid_argument otherwise.
SbmmResult sbmm(const SparseMatrix& s, const SparseMatrix& t, SplitPair split, EngineOptions options = {});

struct SmmResult {
  SparseMatrix product;
  RoundLedger ledger;  // entries recorded by this multiplication only
  SplitPair split;
  Permutation sigma;
  Permutation tau;
  SbmmAudit audit;
};

struct SmmOptions {
  EngineOptions engine;
  /// Forces a split instead of the cost minimizer.
  std::optional<SplitPair> split;
};

/// Full pipeline: statistics, balancing permutations, balanced
/// multiplication, and un-permuting. Row v of each input starts at node v.
SmmResult smm(const SparseMatrix& s, const SparseMatrix& t, SmmOptions options = {});
/// Same, on an existing clique, so its ledger accumulates across calls.
SmmResult run_smm(Clique& clique, const SparseMatrix& s, const SparseMatrix& t,
                  std::optional<SplitPair> split = std::nullopt);

enum class PadMode { none, pow2, cube };
std::size_t padded_size(std::size_t n, PadMode mode);
/// Embeds m in the top-left corner of a larger matrix of omitted entries.
SparseMatrix pad_matrix(const SparseMatrix& m, std::size_t n);
/// Top-left n x n block.
SparseMatrix crop_matrix(const SparseMatrix& m, std::size_t n);

}  // namespace cclique
