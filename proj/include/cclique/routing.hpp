#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cclique/engine.hpp"
#include "cclique/sparse_matrix.hpp"

namespace cclique::routing {

/// Message tags used by the redistribution and request/response waves.
enum Tag : std::uint16_t {
  kColumnEntry = 0x100,
  kLineCounts,
  kSubsequenceS,
  kSubsequenceT,
  kRequestS,
  kRequestT,
  kFragmentS,
  kFragmentT,
};

/// A fragment of column `origin` of S (or row `origin` of T): positions
/// [begin, end) of that line's stored entries in index order.
struct SubsequenceRef {
  std::uint32_t origin = 0;
  std::uint32_t part = 0;
  NodeId owner = 0;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  std::uint32_t size() const { return end - begin; }
  friend bool operator==(const SubsequenceRef&, const SubsequenceRef&) = default;
};

/// Which node owns which subsequence. Every node builds this from the
/// broadcast line counts alone, so all copies agree.
///
/// Line l with t_l entries is cut into ceil(t_l / avg) blocks of
/// floor(avg) + 1 entries (avg = total / n). Blocks are numbered in
/// (origin, part) order and block q belongs to node q / 2.
class SubsequenceDirectory {
 public:
  SubsequenceDirectory() = default;
  SubsequenceDirectory(std::span<const std::uint64_t> s_column_counts, std::span<const std::uint64_t> t_row_counts);

  std::span<const SubsequenceRef> s_parts(std::uint32_t origin) const;
  std::span<const SubsequenceRef> t_parts(std::uint32_t origin) const;
  /// Distinct owners of the line's subsequences, ascending.
  std::vector<NodeId> s_owners(std::uint32_t origin) const;
  std::vector<NodeId> t_owners(std::uint32_t origin) const;
  std::vector<SubsequenceRef> owned_s(NodeId v) const;
  std::vector<SubsequenceRef> owned_t(NodeId v) const;

  std::size_t s_count() const { return s_refs_.size(); }
  std::size_t t_count() const { return t_refs_.size(); }
  const std::vector<SubsequenceRef>& all_s() const { return s_refs_; }
  const std::vector<SubsequenceRef>& all_t() const { return t_refs_; }

  friend bool operator==(const SubsequenceDirectory&, const SubsequenceDirectory&) = default;

 private:
  std::vector<SubsequenceRef> s_refs_, t_refs_;
  std::vector<std::uint32_t> s_first_, t_first_;
};

struct HeldSubsequence {
  SubsequenceRef ref;
  SparseRow entries;  // index = row for S, column for T
};

/// Node-local state of the redistribution and routing sub-protocols.
struct RoutingNode {
  SparseRow s_row;       // input: row v of S
  SparseRow t_row;       // input: row v of T
  SparseRow s_column;    // column v of S (index = row), after the column exchange
  SubsequenceDirectory directory;
  std::vector<HeldSubsequence> held_s, held_t;

  std::vector<std::uint32_t> pages;                // lines this node must learn
  std::map<std::uint32_t, SparseRow> s_fragments;  // page l -> column l of S (index = row)
  std::map<std::uint32_t, SparseRow> t_fragments;  // page l -> row l of T (index = column)
};

/// Spreads the entries of S's columns and T's rows so every node holds at
/// most two subsequences of each, and every node knows the directory.
///
/// Waves: `<prefix>sending.columns`, `<prefix>sending.counts`,
/// `<prefix>sending.redistribute`.
void compute_sending(Clique& clique, NodeLocal<RoutingNode>& nodes, std::string_view prefix);

/// Which entries a responder returns for a request from `requester`.
/// Evaluated by the responding node from its own knowledge.
struct FragmentFilter {
  std::function<bool(const NodeContext& responder, NodeId requester, std::uint32_t row)> s_row;
  std::function<bool(const NodeContext& responder, NodeId requester, std::uint32_t col)> t_col;
};

/// Each node asks the owners of the subsequences of every line in `pages`;
/// owners answer with the entries the filter admits. Afterwards
/// `s_fragments` / `t_fragments` hold one (possibly empty) entry per page.
///
/// Waves: `<prefix>routing.requests`, `<prefix>routing.responses`.
/// A request for a line the target owns no subsequence of is a
/// SimulationError.
void resolve_routing(Clique& clique, NodeLocal<RoutingNode>& nodes, const FragmentFilter& filter,
                     std::string_view prefix);

}  // namespace cclique::routing
