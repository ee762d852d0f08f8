#include "cclique/routing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cclique/errors.hpp"
#include "cclique/partition.hpp"

namespace cclique::routing {
namespace {

void plan(std::span<const std::uint64_t> counts, std::vector<SubsequenceRef>& refs,
          std::vector<std::uint32_t>& first) {
  const std::size_t n = counts.size();
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  first.assign(n + 1, 0);
  if (n == 0) return;
  const std::size_t block = avg_block_size(total, n);
  for (std::size_t l = 0; l < n; ++l) {
    first[l] = static_cast<std::uint32_t>(refs.size());
    const std::size_t parts = avg_part_count(counts[l], total, n);
    for (std::size_t p = 0; p < parts; ++p) {
      SubsequenceRef ref;
      ref.origin = static_cast<std::uint32_t>(l);
      ref.part = static_cast<std::uint32_t>(p);
      ref.owner = static_cast<NodeId>(refs.size() / 2);
      ref.begin = static_cast<std::uint32_t>(std::min<std::uint64_t>(counts[l], p * block));
      ref.end = static_cast<std::uint32_t>(std::min<std::uint64_t>(counts[l], (p + 1) * block));
      refs.push_back(ref);
    }
  }
  first[n] = static_cast<std::uint32_t>(refs.size());
  if (refs.size() > 2 * n)
    throw SimulationError("subsequence count " + std::to_string(refs.size()) + " exceeds 2n");
}

std::vector<NodeId> distinct_owners(std::span<const SubsequenceRef> parts) {
  std::vector<NodeId> owners;
  for (const auto& r : parts)
    if (owners.empty() || owners.back() != r.owner) owners.push_back(r.owner);
  return owners;
}

std::vector<SubsequenceRef> owned(const std::vector<SubsequenceRef>& refs, NodeId v) {
  std::vector<SubsequenceRef> out;
  for (std::size_t q = 2 * static_cast<std::size_t>(v); q < std::min(refs.size(), 2 * static_cast<std::size_t>(v) + 2); ++q)
    out.push_back(refs[q]);
  return out;
}

// Splits the entries a node received for one matrix among the subsequences
// it owns. Entries of one subsequence arrive contiguously from the line's
// holder, in index order, so the known sizes are enough.
std::vector<HeldSubsequence> assign_received(const std::vector<SubsequenceRef>& mine,
                                             std::span<const Message> inbox, std::uint16_t tag, bool by_row) {
  std::vector<HeldSubsequence> held;
  for (const auto& ref : mine) held.push_back({ref, {}});
  for (const auto& m : inbox) {
    if (m.word.tag != tag) continue;
    const std::uint32_t origin = by_row ? m.word.second : m.word.first;
    const std::uint32_t index = by_row ? m.word.first : m.word.second;
    bool placed = false;
    for (auto& h : held) {
      if (h.ref.origin == origin && h.entries.size() < h.ref.size()) {
        h.entries.push_back({index, m.word.value});
        placed = true;
        break;
      }
    }
    if (!placed)
      throw SimulationError("received an entry of line " + std::to_string(origin) + " beyond owned subsequences");
  }
  return held;
}

}  // namespace

SubsequenceDirectory::SubsequenceDirectory(std::span<const std::uint64_t> s_column_counts,
                                           std::span<const std::uint64_t> t_row_counts) {
  plan(s_column_counts, s_refs_, s_first_);
  plan(t_row_counts, t_refs_, t_first_);
}

std::span<const SubsequenceRef> SubsequenceDirectory::s_parts(std::uint32_t origin) const {
  return std::span<const SubsequenceRef>(s_refs_).subspan(s_first_[origin], s_first_[origin + 1] - s_first_[origin]);
}

std::span<const SubsequenceRef> SubsequenceDirectory::t_parts(std::uint32_t origin) const {
  return std::span<const SubsequenceRef>(t_refs_).subspan(t_first_[origin], t_first_[origin + 1] - t_first_[origin]);
}

std::vector<NodeId> SubsequenceDirectory::s_owners(std::uint32_t origin) const { return distinct_owners(s_parts(origin)); }
std::vector<NodeId> SubsequenceDirectory::t_owners(std::uint32_t origin) const { return distinct_owners(t_parts(origin)); }
std::vector<SubsequenceRef> SubsequenceDirectory::owned_s(NodeId v) const { return owned(s_refs_, v); }
std::vector<SubsequenceRef> SubsequenceDirectory::owned_t(NodeId v) const { return owned(t_refs_, v); }

void compute_sending(Clique& clique, NodeLocal<RoutingNode>& nodes, std::string_view prefix) {
  const std::string p(prefix);
  const std::size_t n = clique.size();

  clique.step(p + "sending.columns", [&](NodeContext& ctx) {
    for (const auto& e : nodes.at(ctx).s_row) ctx.send(e.index, Word{kColumnEntry, ctx.id(), e.index, e.value});
  });

  clique.step(p + "sending.counts", [&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    node.s_column.clear();
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kColumnEntry) node.s_column.push_back({m.word.first, m.word.value});
    normalize_row(node.s_column, n);
    // Silence means both counts are zero.
    if (!node.s_column.empty() || !node.t_row.empty())
      ctx.broadcast(Word{kLineCounts, static_cast<std::uint32_t>(node.s_column.size()),
                         static_cast<std::uint32_t>(node.t_row.size()), 0});
  });

  clique.step(p + "sending.redistribute", [&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    std::vector<std::uint64_t> s_counts(n, 0), t_counts(n, 0);
    s_counts[ctx.id()] = node.s_column.size();
    t_counts[ctx.id()] = node.t_row.size();
    for (const auto& m : ctx.inbox()) {
      if (m.word.tag != kLineCounts) continue;
      s_counts[m.src] = m.word.first;
      t_counts[m.src] = m.word.second;
    }
    node.directory = SubsequenceDirectory(s_counts, t_counts);

    for (const auto& ref : node.directory.s_parts(ctx.id()))
      for (std::uint32_t pos = ref.begin; pos < ref.end; ++pos) {
        const auto& e = node.s_column[pos];
        ctx.send(ref.owner, Word{kSubsequenceS, e.index, ctx.id(), e.value});
      }
    for (const auto& ref : node.directory.t_parts(ctx.id()))
      for (std::uint32_t pos = ref.begin; pos < ref.end; ++pos) {
        const auto& e = node.t_row[pos];
        ctx.send(ref.owner, Word{kSubsequenceT, ctx.id(), e.index, e.value});
      }
  });

  clique.local([&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    node.held_s = assign_received(node.directory.owned_s(ctx.id()), ctx.inbox(), kSubsequenceS, true);
    node.held_t = assign_received(node.directory.owned_t(ctx.id()), ctx.inbox(), kSubsequenceT, false);
  });
}

void resolve_routing(Clique& clique, NodeLocal<RoutingNode>& nodes, const FragmentFilter& filter,
                     std::string_view prefix) {
  const std::string p(prefix);
  const std::size_t n = clique.size();

  clique.step(p + "routing.requests", [&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    for (auto l : node.pages) {
      for (auto u : node.directory.s_owners(l)) ctx.send(u, Word{kRequestS, l, 0, 0});
      for (auto u : node.directory.t_owners(l)) ctx.send(u, Word{kRequestT, l, 0, 0});
    }
  });

  clique.step(p + "routing.responses", [&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    for (const auto& m : ctx.inbox()) {
      const bool is_s = m.word.tag == kRequestS;
      if (!is_s && m.word.tag != kRequestT) continue;
      const std::uint32_t l = m.word.first;
      const auto& held = is_s ? node.held_s : node.held_t;
      bool owns = false;
      for (const auto& h : held) {
        if (h.ref.origin != l) continue;
        owns = true;
        for (const auto& e : h.entries) {
          if (is_s) {
            if (filter.s_row(ctx, m.src, e.index)) ctx.send(m.src, Word{kFragmentS, e.index, l, e.value});
          } else {
            if (filter.t_col(ctx, m.src, e.index)) ctx.send(m.src, Word{kFragmentT, l, e.index, e.value});
          }
        }
      }
      if (!owns)
        throw SimulationError("node " + std::to_string(ctx.id()) + " holds no subsequence of line " +
                              std::to_string(l) + " requested by node " + std::to_string(m.src));
    }
  });

  clique.local([&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    node.s_fragments.clear();
    node.t_fragments.clear();
    for (auto l : node.pages) {
      node.s_fragments[l];
      node.t_fragments[l];
    }
    for (const auto& m : ctx.inbox()) {
      if (m.word.tag == kFragmentS)
        node.s_fragments[m.word.second].push_back({m.word.first, m.word.value});
      else if (m.word.tag == kFragmentT)
        node.t_fragments[m.word.first].push_back({m.word.second, m.word.value});
    }
    for (auto& [l, frag] : node.s_fragments) normalize_row(frag, n);
    for (auto& [l, frag] : node.t_fragments) normalize_row(frag, n);
  });
}

}  // namespace cclique::routing
