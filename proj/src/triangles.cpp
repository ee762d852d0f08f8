#include "cclique/triangles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cclique/errors.hpp"
#include "cclique/partition.hpp"
#include "cclique/routing.hpp"

namespace cclique {
namespace {

enum Tag : std::uint16_t {
  kDegrees = 0x400,
  kBandCount,
  kSetCount,
  kPacket,
  kEdge,
  kPathWeight,
};

struct TriNode {
  std::vector<std::uint64_t> d_in, d_out;
  std::uint64_t m = 0;
  std::vector<std::vector<NodeId>> v_parts;
  std::vector<std::uint32_t> v_index;
  std::vector<std::uint32_t> v_pos;
  std::vector<std::vector<NSet>> band_sets;  // own band, [j]
  std::vector<std::int64_t> my_set;          // [j] -> l, or -1
  std::vector<std::uint32_t> set_offset;     // [i * c + j] -> first set index; size c^2 + 1
  std::vector<NSet> keys;                    // all sets, members unknown outside the band
  std::size_t first_half = 0;
  std::array<std::vector<GroupTask>, 2> tasks;
  std::vector<Edge> e1;
  std::vector<Triangle> found;
};

std::vector<std::vector<NodeId>> sorted_parts(const PartitionSpec& spec) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& part : spec.parts) {
    std::vector<NodeId> p(part.begin(), part.end());
    std::sort(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  return out;
}

// Contiguous runs of the band (internal order) with edge sum at most beta.
std::vector<NSet> greedy_sets(std::uint32_t i, std::uint32_t j, const std::vector<NodeId>& band,
                              const std::vector<std::uint64_t>& weight, Rational beta) {
  std::vector<NSet> sets;
  if (std::accumulate(weight.begin(), weight.end(), std::uint64_t{0}) == 0) return sets;
  NSet cur{i, j, 0, {}, 0};
  for (std::size_t p = 0; p < band.size(); ++p) {
    if (!cur.members.empty() && Rational(cur.edges + weight[p]) > beta) {
      sets.push_back(cur);
      cur = NSet{i, j, static_cast<std::uint32_t>(sets.size()), {}, 0};
    }
    cur.members.push_back(band[p]);
    cur.edges += weight[p];
  }
  sets.push_back(cur);
  return sets;
}

std::pair<std::size_t, std::size_t> half_range(std::size_t total, std::size_t first_half, int t) {
  return t == 0 ? std::pair{std::size_t{0}, first_half} : std::pair{first_half, total - first_half};
}

}  // namespace

bool is_perfect_cube(std::size_t n) {
  const std::size_t c = cube_root(n);
  return c * c * c == n;
}

std::size_t cube_root(std::size_t n) {
  std::size_t c = 0;
  while ((c + 1) * (c + 1) * (c + 1) <= n) ++c;
  return c;
}

std::vector<NodeId> packet_owners(std::span<const std::uint64_t> d_out, NodeId v) {
  const std::size_t n = d_out.size();
  const std::uint64_t m = std::accumulate(d_out.begin(), d_out.end(), std::uint64_t{0});
  std::vector<NodeId> owners;
  if (m == 0) return owners;
  const std::size_t block = avg_block_size(m, n);
  std::size_t q0 = 0;
  for (NodeId u = 0; u < v; ++u) q0 += avg_part_count(d_out[u], m, n);
  owners.reserve(d_out[v]);
  for (std::size_t p = 0; p < d_out[v]; ++p) owners.push_back(static_cast<NodeId>((q0 + p / block) % n));
  return owners;
}

TriangleResult list_triangles(const Graph& input, TriangleOptions options) {
  Graph g = input;
  if (!is_perfect_cube(g.size())) {
    if (!options.pad_to_cube)
      throw std::invalid_argument("triangle listing needs a cube node count, got " + std::to_string(g.size()));
    const std::size_t c = cube_root(g.size()) + 1;
    g = g.padded(c * c * c);
  }
  const std::size_t n = g.size();
  TriangleResult result;
  result.simulated_nodes = n;
  if (n == 0) return result;
  const std::size_t c = cube_root(n);
  const std::size_t c2 = c * c;
  Clique clique(n, options.engine);
  NodeLocal<TriNode> nodes(n);
  Rational beta;

  clique.step("tri.degrees", [&](NodeContext& ctx) {
    ctx.broadcast(Word{kDegrees, static_cast<std::uint32_t>(g.d_in(ctx.id())), static_cast<std::uint32_t>(g.d_out(ctx.id())), 0});
  });

  clique.step("tri.band_counts", [&](NodeContext& ctx) {
    auto& me = nodes.at(ctx);
    me.d_in.assign(n, 0);
    me.d_out.assign(n, 0);
    me.d_in[ctx.id()] = g.d_in(ctx.id());
    me.d_out[ctx.id()] = g.d_out(ctx.id());
    for (const auto& msg : ctx.inbox())
      if (msg.word.tag == kDegrees) {
        me.d_in[msg.src] = msg.word.first;
        me.d_out[msg.src] = msg.word.second;
      }
    me.m = std::accumulate(me.d_out.begin(), me.d_out.end(), std::uint64_t{0});
    std::vector<std::uint64_t> degree(n);
    for (std::size_t u = 0; u < n; ++u) degree[u] = me.d_in[u] + me.d_out[u];
    me.v_parts = sorted_parts(weight_balanced_partition_indexed(degree, c, 2 * n).spec);
    me.v_index.assign(n, 0);
    me.v_pos.assign(n, 0);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t p = 0; p < me.v_parts[i].size(); ++p) {
        me.v_index[me.v_parts[i][p]] = static_cast<std::uint32_t>(i);
        me.v_pos[me.v_parts[i][p]] = static_cast<std::uint32_t>(p);
      }
    std::vector<std::uint64_t> to_band(c, 0);
    for (auto u : g.out(ctx.id())) ++to_band[me.v_index[u]];
    for (auto x : me.v_parts[me.v_index[ctx.id()]])
      for (std::uint32_t j = 0; j < c; ++j) ctx.send(x, Word{kBandCount, j, 0, static_cast<Value>(to_band[j])});
  });

  {
    const auto& first = nodes.results().front();
    beta = Rational(first.m, c2) + Rational(n);
  }

  clique.step("tri.nset_counts", [&](NodeContext& ctx) {
    auto& me = nodes.at(ctx);
    const std::uint32_t band = me.v_index[ctx.id()];
    const auto& members = me.v_parts[band];
    std::vector<std::vector<std::uint64_t>> weight(c, std::vector<std::uint64_t>(members.size(), 0));
    for (const auto& msg : ctx.inbox())
      if (msg.word.tag == kBandCount) weight[msg.word.first][me.v_pos[msg.src]] = static_cast<std::uint64_t>(msg.word.value);
    me.band_sets.assign(c, {});
    me.my_set.assign(c, -1);
    for (std::uint32_t j = 0; j < c; ++j) {
      me.band_sets[j] = greedy_sets(band, j, members, weight[j], beta);
      for (const auto& s : me.band_sets[j])
        if (std::binary_search(s.members.begin(), s.members.end(), ctx.id())) me.my_set[j] = s.l;
    }
    const std::uint32_t pos = me.v_pos[ctx.id()];
    for (std::uint32_t i = 0; i < c; ++i)
      for (std::uint32_t j = 0; j < c; ++j)
        ctx.send(me.v_parts[i][pos], Word{kSetCount, band, j, static_cast<Value>(me.band_sets[j].size())});
  });

  clique.local([&](NodeContext& ctx) {
    auto& me = nodes.at(ctx);
    std::vector<std::uint32_t> count(c2, 0);
    for (const auto& msg : ctx.inbox())
      if (msg.word.tag == kSetCount) count[msg.word.first * c + msg.word.second] = static_cast<std::uint32_t>(msg.word.value);
    me.set_offset.assign(c2 + 1, 0);
    me.keys.clear();
    for (std::size_t ij = 0; ij < c2; ++ij) {
      me.set_offset[ij] = static_cast<std::uint32_t>(me.keys.size());
      for (std::uint32_t l = 0; l < count[ij]; ++l)
        me.keys.push_back(NSet{static_cast<std::uint32_t>(ij / c), static_cast<std::uint32_t>(ij % c), l, {}, 0});
    }
    me.set_offset[c2] = static_cast<std::uint32_t>(me.keys.size());
    const std::size_t total = me.keys.size();
    if (total > 2 * c2)
      throw SimulationError("N-set count " + std::to_string(total) + " exceeds 2 n^(2/3) = " + std::to_string(2 * c2));
    me.first_half = (total + 1) / 2;
    for (int t = 0; t < 2; ++t) {
      const auto [base, len] = half_range(total, me.first_half, t);
      me.tasks[t].assign(c2, GroupTask{});
      for (std::size_t k = 0; k < len; ++k) {
        auto& task = me.tasks[t][k];
        task.active = true;
        task.set = static_cast<std::uint32_t>(base + k);
        task.i = me.keys[base + k].i;
        task.j = me.keys[base + k].j;
      }
    }
  });

  for (int t = 0; t < 2; ++t) {
    const std::string half = "tri.h" + std::to_string(t + 1) + ".";

    clique.step(half + "learn_edges.packets", [&](NodeContext& ctx) {
      auto& me = nodes.at(ctx);
      const auto [base, len] = half_range(me.keys.size(), me.first_half, t);
      const auto owners = packet_owners(me.d_out, ctx.id());
      const std::uint32_t band = me.v_index[ctx.id()];
      const auto out = g.out(ctx.id());
      for (std::size_t p = 0; p < out.size(); ++p) {
        const std::uint32_t j = me.v_index[out[p]];
        if (me.my_set[j] < 0) throw SimulationError("out-edge into a band with no N-set");
        const std::size_t set = me.set_offset[band * c + j] + static_cast<std::size_t>(me.my_set[j]);
        if (set < base || set >= base + len) continue;
        ctx.send(owners[p], Word{kPacket, ctx.id(), out[p], static_cast<Value>(set - base)});
      }
    });

    clique.step(half + "learn_edges.forward", [&](NodeContext& ctx) {
      for (const auto& msg : ctx.inbox()) {
        if (msg.word.tag != kPacket) continue;
        const auto k = static_cast<std::size_t>(msg.word.value);
        for (std::size_t d = 0; d < c; ++d)
          ctx.send(static_cast<NodeId>(k * c + d), Word{kEdge, msg.word.first, msg.word.second, 0});
      }
    });

    clique.step(half + "path_counts", [&](NodeContext& ctx) {
      auto& me = nodes.at(ctx);
      me.e1.clear();
      for (const auto& msg : ctx.inbox())
        if (msg.word.tag == kEdge) me.e1.emplace_back(msg.word.first, msg.word.second);
      std::sort(me.e1.begin(), me.e1.end());
      std::vector<std::uint64_t> from_band(c, 0), to_band(c, 0);
      for (auto u : g.in(ctx.id())) ++from_band[me.v_index[u]];
      for (auto u : g.out(ctx.id())) ++to_band[me.v_index[u]];
      for (std::size_t k = 0; k < c2; ++k) {
        const auto& task = me.tasks[t][k];
        if (!task.active) continue;
        const Value w = static_cast<Value>(from_band[task.j] + to_band[task.i]);
        for (std::size_t d = 0; d < c; ++d)
          ctx.send(static_cast<NodeId>(k * c + d), Word{kPathWeight, static_cast<std::uint32_t>(k), 0, w});
      }
    });

    NodeLocal<routing::RoutingNode> paths(n);
    for (NodeId v = 0; v < n; ++v)
      for (auto u : g.out(v)) {
        paths.setup()[v].s_row.push_back({u, 1});
        paths.setup()[v].t_row.push_back({u, 1});
      }

    clique.local([&](NodeContext& ctx) {
      auto& me = nodes.at(ctx);
      auto& task = me.tasks[t][ctx.id() / c];
      if (!task.active) return;
      std::vector<std::uint64_t> w(n, 0);
      for (const auto& msg : ctx.inbox())
        if (msg.word.tag == kPathWeight) w[msg.src] = static_cast<std::uint64_t>(msg.word.value);
      task.p_parts = sorted_parts(weight_balanced_partition_indexed(w, c, 2 * c2).spec);
      task.p_weights.assign(c, 0);
      for (std::size_t d = 0; d < c; ++d)
        for (auto u : task.p_parts[d]) task.p_weights[d] += w[u];
      auto& pages = paths.at(ctx).pages;
      for (auto u : task.p_parts[ctx.id() % c]) pages.push_back(u);
    });

    routing::compute_sending(clique, paths, half + "learn_paths.");
    const routing::FragmentFilter filter{
        [&](const NodeContext& responder, NodeId requester, std::uint32_t row) {
          const auto& me = nodes.at(responder);
          const auto& task = me.tasks[t][requester / c];
          return task.active && me.v_index[row] == task.j;
        },
        [&](const NodeContext& responder, NodeId requester, std::uint32_t col) {
          const auto& me = nodes.at(responder);
          const auto& task = me.tasks[t][requester / c];
          return task.active && me.v_index[col] == task.i;
        }};
    routing::resolve_routing(clique, paths, filter, half + "learn_paths.");

    clique.local([&](NodeContext& ctx) {
      auto& me = nodes.at(ctx);
      const auto& node = paths.at(ctx);
      for (auto v3 : node.pages) {
        const auto& into = node.s_fragments.at(v3);  // (v2, v3) with v2 in V_j
        const auto& back = node.t_fragments.at(v3);  // (v3, v1) with v1 in V_i
        auto has = [](const SparseRow& row, NodeId x) {
          return std::binary_search(row.begin(), row.end(), Entry{x, 0},
                                    [](const Entry& p, const Entry& q) { return p.index < q.index; });
        };
        for (const auto& [v1, v2] : me.e1)
          if (has(into, v2) && has(back, v1)) me.found.push_back(Triangle{v1, v2, v3}.canonical());
      }
    });
  }

  // Gather what the nodes agreed on and check they agree.
  const auto& all = nodes.results();
  const auto& lead = all.front();
  auto& state = result.state;
  state.c = c;
  state.m = lead.m;
  state.alpha = Rational(lead.m, c) + Rational(n);
  state.beta = beta;
  state.v_parts = lead.v_parts;
  state.v_index = lead.v_index;
  state.first_half = lead.first_half;
  for (std::uint32_t i = 0; i < c; ++i) {
    const auto& holder = all[lead.v_parts[i].front()];
    for (std::uint32_t j = 0; j < c; ++j)
      for (const auto& s : holder.band_sets[j]) state.n_sets.push_back(s);
  }
  for (const auto& node : all) {
    if (node.v_parts != lead.v_parts || node.first_half != lead.first_half || node.keys.size() != lead.keys.size())
      throw SimulationError("nodes disagree on the V-partition or the N-set halves");
    const auto& holder = all[lead.v_parts[node.v_index[&node - all.data()]].front()];
    if (node.band_sets != holder.band_sets) throw SimulationError("band members disagree on their N-sets");
  }
  if (state.n_sets.size() != lead.keys.size()) throw SimulationError("N-set counts do not match the sets built");
  for (int t = 0; t < 2; ++t) {
    state.tasks[t].assign(c2, GroupTask{});
    for (std::size_t k = 0; k < c2; ++k) {
      const auto& task = all[k * c].tasks[t][k];
      for (std::size_t d = 1; d < c; ++d)
        if (!(all[k * c + d].tasks[t][k] == task)) throw SimulationError("group members disagree on their P-partition");
      state.tasks[t][k] = task;
    }
  }

  result.per_node.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto found = all[v].found;
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    result.triangles.insert(result.triangles.end(), found.begin(), found.end());
    result.per_node[v] = std::move(found);
  }
  std::sort(result.triangles.begin(), result.triangles.end());
  result.triangles.erase(std::unique(result.triangles.begin(), result.triangles.end()), result.triangles.end());
  result.ledger = clique.ledger();
  return result;
}

std::vector<std::string> check_partition_invariants(const Graph& g, const TriplePartitionState& s) {
  std::vector<std::string> bad;
  const std::size_t n = g.size();
  const std::size_t c = s.c;
  const std::size_t c2 = c * c;
  if (c * c2 != n) return {"node count is not c^3"};
  const std::uint64_t m = g.edge_count();
  if (s.m != m) bad.push_back("recorded m differs from the graph");
  if (s.alpha != Rational(m, c) + Rational(n)) bad.push_back("alpha mismatch");
  if (s.beta != Rational(m, c2) + Rational(n)) bad.push_back("beta mismatch");

  auto band_edges = [&](const std::vector<NodeId>& from, std::size_t band) {
    std::uint64_t e = 0;
    for (auto u : from)
      for (auto w : g.out(u)) e += s.v_index[w] == band;
    return e;
  };

  std::vector<int> seen(n, 0);
  if (s.v_parts.size() != c) bad.push_back("V-partition does not have c parts");
  for (std::size_t i = 0; i < s.v_parts.size(); ++i) {
    if (s.v_parts[i].size() != c2) bad.push_back("V_" + std::to_string(i) + " does not have c^2 nodes");
    std::uint64_t degree = 0;
    for (auto u : s.v_parts[i]) {
      ++seen[u];
      degree += g.d_in(u) + g.d_out(u);
      if (s.v_index[u] != i) bad.push_back("v_index disagrees with V_" + std::to_string(i));
    }
    if (Rational(degree) > Rational(2) * s.alpha)
      bad.push_back("V_" + std::to_string(i) + " degree sum " + std::to_string(degree) + " exceeds 2 alpha");
  }
  if (std::any_of(seen.begin(), seen.end(), [](int x) { return x != 1; })) bad.push_back("V-partition is not a partition");

  if (s.n_sets.size() > 2 * c2) bad.push_back("more than 2 n^(2/3) N-sets");
  for (std::size_t x = 0; x < s.n_sets.size(); ++x) {
    const auto& set = s.n_sets[x];
    if (x > 0) {
      const auto& prev = s.n_sets[x - 1];
      if (std::tie(prev.i, prev.j, prev.l) >= std::tie(set.i, set.j, set.l)) bad.push_back("N-sets out of order");
    }
    const std::uint64_t e = band_edges(set.members, set.j);
    if (e != set.edges) bad.push_back("N-set edge count is stale");
    if (Rational(e) > s.beta) bad.push_back("N-set edges " + std::to_string(e) + " exceed beta");
    for (auto u : set.members)
      if (s.v_index[u] != set.i) bad.push_back("N-set member outside its V_i");
  }
  for (std::uint32_t i = 0; i < c && i < s.v_parts.size(); ++i)
    for (std::uint32_t j = 0; j < c; ++j) {
      std::vector<NodeId> covered;
      for (const auto& set : s.n_sets)
        if (set.i == i && set.j == j) covered.insert(covered.end(), set.members.begin(), set.members.end());
      std::sort(covered.begin(), covered.end());
      const bool has_edges = band_edges(s.v_parts[i], j) > 0;
      if (has_edges && covered != s.v_parts[i]) bad.push_back("N-sets do not partition V_i");
      if (!has_edges && !covered.empty()) bad.push_back("N-sets for an edgeless band pair");
    }

  const Rational four_beta = Rational(4) * s.beta;
  for (int t = 0; t < 2; ++t) {
    const auto [base, len] = half_range(s.n_sets.size(), s.first_half, t);
    if (len > c2) bad.push_back("half does not fit one set per group");
    for (std::size_t k = 0; k < s.tasks[t].size(); ++k) {
      const auto& task = s.tasks[t][k];
      if (task.active != (k < len)) bad.push_back("group activity does not match the half size");
      if (!task.active) continue;
      if (task.set != base + k) bad.push_back("set assignment out of order");
      std::vector<int> cover(n, 0);
      if (task.p_parts.size() != c) bad.push_back("P-partition does not have c parts");
      for (std::size_t d = 0; d < task.p_parts.size(); ++d) {
        std::uint64_t w = 0;
        for (auto u : task.p_parts[d]) {
          ++cover[u];
          for (auto x : g.in(u)) w += s.v_index[x] == task.j;
          for (auto x : g.out(u)) w += s.v_index[x] == task.i;
        }
        if (task.p_parts[d].size() != c2) bad.push_back("P part of wrong size");
        if (Rational(w) > four_beta) bad.push_back("P part weight " + std::to_string(w) + " exceeds 4 beta");
      }
      if (std::any_of(cover.begin(), cover.end(), [](int x) { return x != 1; })) bad.push_back("P-partition is not a partition");
    }
  }
  return bad;
}

}  // namespace cclique
