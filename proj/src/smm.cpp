#include "cclique/smm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cclique/errors.hpp"
#include "cclique/partition.hpp"

namespace cclique {
namespace {

enum Tag : std::uint16_t {
  kTEntry = 0x200,
  kStats,
  kSPrime,
  kTPrime,
  kTPrimeRow,
  kPageCountS,
  kPageCountT,
  kProduct,
  kResult,
};

void require_valid_split(std::size_t n, SplitPair p) {
  if (!is_valid_split(n, p))
    throw std::invalid_argument("(" + std::to_string(p.a) + "," + std::to_string(p.b) + ") is not a split pair for n = " +
                                std::to_string(n));
}

void require_compatible(const SparseMatrix& s, const SparseMatrix& t) {
  if (s.size() != t.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(s.size()) + " vs " + std::to_string(t.size()));
  if (!(s.semiring() == t.semiring())) throw std::invalid_argument("operands use different semirings");
}

SparseRow dense_to_row(const std::vector<Value>& acc, const Semiring& sr) {
  SparseRow row;
  for (std::size_t c = 0; c < acc.size(); ++c)
    if (!sr.is_omitted(acc[c])) row.push_back({static_cast<std::uint32_t>(c), acc[c]});
  return row;
}

// Runs the balanced multiplication on nodes whose s_row / t_row are already
// set. Returns row v of the product at node v.
NodeLocal<SparseRow> run_balanced(Clique& clique, NodeLocal<routing::RoutingNode>& nodes, const Semiring& sr,
                                  SplitPair split, SbmmAudit* audit) {
  const std::size_t n = clique.size();
  const std::size_t row_band = n / split.a;
  const std::size_t col_band = n / split.b;

  routing::compute_sending(clique, nodes, "sbmm.");

  clique.step("sbmm.receiving.counts", [&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    auto tell = [&](const std::vector<routing::HeldSubsequence>& held, std::size_t bands, std::size_t width,
                    bool rows, std::uint16_t tag) {
      for (const auto& h : held) {
        std::vector<std::uint64_t> per_band(bands, 0);
        for (const auto& e : h.entries) ++per_band[e.index / width];
        for (NodeId u = 0; u < n; ++u) {
          const auto who = alias(u, n, split);
          const auto c = per_band[rows ? who.i : who.j];
          if (c != 0) ctx.send(u, Word{tag, h.ref.origin, h.ref.part, static_cast<Value>(c)});
        }
      }
    };
    tell(node.held_s, split.a, row_band, true, kPageCountS);
    tell(node.held_t, split.b, col_band, false, kPageCountT);
  });

  NodeLocal<std::vector<std::uint64_t>> weights(n);
  clique.local([&](NodeContext& ctx) {
    auto& w = weights.at(ctx);
    w.assign(n, 0);
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kPageCountS || m.word.tag == kPageCountT) w[m.word.first] += static_cast<std::uint64_t>(m.word.value);
    nodes.at(ctx).pages = page_assignment(w, split)[alias(ctx.id(), n, split).k];
  });

  const routing::FragmentFilter filter{
      [&](const NodeContext&, NodeId requester, std::uint32_t row) {
        return row / row_band == alias(requester, n, split).i;
      },
      [&](const NodeContext&, NodeId requester, std::uint32_t col) {
        return col / col_band == alias(requester, n, split).j;
      }};
  routing::resolve_routing(clique, nodes, filter, "sbmm.");

  clique.step("sbmm.reduce", [&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    const auto me = alias(ctx.id(), n, split);
    const std::size_t r0 = me.i * row_band;
    const std::size_t c0 = me.j * col_band;
    std::vector<Value> block(row_band * col_band, sr.omitted);
    for (auto l : node.pages) {
      const auto& column = node.s_fragments.at(l);
      const auto& row = node.t_fragments.at(l);
      for (const auto& x : column) {
        if (x.index / row_band != me.i) throw SimulationError("fragment row outside the node's band");
        for (const auto& y : row) {
          if (y.index / col_band != me.j) throw SimulationError("fragment column outside the node's band");
          auto& cell = block[(x.index - r0) * col_band + (y.index - c0)];
          cell = sr.add(cell, sr.mul(x.value, y.value));
        }
      }
    }
    for (std::size_t r = 0; r < row_band; ++r)
      for (std::size_t c = 0; c < col_band; ++c) {
        const Value v = block[r * col_band + c];
        if (!sr.is_omitted(v))
          ctx.send(static_cast<NodeId>(r0 + r),
                   Word{kProduct, static_cast<std::uint32_t>(r0 + r), static_cast<std::uint32_t>(c0 + c), v});
      }
  });

  NodeLocal<SparseRow> product(n);
  clique.local([&](NodeContext& ctx) {
    std::vector<Value> acc(n, sr.omitted);
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kProduct) acc[m.word.second] = sr.add(acc[m.word.second], m.word.value);
    product.at(ctx) = dense_to_row(acc, sr);
  });

  if (audit) {
    const auto& all = nodes.results();
    audit->directory = all.empty() ? routing::SubsequenceDirectory{} : all.front().directory;
    audit->pages.assign(n, {});
    audit->held_s.assign(n, {});
    audit->held_t.assign(n, {});
    audit->page_weights = weights.results();
    for (std::size_t v = 0; v < n; ++v) {
      if (!(all[v].directory == audit->directory)) throw SimulationError("nodes disagree on subsequence ownership");
      audit->pages[v] = all[v].pages;
      audit->held_s[v] = all[v].held_s;
      audit->held_t[v] = all[v].held_t;
    }
  }
  return product;
}

}  // namespace

bool is_valid_split(std::size_t n, SplitPair p) {
  if (n == 0 || p.a == 0 || p.b == 0) return false;
  const std::size_t ab = static_cast<std::size_t>(p.a) * p.b;
  return n % p.a == 0 && n % p.b == 0 && n % ab == 0;
}

std::vector<SplitPair> split_pairs(std::size_t n) {
  std::vector<SplitPair> out;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      const SplitPair p{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
      if (is_valid_split(n, p)) out.push_back(p);
    }
  return out;
}

Rational split_cost(std::uint64_t nz_s, std::uint64_t nz_t, std::size_t n, SplitPair p) {
  const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
  return Rational(nz_s * p.b, n2) + Rational(nz_t * p.a, n2) + Rational(n, static_cast<std::uint64_t>(p.a) * p.b);
}

SplitPair choose_split(std::uint64_t nz_s, std::uint64_t nz_t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("choose_split needs n >= 1");
  SplitPair best{1, 1};
  Rational best_cost = split_cost(nz_s, nz_t, n, best);
  for (const auto& p : split_pairs(n)) {
    const Rational c = split_cost(nz_s, nz_t, n, p);
    if (c < best_cost) {
      best = p;
      best_cost = c;
    }
  }
  return best;
}

NodeTriple alias(NodeId v, std::size_t n, SplitPair p) {
  const std::size_t q = n / (static_cast<std::size_t>(p.a) * p.b);
  return {static_cast<std::uint32_t>(v / (p.b * q)), static_cast<std::uint32_t>((v / q) % p.b),
          static_cast<std::uint32_t>(v % q)};
}

NodeId alias_node(NodeTriple t, std::size_t n, SplitPair p) {
  const std::size_t q = n / (static_cast<std::size_t>(p.a) * p.b);
  return static_cast<NodeId>((static_cast<std::size_t>(t.i) * p.b + t.j) * q + t.k);
}

Permutation band_permutation(std::span<const std::uint64_t> counts, std::size_t bands, std::uint64_t x) {
  const auto ip = weight_balanced_partition_indexed(counts, bands, x);
  const std::size_t width = counts.size() / bands;
  std::vector<std::uint32_t> forward(counts.size());
  for (std::size_t p = 0; p < ip.spec.parts.size(); ++p)
    for (std::size_t pos = 0; pos < ip.spec.parts[p].size(); ++pos)
      forward[ip.spec.parts[p][pos]] = static_cast<std::uint32_t>(p * width + pos);
  return Permutation::from_forward(std::move(forward));
}

BalancedPair balance_inputs(const SparseMatrix& s, const SparseMatrix& t, SplitPair split) {
  require_compatible(s, t);
  const std::size_t n = s.size();
  require_valid_split(n, split);
  BalancedPair out;
  out.split = split;
  out.sigma = band_permutation(s.row_counts(), split.a, n);
  out.tau = band_permutation(t.column_counts(), split.b, n);
  out.s = permute_rows(s, out.sigma);
  out.t = permute_cols(t, out.tau);
  return out;
}

bool is_sparsity_balanced(const SparseMatrix& s, const SparseMatrix& t, SplitPair split) {
  const std::size_t n = s.size();
  if (t.size() != n || !is_valid_split(n, split)) return false;
  const std::uint64_t a = split.a, b = split.b;
  const std::size_t rb = n / a, cb = n / b;
  for (std::size_t i = 0; i < a; ++i)
    if (s.nz_row_band(i * rb, (i + 1) * rb) * a > s.nz() + a * n) return false;
  for (std::size_t j = 0; j < b; ++j)
    if (t.nz_col_band(j * cb, (j + 1) * cb) * b > t.nz() + b * n) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> page_assignment(std::span<const std::uint64_t> weights, SplitPair split) {
  const std::size_t n = weights.size();
  require_valid_split(n, split);
  const std::size_t q = n / (static_cast<std::size_t>(split.a) * split.b);
  const auto ip = weight_balanced_partition_indexed(weights, q, 2 * static_cast<std::uint64_t>(n));
  std::vector<std::vector<std::uint32_t>> out(q);
  for (std::size_t k = 0; k < q; ++k) {
    for (auto l : ip.spec.parts[k]) out[k].push_back(static_cast<std::uint32_t>(l));
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

SbmmResult sbmm(const SparseMatrix& s, const SparseMatrix& t, SplitPair split, EngineOptions options) {
  require_compatible(s, t);
  const std::size_t n = s.size();
  require_valid_split(n, split);
  if (!is_sparsity_balanced(s, t, split)) throw std::invalid_argument("inputs are not a sparsity-balanced pair");
  Clique clique(n, options);
  NodeLocal<routing::RoutingNode> nodes(n);
  for (std::size_t v = 0; v < n; ++v) {
    nodes.setup()[v].s_row = s.rows()[v];
    nodes.setup()[v].t_row = t.rows()[v];
  }
  SbmmResult out;
  auto rows = run_balanced(clique, nodes, s.semiring(), split, &out.audit);
  out.product = SparseMatrix::from_rows(n, s.semiring(), std::move(rows.setup()));
  out.ledger = clique.ledger();
  return out;
}

SmmResult run_smm(Clique& clique, const SparseMatrix& s, const SparseMatrix& t, std::optional<SplitPair> forced) {
  require_compatible(s, t);
  const std::size_t n = clique.size();
  if (s.size() != n) throw std::invalid_argument("matrix size differs from the clique size");
  if (forced) require_valid_split(n, *forced);
  const Semiring sr = s.semiring();
  const std::size_t ledger_start = clique.ledger().entries().size();

  struct SmmNode {
    SparseRow s_row, t_row, t_column;
    SplitPair split;
    Permutation sigma, tau;
    SparseRow s_prime_row, t_prime_column;
  };
  NodeLocal<SmmNode> state(n);
  for (std::size_t v = 0; v < n; ++v) {
    state.setup()[v].s_row = s.rows()[v];
    state.setup()[v].t_row = t.rows()[v];
  }
  NodeLocal<routing::RoutingNode> nodes(n);

  clique.step("smm.distribute", [&](NodeContext& ctx) {
    for (const auto& e : state.at(ctx).t_row) ctx.send(e.index, Word{kTEntry, ctx.id(), e.index, e.value});
  });

  clique.step("smm.stats", [&](NodeContext& ctx) {
    auto& me = state.at(ctx);
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kTEntry) me.t_column.push_back({m.word.first, m.word.value});
    normalize_row(me.t_column, n);
    ctx.broadcast(Word{kStats, static_cast<std::uint32_t>(me.s_row.size()),
                       static_cast<std::uint32_t>(me.t_column.size()), 0});
  });

  clique.step("smm.balance.permute", [&](NodeContext& ctx) {
    auto& me = state.at(ctx);
    std::vector<std::uint64_t> row_counts(n, 0), col_counts(n, 0);
    row_counts[ctx.id()] = me.s_row.size();
    col_counts[ctx.id()] = me.t_column.size();
    for (const auto& m : ctx.inbox()) {
      if (m.word.tag != kStats) continue;
      row_counts[m.src] = m.word.first;
      col_counts[m.src] = m.word.second;
    }
    std::uint64_t nz_s = 0, nz_t = 0;
    for (std::size_t v = 0; v < n; ++v) {
      nz_s += row_counts[v];
      nz_t += col_counts[v];
    }
    me.split = forced ? *forced : choose_split(nz_s, nz_t, n);
    me.sigma = band_permutation(row_counts, me.split.a, n);
    me.tau = band_permutation(col_counts, me.split.b, n);
    const NodeId row_to = me.sigma(ctx.id());
    const NodeId col_to = me.tau(ctx.id());
    for (const auto& e : me.s_row) ctx.send(row_to, Word{kSPrime, row_to, e.index, e.value});
    for (const auto& e : me.t_column) ctx.send(col_to, Word{kTPrime, e.index, col_to, e.value});
  });

  clique.step("smm.balance.transpose", [&](NodeContext& ctx) {
    auto& me = state.at(ctx);
    for (const auto& m : ctx.inbox()) {
      if (m.word.tag == kSPrime) me.s_prime_row.push_back({m.word.second, m.word.value});
      if (m.word.tag == kTPrime) me.t_prime_column.push_back({m.word.first, m.word.value});
    }
    normalize_row(me.s_prime_row, n);
    normalize_row(me.t_prime_column, n);
    for (const auto& e : me.t_prime_column) ctx.send(e.index, Word{kTPrimeRow, e.index, ctx.id(), e.value});
  });

  clique.local([&](NodeContext& ctx) {
    auto& node = nodes.at(ctx);
    node.s_row = state.at(ctx).s_prime_row;
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kTPrimeRow) node.t_row.push_back({m.word.second, m.word.value});
    normalize_row(node.t_row, n);
  });

  SmmResult out;
  const auto& first = state.results().front();
  out.split = first.split;
  out.sigma = first.sigma;
  out.tau = first.tau;
  for (const auto& node : state.results())
    if (!(node.split == out.split) || !(node.sigma == out.sigma) || !(node.tau == out.tau))
      throw SimulationError("nodes disagree on the split or the balancing permutations");

  auto product_prime = run_balanced(clique, nodes, sr, out.split, &out.audit);

  clique.step("smm.unpermute", [&](NodeContext& ctx) {
    const auto& me = state.at(ctx);
    const NodeId to = me.sigma.inverse_of(ctx.id());
    for (const auto& e : product_prime.at(ctx)) ctx.send(to, Word{kResult, to, me.tau.inverse_of(e.index), e.value});
  });

  NodeLocal<SparseRow> rows(n);
  clique.local([&](NodeContext& ctx) {
    auto& row = rows.at(ctx);
    for (const auto& m : ctx.inbox())
      if (m.word.tag == kResult) row.push_back({m.word.second, m.word.value});
    normalize_row(row, n);
  });

  out.product = SparseMatrix::from_rows(n, sr, std::move(rows.setup()));
  const auto& entries = clique.ledger().entries();
  for (std::size_t e = ledger_start; e < entries.size(); ++e) out.ledger.record(entries[e]);
  return out;
}

SmmResult smm(const SparseMatrix& s, const SparseMatrix& t, SmmOptions options) {
  require_compatible(s, t);
  if (s.size() == 0) throw std::invalid_argument("empty matrices");
  Clique clique(s.size(), options.engine);
  return run_smm(clique, s, t, options.split);
}

std::size_t padded_size(std::size_t n, PadMode mode) {
  switch (mode) {
    case PadMode::none:
      return n;
    case PadMode::pow2: {
      std::size_t p = 1;
      while (p < n) p *= 2;
      return p;
    }
    case PadMode::cube: {
      std::size_t c = 1;
      while (c * c * c < n) ++c;
      return c * c * c;
    }
  }
  return n;
}

SparseMatrix pad_matrix(const SparseMatrix& m, std::size_t n) {
  if (n < m.size()) throw std::invalid_argument("padding cannot shrink a matrix");
  std::vector<SparseRow> rows = m.rows();
  rows.resize(n);
  return SparseMatrix::from_rows(n, m.semiring(), std::move(rows));
}

SparseMatrix crop_matrix(const SparseMatrix& m, std::size_t n) {
  if (n > m.size()) throw std::invalid_argument("crop size exceeds the matrix");
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : m.row(i))
      if (e.index < n) rows[i].push_back(e);
  return SparseMatrix::from_rows(n, m.semiring(), std::move(rows));
}

}  // namespace cclique
