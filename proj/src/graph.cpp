#include "framecover/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

#include "framecover/errors.hpp"

namespace framecover {

namespace {

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const std::string_view item = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw ParameterError("bad integer '" + std::string(item) + "' in graph descriptor");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<int> mask_ids(std::uint64_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void require_word_sized(const LabeledGraph& g, const SearchBudget& budget, const char* what) {
  const int limit = std::min(64, budget.max_vertices);
  if (g.vertex_count() > limit)
    throw BudgetError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                      " vertices, budget allows " + std::to_string(limit));
}

}  // namespace

FamilyTag FamilyTag::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParameterError("graph descriptor needs 'family:params'");
  const std::string_view name = text.substr(0, colon);
  const std::vector<int> p = parse_ints(text.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw ParameterError("graph family '" + std::string(name) + "' takes " + std::to_string(k) + " parameters");
  };
  if (name == "kneser") {
    need(2);
    return kneser(p[0], p[1]);
  }
  if (name == "inter") {
    need(3);
    return intersection(p[0], p[1], p[2]);
  }
  if (name == "kn") {
    need(1);
    return complete(p[0]);
  }
  if (name == "kmm") {
    need(1);
    return kmm(p[0]);
  }
  throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Family::kneser:
      return "kneser:" + std::to_string(t) + "," + std::to_string(r);
    case Family::intersection:
      return "inter:" + std::to_string(t) + "," + std::to_string(r) + "," + std::to_string(w);
    case Family::complete:
      return "kn:" + std::to_string(n);
    case Family::kmm:
      return "kmm:" + std::to_string(n);
    case Family::custom:
      return "custom:" + std::to_string(n);
  }
  return "custom";
}

LabeledGraph::LabeledGraph(FamilyTag family, std::vector<VertexLabel> labels, std::vector<Edge> edges)
    : family_(family), labels_(std::move(labels)) {
  const int n = vertex_count();
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a missing vertex");
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n, BitVec(n));
  edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < edge_count(); ++i) {
    auto [u, v] = edges_[i];
    adj_[u].set(v);
    adj_[v].set(u);
    edge_index_[static_cast<std::size_t>(u) * n + v] = i;
    edge_index_[static_cast<std::size_t>(v) * n + u] = i;
  }
  degenerate_ = family_.kind == Family::kneser && family_.t < 2 * family_.r;
}

int LabeledGraph::edge_id(int u, int v) const {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) return -1;
  return edge_index_[static_cast<std::size_t>(u) * n + v];
}

std::optional<int> LabeledGraph::vertex_of(const SubsetMask& s, int side) const {
  switch (family_.kind) {
    case Family::kneser:
      if (side != 0 || s.ground_size() != family_.t || s.size() != family_.r) return std::nullopt;
      return static_cast<int>(colex_rank(s));
    case Family::intersection: {
      if (s.ground_size() != family_.t) return std::nullopt;
      if (side == 0 && s.size() == family_.w) return static_cast<int>(colex_rank(s));
      if (side == 1 && s.size() == family_.r)
        return static_cast<int>(binomial(family_.t, family_.w) + colex_rank(s));
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

LabeledGraph kneser_graph(int t, int r) {
  if (t < 1 || r < 1 || r > t || t > kMaxGround)
    throw ParameterError("kneser graph needs 1 <= r <= t <= 63");
  const auto subsets = enumerate_ksubsets(t, r);
  std::vector<VertexLabel> labels;
  labels.reserve(subsets.size());
  for (int i = 0; i < static_cast<int>(subsets.size()); ++i) labels.push_back({subsets[i], 0, i});
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(subsets.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(subsets.size()); ++j)
      if (!subsets[i].intersects(subsets[j])) edges.emplace_back(i, j);
  return {FamilyTag::kneser(t, r), std::move(labels), std::move(edges)};
}

LabeledGraph intersection_bigraph(int t, int r, int w) {
  if (r < 1 || w < 1 || t > kMaxGround || r + w > t)
    throw ParameterError("intersection graph needs r, w >= 1 and r + w <= t <= 63");
  const auto wside = enumerate_ksubsets(t, w);
  const auto rside = enumerate_ksubsets(t, r);
  const int nw = static_cast<int>(wside.size());
  std::vector<VertexLabel> labels;
  for (int i = 0; i < nw; ++i) labels.push_back({wside[i], 0, i});
  for (int i = 0; i < static_cast<int>(rside.size()); ++i) labels.push_back({rside[i], 1, nw + i});
  std::vector<Edge> edges;
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < static_cast<int>(rside.size()); ++j)
      if (!wside[i].intersects(rside[j])) edges.emplace_back(i, nw + j);
  return {FamilyTag::intersection(t, r, w), std::move(labels), std::move(edges)};
}

LabeledGraph complete_graph(int n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  std::vector<VertexLabel> labels(n);
  for (int i = 0; i < n; ++i) labels[i].index = i;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return {FamilyTag::complete(n), std::move(labels), std::move(edges)};
}

LabeledGraph complete_bipartite_minus_matching(int m) {
  if (m < 2) throw ParameterError("K-_{m,m} needs m >= 2");
  std::vector<VertexLabel> labels(2 * m);
  for (int i = 0; i < 2 * m; ++i) {
    labels[i].index = i;
    labels[i].side = i < m ? 0 : 1;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) edges.emplace_back(i, m + j);
  return {FamilyTag::kmm(m), std::move(labels), std::move(edges)};
}

LabeledGraph custom_graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw ParameterError("negative vertex count");
  std::vector<VertexLabel> labels(n);
  for (int i = 0; i < n; ++i) labels[i].index = i;
  return {FamilyTag::custom(n), std::move(labels), std::move(edges)};
}

LabeledGraph make_graph(const FamilyTag& tag) {
  switch (tag.kind) {
    case Family::kneser:
      return kneser_graph(tag.t, tag.r);
    case Family::intersection:
      return intersection_bigraph(tag.t, tag.r, tag.w);
    case Family::complete:
      return complete_graph(tag.n);
    case Family::kmm:
      return complete_bipartite_minus_matching(tag.n);
    case Family::custom:
      break;
  }
  throw ParameterError("custom graphs cannot be regenerated from their tag");
}

// ---------------------------------------------------------------------------
// Minimum vertex cover

namespace {

class VertexCoverSearch {
 public:
  VertexCoverSearch(const LabeledGraph& g, const SearchBudget& budget) : budget_(budget) {
    n_ = g.vertex_count();
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v] = g.adjacency_word(v);
  }

  /// Smallest cover containing `in` and avoiding `out`, if it is < limit.
  std::optional<int> solve(std::uint64_t in, std::uint64_t out, int limit) {
    for (std::uint64_t m = out; m; m &= m - 1) in |= adj_[std::countr_zero(m)];
    if (in & out) return std::nullopt;
    const std::uint64_t free = low_mask(n_) & ~in & ~out;
    best_ = limit;
    search(free, std::popcount(in));
    if (best_ >= limit) return std::nullopt;
    return best_;
  }

 private:
  void search(std::uint64_t free, int taken) {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetError("covering number search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    if (taken >= best_) return;

    // degree-one vertices: taking the neighbour is never worse
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint64_t m = free; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const std::uint64_t nb = adj_[v] & free;
        if (std::popcount(nb) == 1) {
          free &= ~nb;
          free &= ~(std::uint64_t{1} << v);
          ++taken;
          changed = true;
          break;
        }
        if (nb == 0) free &= ~(std::uint64_t{1} << v);
      }
      if (taken >= best_) return;
    }
    if (free == 0) {
      best_ = taken;
      return;
    }

    // greedy maximal matching: each matched edge needs its own cover vertex
    int matching = 0;
    std::uint64_t avail = free;
    int pick = -1, pick_deg = -1;
    for (std::uint64_t m = free; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int deg = std::popcount(adj_[v] & free);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
      if (!((avail >> v) & 1U)) continue;
      const std::uint64_t nb = adj_[v] & avail;
      if (nb) {
        const int u = std::countr_zero(nb);
        avail &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << u));
        ++matching;
      }
    }
    if (taken + matching >= best_) return;

    const std::uint64_t vbit = std::uint64_t{1} << pick;
    const std::uint64_t nb = adj_[pick] & free;
    search(free & ~vbit, taken + 1);
    search(free & ~vbit & ~nb, taken + std::popcount(nb));
  }

  const SearchBudget& budget_;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  int best_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

VertexCover covering_number(const LabeledGraph& g, const SearchBudget& budget) {
  require_word_sized(g, budget, "covering_number");
  const int n = g.vertex_count();
  VertexCoverSearch search(g, budget);
  const int k = *search.solve(0, 0, n + 1);
  // fix vertices in id order, preferring inclusion, to reach the least witness
  std::uint64_t in = 0, out = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (search.solve(in | bit, out, k + 1))
      in |= bit;
    else
      out |= bit;
  }
  return {k, mask_ids(in)};
}

C4Check is_c4_free(const LabeledGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const BitVec common = g.neighbors(u) & g.neighbors(v);
      const std::size_t a = common.first();
      if (a >= common.size()) continue;
      const std::size_t b = common.next(a + 1);
      if (b >= common.size()) continue;
      return {false, std::array<int, 4>{u, static_cast<int>(a), v, static_cast<int>(b)}};
    }
  return {};
}

// ---------------------------------------------------------------------------
// Maximal bicliques as closed pairs (X, N(X)) of the adjacency relation,
// listed with Ganter's NextClosure.

namespace {

template <class Visit>
void for_each_closed_pair(const LabeledGraph& g, const SearchBudget& budget, Visit&& visit) {
  require_word_sized(g, budget, "maximal biclique enumeration");
  const int n = g.vertex_count();
  const std::uint64_t all = low_mask(n);
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.adjacency_word(v);
  auto common = [&](std::uint64_t s) {
    std::uint64_t c = all;
    for (; s; s &= s - 1) c &= adj[std::countr_zero(s)];
    return c;
  };
  auto closure = [&](std::uint64_t s) { return common(common(s)); };

  std::int64_t count = 0;
  std::uint64_t a = closure(0);
  while (true) {
    if (++count > budget.max_nodes)
      throw BudgetError("maximal biclique enumeration exceeded " + std::to_string(budget.max_nodes) + " closures");
    visit(a, common(a));
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (a & bit) continue;
      const std::uint64_t below = bit - 1;
      const std::uint64_t b = closure((a & below) | bit);
      if ((b & below) == (a & below)) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

}  // namespace

std::vector<BicliqueSides> enumerate_maximal_bicliques(const LabeledGraph& g, const SearchBudget& budget) {
  std::vector<BicliqueSides> out;
  for_each_closed_pair(g, budget, [&](std::uint64_t x, std::uint64_t y) {
    if (x == 0 || y == 0) return;
    auto xs = mask_ids(x);
    auto ys = mask_ids(y);
    if (xs < ys) out.push_back({std::move(xs), std::move(ys)});
  });
  std::sort(out.begin(), out.end(),
            [](const BicliqueSides& a, const BicliqueSides& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return out;
}

long long max_biclique_edges(const LabeledGraph& g, const SearchBudget& budget) {
  long long best = 0;
  for_each_closed_pair(g, budget, [&](std::uint64_t x, std::uint64_t y) {
    best = std::max(best, static_cast<long long>(std::popcount(x)) * std::popcount(y));
  });
  return best;
}

}  // namespace framecover
