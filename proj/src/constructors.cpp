#include "framecover/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "framecover/errors.hpp"

namespace framecover {

std::vector<GroundPairBiclique> halving_pool(int t, int r) {
  if (r < 1 || t < 1 || r > t) throw ParameterError("halving pool needs 1 <= r <= t");
  std::vector<GroundPairBiclique> pool;
  for (const auto& a : enumerate_ksubsets(t, (t + 1) / 2)) pool.push_back({a, a.complement(), r});
  return pool;
}

SfpcBound sfpc_bound(int t, int r) {
  if (r < 1 || t < 2 * r) throw ParameterError("sfpc bound needs r >= 1 and t >= 2r");
  const int h = (t + 1) / 2;
  SfpcBound b;
  b.pool_size = binomial(t, h);
  b.alpha = binomial(h, r) * binomial(t - h, r);
  b.beta = 2 * binomial(t - 2 * r, h - r);
  b.p = std::log(static_cast<double>(b.alpha)) / static_cast<double>(b.beta);
  b.value = static_cast<double>(b.pool_size) / static_cast<double>(b.beta) *
            (1.0 + std::log(static_cast<double>(b.alpha)));
  b.floor_value = static_cast<long long>(std::floor(b.value));
  b.valid = t > 2 * r && b.p >= 0.0 && b.p <= 1.0;
  if (t == 2 * r)
    b.note = "t = 2r: alpha = 1 so p = 0 and the bound degenerates to C(t,r)/2";
  else if (b.p > 1.0)
    b.note = "ln(alpha)/beta exceeds 1; t is not large enough relative to r for the bound";
  return b;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct PoolCoverage {
  LabeledGraph graph;
  std::vector<GroundPairBiclique> pool;
  std::vector<std::vector<int>> edges;  // per pool entry
};

PoolCoverage pool_coverage(int t, int r) {
  PoolCoverage pc{kneser_graph(t, r), halving_pool(t, r), {}};
  for (const auto& gp : pc.pool) {
    const Biclique b = resolve(pc.graph, gp);
    std::vector<int> es;
    for (int x : b.x)
      for (int y : b.y)
        if (int e = pc.graph.edge_id(x, y); e >= 0) es.push_back(e);
    pc.edges.push_back(std::move(es));
  }
  return pc;
}

GroundPairBiclique single_edge(const LabeledGraph& g, const Edge& e, int r) {
  return {g.label(e.first).subset, g.label(e.second).subset, r};
}

BicliqueCover run_trial(const PoolCoverage& pc, int r, double p, std::uint64_t seed, int trial) {
  std::mt19937_64 gen(splitmix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1)));
  BicliqueCover cover{pc.graph.family(), 1, {}};
  std::vector<char> covered(pc.graph.edge_count(), 0);
  for (std::size_t k = 0; k < pc.pool.size(); ++k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u >= p) continue;
    cover.bicliques.emplace_back(pc.pool[k]);
    for (int e : pc.edges[k]) covered[e] = 1;
  }
  for (int e = 0; e < pc.graph.edge_count(); ++e)
    if (!covered[e]) cover.bicliques.emplace_back(single_edge(pc.graph, pc.graph.edges()[e], r));
  return cover;
}

RandomCoverResult prepare(int t, int r, const RandomTrialConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("random construction needs at least one trial");
  if (r < 1 || r > t) throw ParameterError("random construction needs 1 <= r <= t");
  RandomCoverResult res;
  const int h = (t + 1) / 2;
  const std::uint64_t alpha = binomial(h, r) * binomial(t - h, r);
  const std::uint64_t beta = 2 * binomial(t - 2 * r, h - r);
  res.p_formula = beta == 0 || alpha == 0 ? 0.0 : std::log(static_cast<double>(alpha)) / static_cast<double>(beta);
  if (cfg.p_override && !(*cfg.p_override >= 0.0 && *cfg.p_override <= 1.0))
    throw ParameterError("probability override must lie in [0, 1]");
  double p = cfg.p_override.value_or(res.p_formula);
  if (std::isnan(p)) p = 0.0;
  res.p = std::clamp(p, 0.0, 1.0);
  res.clamped = res.p != p;
  res.sizes.assign(cfg.trials, 0);
  return res;
}

void pick_best(RandomCoverResult& res, std::vector<BicliqueCover>& covers) {
  res.best_trial = 0;
  for (int k = 1; k < static_cast<int>(covers.size()); ++k)
    if (res.sizes[k] < res.sizes[res.best_trial]) res.best_trial = k;
  res.best = std::move(covers[res.best_trial]);
}

void check_trial(const PoolCoverage& pc, const BicliqueCover& cover) {
  if (!verify_cover(pc.graph, cover).passes(1))
    throw std::logic_error("random construction produced an unverified cover");
}

}  // namespace

RandomCoverResult random_cover(int t, int r, const RandomTrialConfig& cfg) {
  RandomCoverResult res = prepare(t, r, cfg);
  const PoolCoverage pc = pool_coverage(t, r);
  std::vector<BicliqueCover> covers(cfg.trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < cfg.trials; ++k) {
    covers[k] = run_trial(pc, r, res.p, cfg.seed, k);
    res.sizes[k] = covers[k].size();
  }
  // verification runs its own parallel kernel, so keep it outside the trial loop
  for (const auto& c : covers) check_trial(pc, c);
  pick_best(res, covers);
  return res;
}

namespace serial {

RandomCoverResult random_cover(int t, int r, const RandomTrialConfig& cfg) {
  RandomCoverResult res = prepare(t, r, cfg);
  const PoolCoverage pc = pool_coverage(t, r);
  std::vector<BicliqueCover> covers;
  for (int k = 0; k < cfg.trials; ++k) {
    covers.push_back(run_trial(pc, r, res.p, cfg.seed, k));
    res.sizes[k] = covers.back().size();
    check_trial(pc, covers.back());
  }
  pick_best(res, covers);
  return res;
}

}  // namespace serial

BicliqueCover greedy_cover(int t, int r) {
  const PoolCoverage pc = pool_coverage(t, r);
  BicliqueCover cover{pc.graph.family(), 1, {}};
  std::vector<char> covered(pc.graph.edge_count(), 0);
  while (true) {
    int best = -1, best_gain = 1;
    for (int k = 0; k < static_cast<int>(pc.pool.size()); ++k) {
      int gain = 0;
      for (int e : pc.edges[k]) gain += !covered[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    if (best < 0) break;
    cover.bicliques.emplace_back(pc.pool[best]);
    for (int e : pc.edges[best]) covered[e] = 1;
  }
  for (int e = 0; e < pc.graph.edge_count(); ++e)
    if (!covered[e]) cover.bicliques.emplace_back(single_edge(pc.graph, pc.graph.edges()[e], r));
  if (!verify_cover(pc.graph, cover).passes(1)) throw std::logic_error("greedy construction produced an unverified cover");
  return cover;
}

std::vector<Biclique> maximal_bicliques(const LabeledGraph& g, const SearchBudget& budget) {
  std::vector<Biclique> out;
  for (auto& s : enumerate_maximal_bicliques(g, budget)) out.push_back({std::move(s.x), std::move(s.y)});
  return out;
}

// ---------------------------------------------------------------------------
// Exact d-biclique covering number

namespace {

class MulticoverSearch {
 public:
  MulticoverSearch(const LabeledGraph& g, const std::vector<Biclique>& cands, int d, const SearchBudget& budget)
      : d_(d), budget_(budget), edge_cands_(g.edge_count()) {
    for (const auto& b : cands) {
      std::vector<int> es;
      for (int x : b.x)
        for (int y : b.y)
          if (int e = g.edge_id(x, y); e >= 0) es.push_back(e);
      std::sort(es.begin(), es.end());
      cand_edges_.push_back(std::move(es));
    }
    for (int c = 0; c < static_cast<int>(cand_edges_.size()); ++c)
      for (int e : cand_edges_[c]) edge_cands_[e].push_back(c);
    need_.assign(g.edge_count(), d);
    deficit_ = static_cast<long long>(d) * g.edge_count();
    excluded_.assign(cand_edges_.size(), 0);
  }

  /// Greedy upper bound; returns the chosen candidates.
  std::vector<int> greedy() const {
    std::vector<int> need = need_;
    long long deficit = deficit_;
    std::vector<int> picks;
    while (deficit > 0) {
      int best = -1, best_gain = 0;
      for (int c = 0; c < static_cast<int>(cand_edges_.size()); ++c) {
        int gain = 0;
        for (int e : cand_edges_[c]) gain += need[e] > 0;
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      if (best < 0) throw std::logic_error("maximal bicliques do not cover every edge");
      for (int e : cand_edges_[best])
        if (need[e] > 0) {
          --need[e];
          --deficit;
        }
      picks.push_back(best);
    }
    return picks;
  }

  std::vector<int> solve(std::vector<int> upper, long long lower) {
    best_ = std::move(upper);
    lower_ = lower;
    chosen_.clear();
    dfs();
    return best_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  int gain(int c) const {
    int g = 0;
    for (int e : cand_edges_[c]) g += need_[e] > 0;
    return g;
  }

  void dfs() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetError("exact biclique cover search exceeded " + std::to_string(budget_.max_nodes) + " nodes",
                        static_cast<long long>(best_.size()));
    const long long depth = static_cast<long long>(chosen_.size());
    if (deficit_ == 0) {
      if (depth < static_cast<long long>(best_.size())) best_ = chosen_;
      return;
    }
    if (static_cast<long long>(best_.size()) <= lower_) return;  // already optimal

    int max_need = 0;
    for (int nd : need_) max_need = std::max(max_need, nd);
    int max_gain = 0;
    for (int c = 0; c < static_cast<int>(cand_edges_.size()); ++c)
      if (!excluded_[c]) max_gain = std::max(max_gain, gain(c));
    if (max_gain == 0) return;
    const long long lb = std::max<long long>(max_need, (deficit_ + max_gain - 1) / max_gain);
    if (depth + lb >= static_cast<long long>(best_.size())) return;

    // branch on the deficient edge with the fewest usable candidates
    int edge = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (int e = 0; e < static_cast<int>(need_.size()); ++e) {
      if (need_[e] == 0) continue;
      std::size_t avail = 0;
      for (int c : edge_cands_[e]) avail += !excluded_[c];
      if (avail < fewest) {
        fewest = avail;
        edge = e;
      }
    }
    if (fewest == 0) return;

    std::vector<std::pair<int, int>> order;  // (-gain, candidate)
    for (int c : edge_cands_[edge])
      if (!excluded_[c]) order.emplace_back(-gain(c), c);
    std::sort(order.begin(), order.end());

    std::vector<int> shut;
    std::vector<int> touched;
    for (auto [neg_gain, c] : order) {
      touched.clear();
      for (int e : cand_edges_[c])
        if (need_[e] > 0) {
          --need_[e];
          touched.push_back(e);
        }
      deficit_ -= static_cast<long long>(touched.size());
      chosen_.push_back(c);
      if (d_ == 1) ++excluded_[c];
      dfs();
      if (d_ == 1) --excluded_[c];
      chosen_.pop_back();
      deficit_ += static_cast<long long>(touched.size());
      for (int e : touched) ++need_[e];
      // later siblings never use c: every cover containing it was searched here
      ++excluded_[c];
      shut.push_back(c);
      if (static_cast<long long>(best_.size()) <= lower_) break;
    }
    for (int c : shut) --excluded_[c];
  }

  int d_;
  const SearchBudget& budget_;
  std::vector<std::vector<int>> cand_edges_;
  std::vector<std::vector<int>> edge_cands_;
  std::vector<int> need_;
  long long deficit_ = 0;
  std::vector<int> excluded_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  long long lower_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

ExactBcResult exact_bc(const LabeledGraph& g, int d, const SearchBudget& budget) {
  if (d < 1) throw ParameterError("multiplicity d must be >= 1");
  if (g.edge_count() > budget.max_edges)
    throw BudgetError("exact_bc: graph has " + std::to_string(g.edge_count()) + " edges, budget allows " +
                      std::to_string(budget.max_edges));
  ExactBcResult res;
  res.witness = BicliqueCover{g.family(), d, {}};
  if (g.edge_count() == 0) return res;

  const std::vector<Biclique> cands = maximal_bicliques(g, budget);
  res.lower_bound = bc_lower_bound(g, d, budget);
  MulticoverSearch search(g, cands, d, budget);
  const std::vector<int> picks = search.solve(search.greedy(), res.lower_bound);
  res.nodes = search.nodes();
  res.size = static_cast<int>(picks.size());
  for (int c : picks) res.witness.bicliques.emplace_back(cands[c]);
  if (!verify_cover(g, res.witness).passes(d)) throw std::logic_error("exact_bc witness failed verification");
  return res;
}

}  // namespace framecover
