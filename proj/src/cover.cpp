#include "framecover/cover.hpp"

#include <algorithm>
#include <limits>

#include "framecover/errors.hpp"

namespace framecover {

GroundPairBiclique make_ground_pair(SubsetMask a, SubsetMask b, int r) {
  if (a.ground_size() != b.ground_size()) throw ParameterError("ground pair parts use different ground sets");
  if (a.intersects(b)) throw ParameterError("ground pair parts " + a.to_string() + " and " + b.to_string() + " intersect");
  if (r < 0) throw ParameterError("ground pair subset size must be >= 0");
  return {a, b, r};
}

SubsetBiclique expand_ground_pair(const GroundPairBiclique& gp) {
  return {subsets_of(gp.a, gp.r), subsets_of(gp.b, gp.r)};
}

namespace {

std::vector<int> ids_of(const LabeledGraph& g, const std::vector<SubsetMask>& subsets, int side) {
  std::vector<int> ids;
  ids.reserve(subsets.size());
  for (const auto& s : subsets) {
    auto id = g.vertex_of(s, side);
    if (!id) throw ParameterError("subset " + s.to_string() + " is not a vertex of " + g.family().to_string());
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Biclique resolve_ground_pair(const LabeledGraph& g, const GroundPairBiclique& gp) {
  const FamilyTag& f = g.family();
  if (gp.a.ground_size() != f.t) throw ParameterError("ground pair ground set does not match the target graph");
  if (gp.a.intersects(gp.b)) throw ParameterError("ground pair parts intersect");
  if (f.kind == Family::kneser) {
    if (gp.r != f.r) throw ParameterError("ground pair subset size does not match kneser r");
    return {ids_of(g, subsets_of(gp.a, f.r), 0), ids_of(g, subsets_of(gp.b, f.r), 0)};
  }
  if (f.kind == Family::intersection)
    return {ids_of(g, subsets_of(gp.a, f.w), 0), ids_of(g, subsets_of(gp.b, f.r), 1)};
  throw ParameterError("ground pair bicliques need a kneser or intersection target");
}

}  // namespace

Biclique resolve(const LabeledGraph& g, const CoverEntry& entry) {
  if (const auto* gp = std::get_if<GroundPairBiclique>(&entry)) return resolve_ground_pair(g, *gp);
  Biclique b = std::get<Biclique>(entry);
  for (const auto* side : {&b.x, &b.y})
    for (int v : *side)
      if (v < 0 || v >= g.vertex_count()) throw ParameterError("biclique vertex " + std::to_string(v) + " out of range");
  std::sort(b.x.begin(), b.x.end());
  std::sort(b.y.begin(), b.y.end());
  b.x.erase(std::unique(b.x.begin(), b.x.end()), b.x.end());
  b.y.erase(std::unique(b.y.begin(), b.y.end()), b.y.end());
  return b;
}

std::pair<SubsetMask, SubsetMask> side_unions(const LabeledGraph& g, const CoverEntry& entry) {
  const Biclique b = resolve(g, entry);
  const int t = g.family().subset_labeled() ? g.family().t : 0;
  SubsetMask ux(0, t), uy(0, t);
  if (t == 0) return {ux, uy};
  for (int v : b.x) ux = ux | g.label(v).subset;
  for (int v : b.y) uy = uy | g.label(v).subset;
  return {ux, uy};
}

std::vector<int> edge_multiplicities(const LabeledGraph& g, const std::vector<Biclique>& bicliques) {
  const int m = g.edge_count();
  std::vector<int> total(m, 0);
  const long nb = static_cast<long>(bicliques.size());
#pragma omp parallel
  {
    std::vector<int> local(m, 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (long k = 0; k < nb; ++k)
      for (int x : bicliques[k].x)
        for (int y : bicliques[k].y) {
          const int e = g.edge_id(x, y);
          if (e >= 0) ++local[e];
        }
#pragma omp critical
    for (int e = 0; e < m; ++e) total[e] += local[e];
  }
  return total;
}

namespace serial {

std::vector<int> edge_multiplicities(const LabeledGraph& g, const std::vector<Biclique>& bicliques) {
  std::vector<int> total(g.edge_count(), 0);
  for (const auto& b : bicliques)
    for (int x : b.x)
      for (int y : b.y)
        if (const int e = g.edge_id(x, y); e >= 0) ++total[e];
  return total;
}

}  // namespace serial

CoverReport verify_cover(const LabeledGraph& g, const BicliqueCover& cover) {
  if (!(cover.target == g.family()))
    throw ParameterError("cover targets " + cover.target.to_string() + " but the graph is " + g.family().to_string());
  CoverReport report;
  std::vector<Biclique> resolved;
  resolved.reserve(cover.bicliques.size());
  for (int k = 0; k < cover.size() && report.valid_bicliques; ++k) {
    Biclique b = resolve(g, cover.bicliques[k]);
    for (int x : b.x) {
      for (int y : b.y)
        if (!g.adjacent(x, y)) {
          report.valid_bicliques = false;
          report.invalid = InvalidPair{k, x, y};
          break;
        }
      if (!report.valid_bicliques) break;
    }
    resolved.push_back(std::move(b));
  }
  if (!report.valid_bicliques) return report;

  report.multiplicities = edge_multiplicities(g, resolved);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int c = report.multiplicities[e];
    ++report.profile[c];
    if (c < cover.d) report.uncovered.push_back(g.edges()[e]);
  }
  if (g.edge_count() > 0)
    report.min_multiplicity = *std::min_element(report.multiplicities.begin(), report.multiplicities.end());
  return report;
}

long long bc_lower_bound(const LabeledGraph& g, int d, const SearchBudget& budget) {
  if (d < 1) throw ParameterError("multiplicity d must be >= 1");
  if (g.edge_count() == 0) return 0;
  const long long b = max_biclique_edges(g, budget);
  const long long need = static_cast<long long>(d) * g.edge_count();
  return (need + b - 1) / b;
}

}  // namespace framecover
