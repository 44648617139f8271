#include "framecover/transforms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "framecover/errors.hpp"
#include "framecover/subset.hpp"

namespace framecover {

namespace {

void require_kneser(const BicliqueCover& cover, const char* what) {
  if (cover.target.kind != Family::kneser)
    throw ParameterError(std::string(what) + " needs a cover of a Kneser graph, got " + cover.target.to_string());
}

void require_verified(const LabeledGraph& g, const BicliqueCover& cover, int d, const char* what) {
  const CoverReport rep = verify_cover(g, cover);
  if (!rep.passes(d))
    throw ParameterError(std::string(what) + ": input cover does not verify at multiplicity " + std::to_string(d));
}

std::uint64_t column_bits(const BitVec& column) {
  std::uint64_t bits = 0;
  for (int i : column.positions()) bits |= std::uint64_t{1} << i;
  return bits;
}

}  // namespace

BicliqueCover code_to_cover(const BinaryCode& code, int r) {
  const int t = code.size();
  if (r < 1 || t < 2 * r) throw ParameterError("code_to_cover needs r >= 1 and t >= 2r");
  if (t > kMaxGround) throw ParameterError("code_to_cover supports at most 63 codewords");
  BicliqueCover cover{FamilyTag::kneser(t, r), 1, {}};
  for (int j = 0; j < code.length(); ++j) {
    const SubsetMask a(column_bits(code.column(j)), t);
    cover.bicliques.emplace_back(GroundPairBiclique{a, a.complement(), r});
  }
  return cover;
}

BinaryCode cover_to_code(const BicliqueCover& cover, bool unchecked) {
  require_kneser(cover, "cover_to_code");
  const int t = cover.target.t;
  const int r = cover.target.r;
  if (t < 2 * r) throw ParameterError("cover_to_code needs t >= 2r");
  if (cover.size() == 0) throw ParameterError("cover_to_code needs at least one biclique");
  const LabeledGraph g = kneser_graph(t, r);
  if (!unchecked) require_verified(g, cover, 1, "cover_to_code");
  std::vector<BitVec> rows(t, BitVec(cover.size()));
  for (int i = 0; i < cover.size(); ++i) {
    const SubsetMask a = side_unions(g, cover.bicliques[i]).first;
    for (int e : a.elements()) rows[e - 1].set(i);
  }
  return BinaryCode(std::move(rows));
}

BicliqueCover cff_to_cover(const CoverFreeFamily& f, int r, int d) {
  const int t = f.size();
  if (r < 1 || t < 2 * r) throw ParameterError("cff_to_cover needs r >= 1 and t >= 2r");
  if (t > kMaxGround) throw ParameterError("cff_to_cover supports at most 63 blocks");
  if (!verify_cff(f, r, r, d).pass) throw ParameterError("cff_to_cover: family is not an (r,r;d) cover-free family");
  BicliqueCover cover{FamilyTag::kneser(t, r), 2 * d, {}};
  for (int j = 0; j < f.points(); ++j) {
    const SubsetMask a(column_bits(f.point_column(j)), t);
    cover.bicliques.emplace_back(GroundPairBiclique{a, a.complement(), r});
  }
  return cover;
}

CoverFreeFamily cover_to_cff(const BicliqueCover& cover) {
  require_kneser(cover, "cover_to_cff");
  const int t = cover.target.t;
  const LabeledGraph g = kneser_graph(t, cover.target.r);
  require_verified(g, cover, cover.d, "cover_to_cff");
  const int l = cover.size();
  std::vector<BitVec> blocks(t, BitVec(2 * l));
  for (int i = 0; i < l; ++i) {
    const auto [a, b] = side_unions(g, cover.bicliques[i]);
    for (int e : a.elements()) blocks[e - 1].set(2 * i);
    for (int e : b.elements()) blocks[e - 1].set(2 * i + 1);
  }
  return {2 * l, std::move(blocks)};
}

CoverFreeFamily intersection_cover_to_cff(const BicliqueCover& cover) {
  const FamilyTag& tag = cover.target;
  if (tag.kind != Family::intersection && tag.kind != Family::kmm)
    throw ParameterError("intersection_cover_to_cff needs an inter or kmm target");
  const LabeledGraph g = make_graph(tag);
  require_verified(g, cover, cover.d, "intersection_cover_to_cff");
  const int t = tag.kind == Family::kmm ? tag.n : tag.t;
  const int l = cover.size();
  std::vector<BitVec> blocks(t, BitVec(l));
  for (int j = 0; j < l; ++j) {
    const Biclique b = resolve(g, cover.bicliques[j]);
    for (const auto* side : {&b.x, &b.y})
      for (int v : *side) {
        if (g.label(v).side != 1) continue;
        if (tag.kind == Family::kmm)
          blocks[v - t].set(j);
        else
          for (int e : g.label(v).subset.elements()) blocks[e - 1].set(j);
      }
  }
  return {l, std::move(blocks)};
}

BicliqueCover cff_to_intersection_cover(const CoverFreeFamily& f, int r, int w, int d) {
  const int t = f.size();
  if (t > kMaxGround) throw ParameterError("cff_to_intersection_cover supports at most 63 blocks");
  if (!verify_cff(f, r, w, d).pass)
    throw ParameterError("cff_to_intersection_cover: family is not an (r,w;d) cover-free family");
  BicliqueCover cover{FamilyTag::intersection(t, r, w), d, {}};
  for (int j = 0; j < f.points(); ++j) {
    const SubsetMask a(column_bits(f.point_column(j)), t);
    cover.bicliques.emplace_back(GroundPairBiclique{a.complement(), a, r});
  }
  return cover;
}

ProjectionResult project_cover(const BicliqueCover& cover, int s, const SearchBudget& budget) {
  require_kneser(cover, "project_cover");
  const int t = cover.target.t;
  const int r = cover.target.r;
  if (!(t > 2 * r) || !(r > s) || s < 1) throw ParameterError("project_cover needs t > 2r and r > s >= 1");
  const LabeledGraph g = kneser_graph(t, r);
  require_verified(g, cover, cover.d, "project_cover");

  ProjectionResult res;
  res.cover = BicliqueCover{FamilyTag::kneser(t, s), 1, {}};
  for (const auto& entry : cover.bicliques) {
    const auto [a, b] = side_unions(g, entry);
    res.cover.bicliques.emplace_back(GroundPairBiclique{a, b, s});
  }
  try {
    res.theoretical = exact_min_n(r - s, r - s, cover.d, t - 2 * s, budget, false).n;
    res.cover.d = *res.theoretical;
  } catch (const BudgetError& e) {
    res.note = std::string("N((r-s,r-s;d),t-2s) not computed, claiming 1: ") + e.what();
  }
  const CoverReport rep = verify_cover(kneser_graph(t, s), res.cover);
  res.observed = rep.min_multiplicity.value_or(0);
  return res;
}

ProjectionResult project_intersection_cover(const BicliqueCover& cover, int i, int j, const SearchBudget& budget) {
  if (cover.target.kind != Family::intersection)
    throw ParameterError("project_intersection_cover needs a cover of an intersection graph");
  const int t = cover.target.t;
  const int r = cover.target.r;
  const int w = cover.target.w;
  if (!(1 <= i && i < r && 1 <= j && j < w)) throw ParameterError("projection needs 1 <= i < r and 1 <= j < w");
  const LabeledGraph g = intersection_bigraph(t, r, w);
  require_verified(g, cover, cover.d, "project_intersection_cover");

  ProjectionResult res;
  res.cover = BicliqueCover{FamilyTag::intersection(t, r - i, w - j), 1, {}};
  for (const auto& entry : cover.bicliques) {
    const Biclique b = resolve(g, entry);
    SubsetMask wunion(0, t), runion(0, t);
    for (const auto* side : {&b.x, &b.y})
      for (int v : *side) {
        SubsetMask& acc = g.label(v).side == 0 ? wunion : runion;
        acc = acc | g.label(v).subset;
      }
    res.cover.bicliques.emplace_back(GroundPairBiclique{wunion, runion, r - i});
  }
  try {
    res.theoretical = exact_min_n(i, j, cover.d, t - r - w + i + j, budget, false).n;
    res.cover.d = *res.theoretical;
  } catch (const BudgetError& e) {
    res.note = std::string("N((i,j;d),t-r-w+i+j) not computed, claiming 1: ") + e.what();
  }
  const CoverReport rep = verify_cover(intersection_bigraph(t, r - i, w - j), res.cover);
  res.observed = rep.min_multiplicity.value_or(0);
  return res;
}

SubsetMask kneser_phi(int t, int r, const SubsetMask& a) {
  if (r < 2 || t <= 2 * r) throw ParameterError("kneser_phi needs r >= 2 and t > 2r");
  if (a.ground_size() != t || a.size() != r) throw ParameterError("kneser_phi input must be an r-subset of [t]");
  if (!(a.contains(t) && a.contains(t - 1))) {
    const SubsetMask out = a.without(a.max_element());
    return {out.bits(), t - 2};
  }
  int x = t - 2;
  while (a.contains(x)) --x;
  const SubsetMask out = a.without(t).without(t - 1).with(x);
  return {out.bits(), t - 2};
}

namespace {

/// phi image ids, indexed by source vertex id.
std::vector<int> phi_table(const LabeledGraph& src, const LabeledGraph& dst, int t, int r) {
  std::vector<int> img(src.vertex_count());
  for (int v = 0; v < src.vertex_count(); ++v) img[v] = *dst.vertex_of(kneser_phi(t, r, src.label(v).subset));
  return img;
}

}  // namespace

HomomorphismCheck check_kneser_phi(int t, int r) {
  const LabeledGraph src = kneser_graph(t, r);
  const LabeledGraph dst = kneser_graph(t - 2, r - 1);
  const std::vector<int> img = phi_table(src, dst, t, r);
  HomomorphismCheck res;
  std::vector<char> hit(dst.edge_count(), 0);
  for (const auto& [u, v] : src.edges()) {
    const int e = dst.edge_id(img[u], img[v]);
    if (e < 0) {
      if (res.homomorphism) res.broken_edge = Edge{u, v};
      res.homomorphism = false;
      continue;
    }
    hit[e] = 1;
  }
  for (int e = 0; e < dst.edge_count(); ++e)
    if (!hit[e]) {
      res.onto_edge = false;
      res.missing_image = dst.edges()[e];
      break;
    }
  return res;
}

BicliqueCover push_cover(const BicliqueCover& cover) {
  require_kneser(cover, "push_cover");
  const int t = cover.target.t;
  const int r = cover.target.r;
  const LabeledGraph src = kneser_graph(t, r);
  require_verified(src, cover, cover.d, "push_cover");
  const LabeledGraph dst = kneser_graph(t - 2, r - 1);
  const std::vector<int> img = phi_table(src, dst, t, r);

  BicliqueCover out{dst.family(), 3 * cover.d, {}};
  for (const auto& entry : cover.bicliques) {
    const Biclique b = resolve(src, entry);
    Biclique image;
    for (int v : b.x) image.x.push_back(img[v]);
    for (int v : b.y) image.y.push_back(img[v]);
    for (auto* side : {&image.x, &image.y}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
    std::vector<int> both;
    std::set_intersection(image.x.begin(), image.x.end(), image.y.begin(), image.y.end(), std::back_inserter(both));
    for (auto* side : {&image.x, &image.y})
      std::erase_if(*side, [&](int v) { return std::binary_search(both.begin(), both.end(), v); });
    out.bicliques.emplace_back(std::move(image));
  }
  return out;
}

LabeledGraph preimage_subgraph(int t, int r, const Edge& target_edge) {
  const LabeledGraph src = kneser_graph(t, r);
  const LabeledGraph dst = kneser_graph(t - 2, r - 1);
  if (dst.edge_id(target_edge.first, target_edge.second) < 0)
    throw ParameterError("preimage_subgraph: not an edge of KG(t-2, r-1)");
  const std::vector<int> img = phi_table(src, dst, t, r);
  std::vector<int> members;
  std::vector<VertexLabel> labels;
  for (int side = 0; side < 2; ++side) {
    const int target = side == 0 ? target_edge.first : target_edge.second;
    for (int v = 0; v < src.vertex_count(); ++v)
      if (img[v] == target) {
        labels.push_back({src.label(v).subset, side, static_cast<int>(members.size())});
        members.push_back(v);
      }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(members.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(members.size()); ++j)
      if (src.adjacent(members[i], members[j])) edges.emplace_back(i, j);
  return {FamilyTag::custom(static_cast<int>(members.size())), std::move(labels), std::move(edges)};
}

bool has_induced_c6_or_3_matching(const LabeledGraph& g) {
  const int n = g.vertex_count();
  if (n > 40) throw BudgetError("induced-structure scan supports at most 40 vertices");
  bool found = false;
  for_each_combination(n, 6, [&](std::span<const int> c) {
    int deg[6] = {};
    int edges = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (g.adjacent(c[i], c[j])) {
          ++deg[i];
          ++deg[j];
          ++edges;
        }
    const bool all1 = std::all_of(deg, deg + 6, [](int x) { return x == 1; });
    const bool all2 = std::all_of(deg, deg + 6, [](int x) { return x == 2; });
    if (all1 && edges == 3) {
      found = true;
      return false;
    }
    if (all2 && edges == 6) {
      // 2-regular on six vertices is C6 unless it splits into two triangles
      int seen = 1, prev = -1, cur = 0;
      while (true) {
        int next = -1;
        for (int k = 0; k < 6; ++k)
          if (k != cur && k != prev && g.adjacent(c[cur], c[k])) {
            next = k;
            break;
          }
        if (next == 0 || next < 0) break;
        prev = cur;
        cur = next;
        ++seen;
      }
      if (seen == 6) {
        found = true;
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace framecover
