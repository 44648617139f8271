#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "framecover/bitvec.hpp"
#include "framecover/budget.hpp"
#include "framecover/subset.hpp"

namespace framecover {

enum class Family { kneser, intersection, complete, kmm, custom };

/// Names a generated graph family. Parameters unused by a family stay 0.
///   kneser(t, r)         vertices: r-subsets of [t]
///   intersection(t,r,w)  side 0: w-subsets, side 1: r-subsets
///   complete(n)          K_n
///   kmm(m)               K_{m,m} minus the matching {i, m+i}
struct FamilyTag {
  Family kind = Family::custom;
  int t = 0;
  int r = 0;
  int w = 0;
  int n = 0;

  static FamilyTag kneser(int t, int r) { return {Family::kneser, t, r, 0, 0}; }
  static FamilyTag intersection(int t, int r, int w) { return {Family::intersection, t, r, w, 0}; }
  static FamilyTag complete(int n) { return {Family::complete, 0, 0, 0, n}; }
  static FamilyTag kmm(int m) { return {Family::kmm, 0, 0, 0, m}; }
  static FamilyTag custom(int n) { return {Family::custom, 0, 0, 0, n}; }

  /// Compact grammar: "kneser:t,r", "inter:t,r,w", "kn:n", "kmm:m".
  static FamilyTag parse(std::string_view text);
  std::string to_string() const;
  bool subset_labeled() const { return kind == Family::kneser || kind == Family::intersection; }

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Vertex label. Subset-labeled families store the subset and a side tag
/// (intersection graphs: 0 = w-side, 1 = r-side); the others store only an
/// integer id in `index`.
struct VertexLabel {
  SubsetMask subset;
  int side = 0;
  int index = 0;
};

using Edge = std::pair<int, int>;

/// Small explicit graph. Vertex ids are 0..n-1 in canonical order: colex rank
/// for Kneser graphs; w-side then r-side (each in colex) for intersection
/// graphs. Edges are stored with u < v, sorted.
class LabeledGraph {
 public:
  /// Validates edges (ids in range, no loops); duplicate edges are merged.
  LabeledGraph(FamilyTag family, std::vector<VertexLabel> labels, std::vector<Edge> edges);

  const FamilyTag& family() const { return family_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexLabel& label(int v) const { return labels_[v]; }
  const BitVec& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  /// Index into edges(), or -1.
  int edge_id(int u, int v) const;

  /// Canonical id of a subset-labeled vertex, or nullopt.
  std::optional<int> vertex_of(const SubsetMask& s, int side = 0) const;

  /// Set for Kneser graphs with t < 2r, which are edgeless.
  bool degenerate() const { return degenerate_; }

  /// Adjacency row as a single word; requires vertex_count() <= 64.
  std::uint64_t adjacency_word(int v) const { return adj_[v].words().empty() ? 0 : adj_[v].words()[0]; }

 private:
  FamilyTag family_;
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<BitVec> adj_;
  std::vector<int> edge_index_;
  bool degenerate_ = false;
};

LabeledGraph kneser_graph(int t, int r);
LabeledGraph intersection_bigraph(int t, int r, int w);
LabeledGraph complete_graph(int n);
LabeledGraph complete_bipartite_minus_matching(int m);
LabeledGraph custom_graph(int n, std::vector<Edge> edges);
/// Regenerates a family-tagged graph; custom tags throw ParameterError.
LabeledGraph make_graph(const FamilyTag& tag);

struct VertexCover {
  int size = 0;
  std::vector<int> witness;  // sorted vertex ids
};

/// Exact minimum vertex cover by branch and bound. Among minimum covers the
/// lexicographically least sorted id tuple is returned.
VertexCover covering_number(const LabeledGraph& g, const SearchBudget& budget = {});

struct C4Check {
  bool free = true;
  std::optional<std::array<int, 4>> witness;  // cycle a-b-c-d-a
};

/// Subgraph (not induced) 4-cycle test.
C4Check is_c4_free(const LabeledGraph& g);

struct BicliqueSides {
  std::vector<int> x;
  std::vector<int> y;
};

/// Every maximal biclique with both sides nonempty, once up to side swap; the
/// lexicographically smaller side is x. Sorted by (x, y).
std::vector<BicliqueSides> enumerate_maximal_bicliques(const LabeledGraph& g, const SearchBudget& budget = {});

/// B(G): the largest |X|*|Y| over bicliques of g with both sides nonempty;
/// 0 for an edgeless graph.
long long max_biclique_edges(const LabeledGraph& g, const SearchBudget& budget = {});

}  // namespace framecover
