#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "framecover/budget.hpp"
#include "framecover/graph.hpp"
#include "framecover/subset.hpp"

namespace framecover {

/// Explicit biclique: sorted vertex ids of the target graph. Either side may
/// be empty.
struct Biclique {
  std::vector<int> x;
  std::vector<int> y;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

/// Biclique given by a disjoint pair of ground-set subsets: in KG(t,r) its
/// sides are the r-subsets of a and of b. In I_t(r,w) the x side is the
/// w-subsets of a (w-side vertices) and the y side the r-subsets of b.
struct GroundPairBiclique {
  SubsetMask a;
  SubsetMask b;
  int r = 0;
  friend bool operator==(const GroundPairBiclique&, const GroundPairBiclique&) = default;
};

using CoverEntry = std::variant<Biclique, GroundPairBiclique>;

/// A multiset of bicliques claimed to cover every edge of `target` at least
/// d times. The claim is checked by verify_cover, never assumed.
struct BicliqueCover {
  FamilyTag target;
  int d = 1;
  std::vector<CoverEntry> bicliques;

  int size() const { return static_cast<int>(bicliques.size()); }
};

/// Throws ParameterError if the parts intersect or r < 0.
GroundPairBiclique make_ground_pair(SubsetMask a, SubsetMask b, int r);

struct SubsetBiclique {
  std::vector<SubsetMask> x;
  std::vector<SubsetMask> y;
};

/// Sides as subsets: all r-subsets of a and of b, colex order.
SubsetBiclique expand_ground_pair(const GroundPairBiclique& gp);

/// Resolves either entry form to explicit vertex ids of g.
Biclique resolve(const LabeledGraph& g, const CoverEntry& entry);

/// Union of the subsets labelling each side; both empty for graphs that are
/// not subset-labelled.
std::pair<SubsetMask, SubsetMask> side_unions(const LabeledGraph& g, const CoverEntry& entry);

struct InvalidPair {
  int biclique = -1;
  int u = -1;
  int v = -1;
};

struct CoverReport {
  bool valid_bicliques = true;
  std::optional<InvalidPair> invalid;  // first offending pair (or shared vertex)
  /// Minimum edge multiplicity; nullopt when the graph has no edges.
  std::optional<int> min_multiplicity;
  std::vector<Edge> uncovered;       // edges covered fewer than cover.d times
  std::map<int, int> profile;        // multiplicity -> number of edges
  std::vector<int> multiplicities;   // per edge, in g.edges() order

  bool passes(int d) const { return valid_bicliques && (!min_multiplicity || *min_multiplicity >= d); }
};

/// Checks biclique validity and counts per-edge coverage. Throws
/// ParameterError if cover.target does not describe g.
CoverReport verify_cover(const LabeledGraph& g, const BicliqueCover& cover);

/// ceil(d * |E| / B(g)), where B is max_biclique_edges; 0 for edgeless g.
long long bc_lower_bound(const LabeledGraph& g, int d, const SearchBudget& budget = {});

/// Per-edge multiplicities of already validated bicliques (parallel).
std::vector<int> edge_multiplicities(const LabeledGraph& g, const std::vector<Biclique>& bicliques);

namespace serial {
std::vector<int> edge_multiplicities(const LabeledGraph& g, const std::vector<Biclique>& bicliques);
}  // namespace serial

}  // namespace framecover
