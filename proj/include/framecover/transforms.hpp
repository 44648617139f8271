#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framecover/budget.hpp"
#include "framecover/cff.hpp"
#include "framecover/code.hpp"
#include "framecover/cover.hpp"
#include "framecover/graph.hpp"

namespace framecover {

// Codes <-> covers of KG(t,r)

/// One ground pair (A_j, A_j^c, r) per code column, A_j = rows with a 1.
/// Requires t >= 2r.
BicliqueCover code_to_cover(const BinaryCode& code, int r);

/// Column i is the indicator of the union of the x-side subsets of biclique i.
/// Unless `unchecked`, refuses (ParameterError) covers that do not verify at d = 1.
BinaryCode cover_to_code(const BicliqueCover& cover, bool unchecked = false);

// Cover-free families <-> covers

/// Each point j gives the ground pair (A_j, A_j^c, r) with A_j the blocks that
/// contain j. The result claims multiplicity 2d over KG(t,r). Requires t >= 2r
/// and that f verifies as an (r,r;d)-CFF.
BicliqueCover cff_to_cover(const CoverFreeFamily& f, int r, int d);

/// Two points per biclique: the indicators of the x-side union and of the
/// y-side union. Requires the cover to verify at its d over a Kneser target;
/// the result is an (r,r;d)-CFF with 2l points.
CoverFreeFamily cover_to_cff(const BicliqueCover& cover);

/// One point per biclique of a cover of I_t(r,w): block k holds the points
/// whose r-side union contains k. Gives an (r,w;d)-CFF with l points. K-_{m,m}
/// covers are read through the identity on ids, I_m(1,1) being laid out the
/// same way.
CoverFreeFamily intersection_cover_to_cff(const BicliqueCover& cover);

/// Each point j gives the ground pair (complement of A_j, A_j) over I_t(r,w),
/// A_j the blocks containing j. Claims multiplicity d.
BicliqueCover cff_to_intersection_cover(const CoverFreeFamily& f, int r, int w, int d);

// Projection to smaller subsets

struct ProjectionResult {
  BicliqueCover cover;             // claimed multiplicity in cover.d
  std::optional<int> theoretical;  // N((r-s, r-s; d), t-2s) when computed
  int observed = 0;                // min multiplicity measured by verify_cover
  std::string note;
};

/// Maps each biclique of a d-cover of KG(t,r) to (s-subsets of A_i, s-subsets
/// of B_i), A_i/B_i the side unions. Claims m = N((r-s,r-s;d), t-2s) when it
/// is computable within budget, otherwise 1. Requires t > 2r, r > s >= 1.
ProjectionResult project_cover(const BicliqueCover& cover, int s, const SearchBudget& budget = {});

/// Same map for a d-cover of I_t(r,w) into I_t(r-i, w-j), claiming
/// m = N((i,j;d), t-r-w+i+j). Requires 1 <= i < r and 1 <= j < w.
ProjectionResult project_intersection_cover(const BicliqueCover& cover, int i, int j,
                                            const SearchBudget& budget = {});

// Kneser homomorphism KG(t,r) -> KG(t-2, r-1)

/// Drops max(A) unless A holds both t-1 and t; then replaces {t-1, t} by the
/// largest element missing from A. Requires t > 2r and |a| = r.
SubsetMask kneser_phi(int t, int r, const SubsetMask& a);

struct HomomorphismCheck {
  bool homomorphism = true;
  bool onto_edge = true;
  std::optional<Edge> broken_edge;    // source edge whose image is not an edge
  std::optional<Edge> missing_image;  // target edge with no preimage edge
};

HomomorphismCheck check_kneser_phi(int t, int r);

/// Image of each biclique under phi, dropping any vertex that lands on both
/// sides. Claims multiplicity 3d over KG(t-2, r-1). Requires t > 2r and the
/// cover verifying at its d.
BicliqueCover push_cover(const BicliqueCover& cover);

/// Induced subgraph of KG(t,r) on the preimages of the two endpoints of an
/// edge of KG(t-2, r-1). Vertex labels keep the subsets; side 0 holds the
/// preimages of edge.first, side 1 those of edge.second.
LabeledGraph preimage_subgraph(int t, int r, const Edge& target_edge);

/// True if g has an induced 6-cycle or an induced matching of three edges.
bool has_induced_c6_or_3_matching(const LabeledGraph& g);

}  // namespace framecover
