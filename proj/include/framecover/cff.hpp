#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framecover/bitvec.hpp"
#include "framecover/budget.hpp"

namespace framecover {

/// t blocks over the point set {0, ..., n-1}; row i of the t x n incidence
/// matrix is block i. Blocks may repeat or be empty.
class CoverFreeFamily {
 public:
  CoverFreeFamily(int points, std::vector<BitVec> blocks);
  static CoverFreeFamily from_strings(const std::vector<std::string>& rows);

  int points() const { return points_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const BitVec& block(int i) const { return blocks_[i]; }
  const std::vector<BitVec>& blocks() const { return blocks_; }
  /// Blocks containing point j, as a bit vector over block indices.
  BitVec point_column(int j) const;

  friend bool operator==(const CoverFreeFamily&, const CoverFreeFamily&) = default;

 private:
  int points_ = 0;
  std::vector<BitVec> blocks_;
};

struct CffVerdict {
  bool pass = true;
  std::vector<int> i_set;  // least failing (I, J), 0-based block indices
  std::vector<int> j_set;
  int private_points = 0;  // |cap_I B_i \ cup_J B_j| at the witness
};

/// (r,w;d) cover-free check: for all disjoint I, J with |I| = r, |J| = w, the
/// intersection of the I-blocks keeps at least d points outside the union of
/// the J-blocks. Parallel over I; least witness in lexicographic (I, J) order.
CffVerdict verify_cff(const CoverFreeFamily& f, int r, int w, int d);

namespace serial {
CffVerdict verify_cff(const CoverFreeFamily& f, int r, int w, int d);
}  // namespace serial

struct MinNResult {
  int n = 0;
  CoverFreeFamily witness{0, {}};
  std::int64_t nodes = 0;
  /// bc_d(I_t(r,w)) from the biclique solver, when it ran within budget.
  std::optional<int> bc_intersection;
  std::string cross_check_note;

  bool cross_check_agrees() const { return !bc_intersection || *bc_intersection == n; }
};

/// N((r,w;d),t) by exhaustive search over multisets of incidence columns,
/// kept in nondecreasing column order, for n = lower bound, lower bound + 1, ...
/// With cross_check set, bc_d(I_t(r,w)) is computed by the exact biclique
/// solver and reported alongside. Throws BudgetError past budget.max_nodes.
MinNResult exact_min_n(int r, int w, int d, int t, const SearchBudget& budget = {}, bool cross_check = true);

}  // namespace framecover
