#include "framecover/cff.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "framecover/constructors.hpp"
#include "framecover/errors.hpp"
#include "framecover/graph.hpp"
#include "framecover/subset.hpp"

namespace framecover {

CoverFreeFamily::CoverFreeFamily(int points, std::vector<BitVec> blocks) : points_(points), blocks_(std::move(blocks)) {
  if (points_ < 0) throw ParameterError("negative point count");
  for (const auto& b : blocks_)
    if (static_cast<int>(b.size()) != points_) throw ParameterError("block width differs from the point count");
}

CoverFreeFamily CoverFreeFamily::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ParameterError("a family needs at least one block");
  std::vector<BitVec> blocks;
  for (const auto& r : rows) blocks.push_back(BitVec::from_string(r));
  const int n = blocks.empty() ? 0 : static_cast<int>(blocks.front().size());
  return {n, std::move(blocks)};
}

BitVec CoverFreeFamily::point_column(int j) const {
  BitVec col(blocks_.size());
  for (int i = 0; i < size(); ++i)
    if (blocks_[i].test(j)) col.set(i);
  return col;
}

namespace {

void check_cff_params(const CoverFreeFamily& f, int r, int w, int d) {
  if (r < 1 || w < 1 || d < 1) throw ParameterError("cover-free parameters r, w, d must be >= 1");
  if (r + w > f.size())
    throw ParameterError("cover-free check needs r + w <= t (t=" + std::to_string(f.size()) + ")");
}

std::vector<std::vector<int>> all_combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, k, [&](std::span<const int> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

/// Least failing J for a fixed I, if any.
std::optional<CffVerdict> scan_j(const CoverFreeFamily& f, const std::vector<int>& I, int w, int d) {
  const int t = f.size();
  BitVec inter = f.block(I.front());
  for (std::size_t k = 1; k < I.size(); ++k) inter &= f.block(I[k]);
  std::vector<int> rest;
  for (int i = 0; i < t; ++i)
    if (!std::binary_search(I.begin(), I.end(), i)) rest.push_back(i);
  std::optional<CffVerdict> found;
  for_each_combination(static_cast<int>(rest.size()), w, [&](std::span<const int> jc) {
    BitVec left = inter;
    for (int k : jc) left &= ~f.block(rest[k]);
    const int c = static_cast<int>(left.count());
    if (c >= d) return true;
    std::vector<int> J;
    for (int k : jc) J.push_back(rest[k]);
    found = CffVerdict{false, I, std::move(J), c};
    return false;
  });
  return found;
}

}  // namespace

CffVerdict verify_cff(const CoverFreeFamily& f, int r, int w, int d) {
  check_cff_params(f, r, w, d);
  const auto Is = all_combinations(f.size(), r);
  const long n = static_cast<long>(Is.size());
  std::vector<std::optional<CffVerdict>> hits(Is.size());
  long best = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (long i = 0; i < n; ++i) {
    if (i > best) continue;
    hits[i] = scan_j(f, Is[i], w, d);
    if (hits[i]) best = std::min(best, i);
  }
  if (best == std::numeric_limits<long>::max()) return {};
  return *hits[best];
}

namespace serial {

CffVerdict verify_cff(const CoverFreeFamily& f, int r, int w, int d) {
  check_cff_params(f, r, w, d);
  for (const auto& I : all_combinations(f.size(), r))
    if (auto hit = scan_j(f, I, w, d)) return *hit;
  return {};
}

}  // namespace serial

// ---------------------------------------------------------------------------
// Exact N((r,w;d),t)

namespace {

inline constexpr int kMaxMinNBlocks = 12;

class ColumnSearch {
 public:
  ColumnSearch(int r, int w, int d, int t, const SearchBudget& budget) : d_(d), budget_(budget) {
    for (const auto& I : enumerate_ksubsets(t, r))
      for (const auto& J : subsets_of(I.complement(), w)) reqs_.push_back({I.bits(), J.bits()});
    const std::uint64_t ncols = std::uint64_t{1} << t;
    for (std::uint64_t c = 0; c < ncols; ++c) {
      std::vector<int> covered;
      for (int q = 0; q < static_cast<int>(reqs_.size()); ++q)
        if ((reqs_[q].in & ~c) == 0 && (reqs_[q].out & c) == 0) covered.push_back(q);
      if (covered.empty()) continue;
      cols_.push_back(c);
      covers_.push_back(std::move(covered));
    }
    last_col_.assign(reqs_.size(), -1);
    for (int k = 0; k < static_cast<int>(cols_.size()); ++k)
      for (int q : covers_[k]) last_col_[q] = k;
    suffix_gain_.assign(cols_.size() + 1, 0);
    for (int k = static_cast<int>(cols_.size()) - 1; k >= 0; --k)
      suffix_gain_[k] = std::max<int>(suffix_gain_[k + 1], static_cast<int>(covers_[k].size()));
  }

  int lower_bound() const {
    const long long total = static_cast<long long>(d_) * static_cast<long long>(reqs_.size());
    const long long g = suffix_gain_.empty() ? 1 : std::max(1, suffix_gain_[0]);
    return static_cast<int>(std::max<long long>(d_, (total + g - 1) / g));
  }

  /// Columns of a family with n points, or nullopt if none exists.
  std::optional<std::vector<std::uint64_t>> find(int n) {
    need_.assign(reqs_.size(), d_);
    deficit_ = static_cast<long long>(d_) * static_cast<long long>(reqs_.size());
    chosen_.clear();
    if (dfs(n, 0)) {
      std::vector<std::uint64_t> out;
      for (int k : chosen_) out.push_back(cols_[k]);
      return out;
    }
    return std::nullopt;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  struct Req {
    std::uint64_t in;
    std::uint64_t out;
  };

  bool dfs(int n, int start) {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetError("minimum cover-free family search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    if (deficit_ == 0) return true;
    const int remaining = n - static_cast<int>(chosen_.size());
    if (remaining <= 0) return false;
    if (suffix_gain_[start] * static_cast<long long>(remaining) < deficit_) return false;
    // the deficient requirement whose covering columns end earliest bounds
    // where the next column may come from
    int horizon = static_cast<int>(cols_.size()) - 1;
    for (int q = 0; q < static_cast<int>(reqs_.size()); ++q) {
      if (need_[q] == 0) continue;
      if (need_[q] > remaining || last_col_[q] < start) return false;
      horizon = std::min(horizon, last_col_[q]);
    }
    std::vector<int> touched;
    for (int k = start; k <= horizon; ++k) {
      touched.clear();
      for (int q : covers_[k])
        if (need_[q] > 0) {
          --need_[q];
          touched.push_back(q);
        }
      if (!touched.empty()) {
        deficit_ -= static_cast<long long>(touched.size());
        chosen_.push_back(k);
        if (dfs(n, d_ == 1 ? k + 1 : k)) return true;
        chosen_.pop_back();
        deficit_ += static_cast<long long>(touched.size());
        for (int q : touched) ++need_[q];
      }
    }
    return false;
  }

  int d_;
  const SearchBudget& budget_;
  std::vector<Req> reqs_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::vector<int>> covers_;
  std::vector<int> last_col_;
  std::vector<int> suffix_gain_;
  std::vector<int> need_;
  long long deficit_ = 0;
  std::vector<int> chosen_;
  std::int64_t nodes_ = 0;
};

}  // namespace

MinNResult exact_min_n(int r, int w, int d, int t, const SearchBudget& budget, bool cross_check) {
  if (r < 1 || w < 1 || d < 1) throw ParameterError("r, w, d must be >= 1");
  if (r + w > t) throw ParameterError("N((r,w;d),t) needs r + w <= t");
  if (t > kMaxMinNBlocks) throw BudgetError("minimum cover-free family search supports t <= 12");

  ColumnSearch search(r, w, d, t, budget);
  MinNResult result;
  for (int n = search.lower_bound();; ++n) {
    auto cols = search.find(n);
    if (!cols) continue;
    std::vector<BitVec> blocks(t, BitVec(n));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < t; ++i)
        if (((*cols)[k] >> i) & 1U) blocks[i].set(k);
    result.n = n;
    result.witness = CoverFreeFamily(n, std::move(blocks));
    break;
  }
  result.nodes = search.nodes();
  if (!verify_cff(result.witness, r, w, d).pass)
    throw std::logic_error("exact_min_n produced a family that fails verification");

  if (cross_check) {
    try {
      const LabeledGraph g = intersection_bigraph(t, r, w);
      result.bc_intersection = exact_bc(g, d, budget).size;
    } catch (const BudgetError& e) {
      result.cross_check_note = std::string("bc_d(I_t(r,w)) not computed: ") + e.what();
    }
  }
  return result;
}

}  // namespace framecover
