#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framecover/budget.hpp"
#include "framecover/cover.hpp"
#include "framecover/graph.hpp"

namespace framecover {

/// Identifies the random stream construction so runs can be reproduced:
/// trial k draws from mt19937_64 seeded with splitmix64(seed + golden*(k+1)),
/// and a biclique is kept when (draw >> 11) * 2^-53 < p.
inline constexpr const char* kRngId = "mt19937_64/splitmix64-trial-stream/u53-bernoulli";

/// The ceil(t/2)-subsets A of [t], each as the ground pair (A, A^c, r).
std::vector<GroundPairBiclique> halving_pool(int t, int r);

struct SfpcBound {
  double value = 0;            // C(t,h) / beta * (1 + ln alpha), h = ceil(t/2)
  long long floor_value = 0;
  std::uint64_t pool_size = 0; // C(t, h)
  std::uint64_t alpha = 0;     // C(h, r) * C(t-h, r)
  std::uint64_t beta = 0;      // 2 * C(t-2r, h-r)
  double p = 0;                // ln(alpha) / beta, unclamped
  /// False at the boundary t = 2r and whenever p falls outside [0, 1].
  bool valid = false;
  std::string note;
};

/// Upper bound on the length of an r-SFPC with t codewords from the
/// randomized halving construction. Requires t >= 2r.
SfpcBound sfpc_bound(int t, int r);

struct RandomTrialConfig {
  std::uint64_t seed = 1;
  int trials = 1;
  std::optional<double> p_override;
};

struct RandomCoverResult {
  BicliqueCover best;
  int best_trial = 0;
  std::vector<int> sizes;  // per trial, trial order
  double p = 0;            // probability used, after clamping
  double p_formula = 0;
  bool clamped = false;
  std::string rng = kRngId;
};

/// Picks each halving-pool biclique independently with probability p, then
/// adds every still-uncovered edge as a single-edge biclique. Every trial's
/// cover is verified; the smallest (earliest on ties) is returned. Trials run
/// in parallel with per-trial streams, so results do not depend on threads.
RandomCoverResult random_cover(int t, int r, const RandomTrialConfig& cfg);

namespace serial {
RandomCoverResult random_cover(int t, int r, const RandomTrialConfig& cfg);
}  // namespace serial

/// Deterministic baseline: take the pool biclique covering the most uncovered
/// edges while that gains more than one edge, then single edges. Verified.
BicliqueCover greedy_cover(int t, int r);

/// Maximal bicliques with both sides nonempty, each once up to side swap.
std::vector<Biclique> maximal_bicliques(const LabeledGraph& g, const SearchBudget& budget = {});

struct ExactBcResult {
  int size = 0;
  BicliqueCover witness;
  std::int64_t nodes = 0;
  long long lower_bound = 0;  // bc_lower_bound at the root
};

/// bc_d(g) by branch and bound over multisets of maximal bicliques, with the
/// edge-density bound and per-edge deficit pruning. Deterministic. Refuses
/// graphs above the budget's edge or vertex limits and aborts with the best
/// upper bound past its node limit (BudgetError).
ExactBcResult exact_bc(const LabeledGraph& g, int d, const SearchBudget& budget = {});

}  // namespace framecover
