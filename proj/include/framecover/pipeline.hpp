#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "framecover/budget.hpp"
#include "framecover/code.hpp"
#include "framecover/cover.hpp"
#include "framecover/graph.hpp"

namespace framecover::pipeline {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Options {
  bool quick = false;  // only the first four checks
  /// Replaces the code derived from the Petersen cover in the first check.
  std::optional<BinaryCode> code_fixture;
  SearchBudget budget;
};

struct Check {
  std::string name;
  double limit_seconds;
  std::function<CheckResult(const Options&)> run;
};

/// The end-to-end reproduction checks, in order.
std::vector<Check> checks();

/// Runs the checks; stops after the first failure when fail_fast is set.
/// on_result is called after each check.
std::vector<CheckResult> run(const Options& opts, bool fail_fast,
                             const std::function<void(const CheckResult&)>& on_result = {});

/// ((t - r) / r) * C(t-1, r-1), exact.
long long kneser_covering_formula(int t, int r);

/// One star ({v}, N(v)) per vertex of a vertex cover; a 1-cover of g.
BicliqueCover star_cover(const LabeledGraph& g, const std::vector<int>& vertex_cover);

}  // namespace framecover::pipeline
