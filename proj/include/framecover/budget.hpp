#pragma once

#include <cstdint>
#include <string>

namespace framecover {

/// Limits for the exact searches. Searches refuse inputs above the size
/// limits and abort once they expand more than max_nodes search nodes.
struct SearchBudget {
  int max_vertices = 64;
  int max_edges = 40;
  std::int64_t max_nodes = 50'000'000;

  /// Defaults overridden by FRAMECOVER_BUDGET. Accepts a bare integer (edge
  /// limit) or a comma list such as "edges=80,nodes=1000000,vertices=64".
  static SearchBudget from_env();
  static SearchBudget parse(const std::string& text);
  static SearchBudget parse(const std::string& text, SearchBudget base);
};

}  // namespace framecover
