#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridramsey/graph.hpp"

namespace gridramsey {

// Verdict of an exact chromatic number computation. Exactly one of:
//  - exact: chi and a proper chi-coloring, chi <= limit;
//  - exceeds: every coloring needs more than `limit` colors (search proof).
struct ChromaticResult {
  bool exact = false;
  int chi = 0;
  std::vector<int> coloring;  // when exact
  int limit = 0;              // echoed when exceeded
};

// Exact chromatic number via branch-and-bound: greedy-clique lower bound,
// DSATUR upper bound, then downward decision searches with the clique
// preassigned. node_cap guards pathological instances (throws on trip;
// never reached at the scales used here).
ChromaticResult chromatic_number(const SimpleGraph& g, int limit,
                                 int64_t node_cap = int64_t(4) << 40);

// Proper r-coloring (colors 0..r-1) or nullopt iff chi(g) > r.
// DSATUR greedy fast path, exact search fallback.
std::optional<std::vector<int>> proper_coloring(const SimpleGraph& g, int r);

// Greedy DSATUR coloring; returns (coloring, colors used). Deterministic.
std::pair<std::vector<int>, int> dsatur_coloring(const SimpleGraph& g);

// A clique of g: exact branch-and-bound up to node_cap, after which the
// best clique found so far is returned (still a valid lower-bound witness).
std::vector<int> max_clique(const SimpleGraph& g,
                            int64_t node_cap = 2'000'000);

}  // namespace gridramsey
