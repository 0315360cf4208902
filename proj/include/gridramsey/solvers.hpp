#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gridramsey/coloring.hpp"

namespace gridramsey {

struct SearchStats {
  int64_t nodes = 0;
  double elapsed_ms = 0;  // diagnostic only; never part of reports
};

// Outcome of a minimal-value search. Either decided (value, certificate for
// the witnessing side, exhausted = the search below/at the deciding bound
// ran to completion) or an interval [lo, hi] that survived the budget
// (hi = -1 when open above).
template <class Cert>
struct SearchResult {
  bool decided = false;
  int value = 0;
  int lo = 0, hi = -1;
  std::optional<Cert> certificate;
  bool exhausted = false;
  SearchStats stats;
};

struct SolveOptions {
  // Nodes (color assignments) explored per call; exact_G applies it to each
  // inner grid decision separately. stats.nodes accumulates across resumes.
  int64_t node_budget = 100'000'000;
  // When set: resume from this file if it exists (parameters must match);
  // write the frontier back on budget exhaustion and remove the file on
  // completion. Text format, round-trips byte-exactly.
  std::string checkpoint_path;
};

// Minimum r <= r_max admitting an alternating-rectangle-free r-coloring of
// the m x n grid. Certificate: such a coloring at the deciding r.
// Backtracking over edge colors (row edges row-major, then column edges
// column-major) with first-use color canonicalization; a column edge is
// never assigned the color that would complete an alternating rectangle.
SearchResult<GridColoring> exact_g(int m, int n, int r_max,
                                   const SolveOptions& opts = {});

// Minimum n <= n_max such that every r-coloring of the n x n grid has an
// alternating rectangle. Certificate: an alternating-free r-coloring of the
// (n-1) x (n-1) grid. Undecided sizes bracket with the pigeonhole upper
// bound r^C(r+1,2)+1.
SearchResult<GridColoring> exact_G(int r, int n_max,
                                   const SolveOptions& opts = {});

// Minimum r <= r_max admitting a coloring of K_n^(k) in which every
// p-subset spans >= q colors. Certificate: such a coloring.
SearchResult<GraphColoring> exact_f(int n, int p, int q, int k, int r_max,
                                    const SolveOptions& opts = {});

}  // namespace gridramsey
