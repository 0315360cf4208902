#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridramsey/chromatic.hpp"
#include "gridramsey/coloring.hpp"

namespace gridramsey {

// A p-subset spanning fewer than q colors: the vertices (ascending) and the
// distinct color ids present on its fully colored edges (ascending).
struct PQViolation {
  std::vector<int> vertices;
  std::vector<int> colors;
};

// First alternating rectangle in lexicographic (i, j, i2, j2) scan order,
// or nullopt if the coloring is alternating-free.
std::optional<Rectangle> find_alternating_rectangle(const GridColoring& g);

// Checks that every p-subset spans >= q colors on its C(p,k) edges;
// p-subsets with absent edges are skipped (partial colorings). Returns the
// first violation in lexicographic subset order. threads > 1 splits the
// scan deterministically.
std::optional<PQViolation> verify_pq(const GraphColoring& c, int p, int q,
                                     int threads = 1);

// Sampled mode for verify_chromatic_pq: `count` seeded draws of
// (q-1)-subsets of the palette.
struct SampleMode {
  int64_t count;
  uint64_t seed;
};

// A (q-1)-subset X of the palette with chi(union of classes X) > p-1,
// plus the exact chromatic number of that union as proof.
struct ChromaticPQViolation {
  std::vector<int> colors;
  ChromaticResult proof;
};

// Checks chi(G_X) <= p-1 for every (q-1)-subset X of the palette
// (exhaustive in lexicographic order when sample is empty).
std::optional<ChromaticPQViolation> verify_chromatic_pq(
    const GraphColoring& c, int p, int q,
    std::optional<SampleMode> sample = std::nullopt, int threads = 1);

// Executes the column/row double pigeonhole on a grid whose palette has at
// most r colors (m >= r+1 rows, n >= r^C(r+1,2)+1 columns): finds two
// identically colored columns among the first r+1 rows, then two rows with
// equal connecting colors. The returned rectangle is re-verified.
Rectangle shelah_witness(const GridColoring& grid, int r);

// Witness from the nested pigeonhole step-down argument.
struct StepdownWitness {
  PQViolation violation;
  // True when q > C(p-1, k-1) so the tail of the recursion is the trivial
  // (p-1)-set rather than a recursive find.
  bool degenerate_tail = false;
};

// For an r-coloring of K_n^(k) with n >= the recursive pigeonhole bound,
// constructs p vertices spanning <= q-1 colors (vertex pigeonhole at k=1).
// The returned set is re-verified against c.
StepdownWitness stepdown_witness(const GraphColoring& c, int r, int p, int q);

// Required size n for stepdown_witness (the recursive pigeonhole bound).
int64_t stepdown_bound(int k, int r, int p, int q);

// Combined check for the slow chromatic growth property of mubayi-shaped
// colorings: for color subsets X (|X| >= 2; the bound is vacuous below
// that), chi(G_X) <= 2^(3*sqrt(|X| log2 |X|)), and every independent
// subset I of the auxiliary color graph on X has bipartite G_I.
// Exhaustive over |X| <= exhaustive_max, then `samples` seeded draws with
// |X| <= sample_max.
struct ChiSlowGrowViolation {
  enum class Kind { ChiBound, IndepNotBipartite } kind;
  std::vector<int> colors;       // the subset X
  std::vector<int> indep_set;    // offending I (IndepNotBipartite)
  int chi = 0;                   // offending chi (ChiBound)
  int64_t bound = 0;             // pinned floor of the bound for |X|
};

struct ChiSlowGrowReport {
  int64_t exhaustive_checked = 0;
  int64_t sampled_checked = 0;
  std::optional<ChiSlowGrowViolation> violation;
};

ChiSlowGrowReport verify_chi_slow_grow(const GraphColoring& c,
                                       int exhaustive_max, int64_t samples,
                                       int sample_max, uint64_t seed,
                                       int threads = 1);

// Pinned bound floor(2^(3*sqrt(x*log2(x)))) used above.
int64_t chi_slow_grow_bound(int x);

// Distinct colors present on the fully colored edges inside `verts`.
std::vector<int> distinct_colors_on(const GraphColoring& c,
                                    std::span<const int> verts);

}  // namespace gridramsey
