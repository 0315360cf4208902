#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gridramsey {

// C(n, k) with saturation at a large sentinel to keep comparisons safe.
// Values used for subset ranks always fit comfortably in int64.
int64_t binom(int n, int k);

// Colex rank of a sorted k-subset of {0..n-1}: sum of C(v_i, i+1).
// Subsets enumerated in increasing rank give colex order; this is the
// storage layout for hypergraph edge colorings.
int64_t subset_rank_colex(std::span<const int> verts);

// Inverse of subset_rank_colex for given k.
std::vector<int> subset_unrank_colex(int64_t rank, int k);

// Rank of a pair u<v inside {0..n-1} in colex order: C(v,2)+u.
inline int64_t pair_rank(int u, int v) {
  return int64_t(v) * (v - 1) / 2 + u;
}

// Advance a sorted k-subset of {0..n-1} in lexicographic order
// ((0,1,2) -> (0,1,3) -> ... -> (n-k..n-1)). Returns false when done.
bool next_subset_lex(std::vector<int>& v, int n);

// First k-subset in lexicographic order: (0,1,...,k-1).
std::vector<int> first_subset(int k);

}  // namespace gridramsey
