#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridramsey/bitset.hpp"

namespace gridramsey {

// Undirected simple graph; vertices 0-based. Adjacency stored as bit rows,
// so unions, saturation updates and clique bounds are word operations.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  // Adds u-v (dedup, u != v). Returns true if the edge was new.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }

  const DynBitset& row(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  // In-place union with another graph on the same vertex set.
  void merge(const SimpleGraph& o);

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<DynBitset> adj_;
};

// Rectangle in a grid: rows i < i2, columns j < j2 (0-based internally;
// reports and files are 1-based).
struct Rectangle {
  int i, i2, j, j2;
  bool operator==(const Rectangle& o) const {
    return i == o.i && i2 == o.i2 && j == o.j && j2 == o.j2;
  }
};

// Result of a bipartiteness test: exactly one of the two members is
// populated. The odd cycle lists distinct vertices of an odd closed walk.
struct BipartiteResult {
  std::optional<std::vector<int>> two_coloring;
  std::vector<int> odd_cycle;
  bool bipartite() const { return two_coloring.has_value(); }
};

BipartiteResult is_bipartite(const SimpleGraph& g);

}  // namespace gridramsey
