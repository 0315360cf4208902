#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridramsey/colors.hpp"
#include "gridramsey/combinatorics.hpp"
#include "gridramsey/graph.hpp"

namespace gridramsey {

constexpr int kNoColor = -1;  // absent marker for partial colorings

// Coloring of the complete k-uniform hypergraph on n vertices (k = 2 for
// graphs, k = 1 for vertex colorings). Entries indexed by colex rank of the
// sorted k-subset; kNoColor marks absent edges (partial colorings appear
// only for the two-sided hypergraph images of grids).
class GraphColoring {
 public:
  GraphColoring() = default;
  GraphColoring(int n, int k, ColorTablePtr table);

  int n() const { return n_; }
  int k() const { return k_; }
  const ColorTablePtr& table() const { return table_; }

  int color_of(std::span<const int> verts) const;
  bool has_color(std::span<const int> verts) const;
  void set_color(std::span<const int> verts, int color_id);

  // k = 2 conveniences.
  int edge_color(int u, int v) const;
  void set_edge_color(int u, int v, int color_id);

  int64_t entry_count() const { return int64_t(color_.size()); }
  int raw_at(int64_t rank) const { return color_[size_t(rank)]; }
  void set_raw(int64_t rank, int color_id) { color_[size_t(rank)] = color_id; }

  bool total() const;
  // Distinct color ids actually used (absent entries ignored), ascending.
  std::vector<int> used_colors() const;

 private:
  int n_ = 0, k_ = 0;
  ColorTablePtr table_;
  std::vector<int32_t> color_;
};

// Edge coloring of the grid graph K_m x K_n: one color per row edge
// (i, {j,j'}) and per column edge ({i,i'}, j).
class GridColoring {
 public:
  GridColoring() = default;
  GridColoring(int rows, int cols, ColorTablePtr table);

  int rows() const { return m_; }
  int cols() const { return n_; }
  const ColorTablePtr& table() const { return table_; }

  int row_color(int i, int j, int j2) const;
  void set_row_color(int i, int j, int j2, int color_id);
  int col_color(int i, int i2, int j) const;
  void set_col_color(int i, int i2, int j, int color_id);

  std::vector<int> used_row_colors() const;
  std::vector<int> used_col_colors() const;
  std::vector<int> used_colors() const;

  // Grid on the first `rows` rows with the same table.
  GridColoring restrict_rows(int rows) const;

 private:
  int m_ = 0, n_ = 0;
  ColorTablePtr table_;
  std::vector<int32_t> row_color_;  // i * C(n,2) + pair_rank(j, j2)
  std::vector<int32_t> col_color_;  // pair_rank(i, i2) * n + j
};

// Partition of E(K_n) into classes 1..t (stored 0-based).
class EdgePartition {
 public:
  EdgePartition() = default;
  EdgePartition(int n, int t);

  int n() const { return n_; }
  int class_count() const { return t_; }
  int class_of(int u, int v) const;
  void set_class(int u, int v, int cls);

 private:
  int n_ = 0, t_ = 0;
  std::vector<int32_t> cls_;
};

// Union of the partition classes listed in I (0-based class indices).
SimpleGraph union_subgraph(const EdgePartition& p, std::span<const int> I);

// Graph on [n] whose edges are those where c1 and c2 agree. Colors are
// compared by structured value; with a shared table that reduces to id
// equality. Preconditions: both total, k = 2, equal n.
SimpleGraph agreement_graph(const GraphColoring& c1, const GraphColoring& c2);

// Classes of a total k=2 coloring as an EdgePartition (class = color id).
EdgePartition partition_from_coloring(const GraphColoring& c);

}  // namespace gridramsey
