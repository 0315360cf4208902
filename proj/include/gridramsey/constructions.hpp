#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gridramsey/coloring.hpp"

namespace gridramsey {

// Thrown by grid_from_rows when some pair of row colorings has an agreement
// graph that cannot be properly colored with r colors (0-based row indices).
class ChromaticObstruction : public std::runtime_error {
 public:
  ChromaticObstruction(int i, int i2);
  int i, i2;
};

// Edge coloring of K_n by the index (1-based) of the first differing bit of
// the vertices' binary expansions (x-1, least significant bit first).
// Palette = ceil(log2 n) int colors (i); no monochromatic triangle, and the
// union of any d color classes has chromatic number <= 2^d.
GraphColoring binary_coloring(int n);

// Edge coloring of K_n from base-m digit expansions, m = 2^t with t minimal
// such that n <= 2^(t*t). Color of {x,y} = ({x_i,y_i}, a_1..a_t) where i is
// the first differing digit and a_j = [x_j != y_j]. Every 4 vertices span
// >= 3 colors, and any two color classes union to a 3-chromatic graph.
GraphColoring mubayi_coloring(int n);

// Partition of E(K_{N^t}) by (first differing coordinate, mubayi color of
// that coordinate pair); vertices are [N]^t in lexicographic order.
EdgePartition product_partition(int N, int t);

// Partition of E(K_n) with every edge in its own class.
EdgePartition singleton_partition(int n);

// Assembles an alternating-rectangle-free grid coloring from row colorings
// (shared table, each using <= r colors): for every row pair the agreement
// graph is properly colored with <= r colors and those vertex colors are
// written on the column edges. Throws ChromaticObstruction on failure.
GridColoring grid_from_rows(const std::vector<GraphColoring>& rows, int r);

// Row colorings of a grid, sharing its table.
std::vector<GraphColoring> rows_from_grid(const GridColoring& grid);

// Samples 2m row vectors in [r]^t (class -> color), deletes the lower row
// of each bad pair (chromatic test over the agreement class-union) in
// lexicographic pair order, and assembles the survivors if >= m remain.
std::optional<GridColoring> random_grid(const EdgePartition& p, int r, int m,
                                        uint64_t seed);

// All p^2 arithmetic sequences (a, a+b, ..., a+(p-1)b) over Z_p, indexed by
// a*p + b; any two agree in at most one coordinate. p must be prime.
std::vector<std::vector<int>> modular_sequences(int p);

// Alternating-free grid on floor(r^2/4) rows and 2^p columns, p the
// smallest prime in [ceil(r/2), r] with floor(r^2/4) <= 2^p: rows carry
// distinct modular sequences (row edge {j,j'} gets the sequence value at
// the first differing bit of j-1, j'-1), and each row-pair conflict graph
// is bipartite, so two dedicated colors suffice for all column edges.
GridColoring asymmetric_grid(int r);

// Square grid -> partial coloring of the 3-uniform hypergraph on 2n
// vertices (rows then columns): {i,j,j'} gets the row-edge color,
// {i,i',j} the column-edge color, palettes mapped to disjoint halves;
// one-sided triples stay absent.
GraphColoring grid_to_partite3(const GridColoring& grid);

// Inverse of grid_to_partite3 (expects exactly the two-sided triples).
GridColoring partite3_to_grid(const GraphColoring& h);

// Supplies an alternating-free grid on m rows and m columns.
using GridProvider = std::function<GridColoring(int)>;

// Default provider: random_grid over the binary_coloring classes of K_m
// with escalating r and reseeding until success.
GridProvider default_grid_provider(uint64_t seed);

// Recursive coloring of K_n^(3) (n a power of two) in which every 4
// vertices span >= 3 colors: rainbow base for n <= 4, halves recursively
// colored with a shared palette, cross triples colored by (palette-
// separated grid color, binary color of the majority-side pair). Provider
// grids are rejected if they contain an alternating rectangle.
GraphColoring f3_43_coloring(int n, const GridProvider& provider);

// Coloring of K_n^(3) (n = 2^d) in which every 5 vertices span >= 6
// colors: product of f3_43_coloring with the first coordinate where the
// three bit strings disagree, the minority bit, and the mubayi color of
// the majority pair.
GraphColoring f3_56_coloring(int n, const GridProvider& provider);

// Auxiliary graph on the color set X of a mubayi-shaped coloring:
// for iota(c) = first index with a_i = 1, colors c1, c2 with
// iota(c1) <= iota(c2) are adjacent iff a_{iota(c2)}(c1) = 1.
// Vertex i of the result corresponds to X[i].
SimpleGraph auxiliary_color_graph(const GraphColoring& c,
                                  std::span<const int> X);

// Uniform random r-coloring of K_n^(k) (colors are the ints 1..r).
GraphColoring random_coloring(int n, int k, int r, uint64_t seed);

// Uniform random r-coloring of the m x n grid (colors are the ints 1..r).
GridColoring random_grid_coloring(int m, int n, int r, uint64_t seed);

}  // namespace gridramsey
