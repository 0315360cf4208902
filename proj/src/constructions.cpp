#include "gridramsey/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "gridramsey/chromatic.hpp"
#include "gridramsey/rng.hpp"
#include "gridramsey/verifiers.hpp"

namespace gridramsey {

ChromaticObstruction::ChromaticObstruction(int i_, int i2_)
    : std::runtime_error("grid_from_rows: agreement graph of rows " +
                         std::to_string(i_ + 1) + "," +
                         std::to_string(i2_ + 1) +
                         " is not r-colorable"),
      i(i_),
      i2(i2_) {}

namespace {

int ceil_log2(int n) {
  int t = 0;
  while ((int64_t(1) << t) < n) ++t;
  return t;
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// Appends filler int colors so that ids 0..size-1 all exist.
void ensure_table_size(ColorTable& table, int size) {
  int probe = table.size() + 1;
  while (table.size() < size) {
    StructuredColor c;
    c.push_int(probe++);
    table.intern(c);  // no-op when the value already exists; probe advances
  }
}

}  // namespace

GraphColoring binary_coloring(int n) {
  if (n < 1) throw std::invalid_argument("binary_coloring: n < 1");
  const int t = ceil_log2(n);
  auto table = make_table();
  for (int i = 1; i <= t; ++i) table->intern(StructuredColor::ints({i}));
  GraphColoring c(n, 2, table);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      c.set_edge_color(x, y, __builtin_ctz(unsigned(x ^ y)));
  return c;
}

GraphColoring mubayi_coloring(int n) {
  if (n < 1) throw std::invalid_argument("mubayi_coloring: n < 1");
  int t = 1;
  while ((int64_t(1) << (int64_t(t) * t)) < n) ++t;
  const int m = 1 << t;
  auto table = make_table();
  GraphColoring c(n, 2, table);
  std::vector<int> dx(static_cast<size_t>(t)), dy(static_cast<size_t>(t));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      for (int i = 0; i < t; ++i) {
        dx[size_t(i)] = (x >> (i * t)) % m;
        dy[size_t(i)] = (y >> (i * t)) % m;
      }
      int first = -1;
      for (int i = 0; i < t; ++i)
        if (dx[size_t(i)] != dy[size_t(i)]) {
          first = i;
          break;
        }
      StructuredColor sc;
      sc.push_set(dx[size_t(first)], dy[size_t(first)]);
      for (int i = 0; i < t; ++i)
        sc.push_int(dx[size_t(i)] != dy[size_t(i)] ? 1 : 0);
      c.set_edge_color(x, y, table->intern(sc));
    }
  return c;
}

EdgePartition product_partition(int N, int t) {
  if (N < 2 || t < 1) throw std::invalid_argument("product_partition: bad N/t");
  int64_t n64 = 1;
  for (int i = 0; i < t; ++i) {
    n64 *= N;
    if (n64 > (int64_t(1) << 20))
      throw std::invalid_argument("product_partition: N^t too large");
  }
  const int n = int(n64);
  GraphColoring cm = mubayi_coloring(N);

  // Vertex x <-> tuple (v_1..v_t) in lexicographic order: coordinate 1 is
  // the most significant position, so the minimum differing index is the
  // most significant difference.
  std::vector<int64_t> pow(static_cast<size_t>(t) + 1, 1);
  for (int i = 1; i <= t; ++i) pow[size_t(i)] = pow[size_t(i - 1)] * N;
  auto digit = [&](int x, int i) {  // i in 1..t
    return int((x / pow[size_t(t - i)]) % N);
  };

  std::vector<int32_t> label(size_t(binom(n, 2)));
  std::map<std::pair<int, int>, int> classes;  // (i, mubayi id) -> class
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int first = 0;
      for (int i = 1; i <= t; ++i)
        if (digit(x, i) != digit(y, i)) {
          first = i;
          break;
        }
      int id = cm.edge_color(digit(x, first), digit(y, first));
      auto [it, fresh] =
          classes.emplace(std::make_pair(first, id), int(classes.size()));
      (void)fresh;
      label[size_t(pair_rank(x, y))] = it->second;
    }
  EdgePartition p(n, int(classes.size()));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      p.set_class(x, y, label[size_t(pair_rank(x, y))]);
  return p;
}

EdgePartition singleton_partition(int n) {
  EdgePartition p(n, int(binom(n, 2)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      p.set_class(u, v, int(pair_rank(u, v)));
  return p;
}

GridColoring grid_from_rows(const std::vector<GraphColoring>& rows, int r) {
  if (rows.empty()) throw std::invalid_argument("grid_from_rows: no rows");
  if (r < 1) throw std::invalid_argument("grid_from_rows: r < 1");
  const int m = int(rows.size());
  const int n = rows[0].n();
  const ColorTablePtr table = rows[0].table();
  for (const GraphColoring& c : rows) {
    if (c.k() != 2 || c.n() != n)
      throw std::invalid_argument("grid_from_rows: row shape mismatch");
    if (c.table() != table)
      throw std::invalid_argument("grid_from_rows: rows must share a table");
    if (!c.total())
      throw std::invalid_argument("grid_from_rows: partial row coloring");
    for (int id : c.used_colors())
      if (id >= r)
        throw std::invalid_argument(
            "grid_from_rows: row color id outside the r-color palette");
  }

  // Column colors are vertex colors of the pairwise agreement graphs; the
  // ids live in the same first-r slots of the shared table.
  std::vector<std::vector<int>> colcol(size_t(binom(m, 2)));
  int max_col_color = -1;
  for (int i = 0; i < m; ++i)
    for (int i2 = i + 1; i2 < m; ++i2) {
      SimpleGraph h = agreement_graph(rows[size_t(i)], rows[size_t(i2)]);
      auto pc = proper_coloring(h, r);
      if (!pc) throw ChromaticObstruction(i, i2);
      for (int c : *pc) max_col_color = std::max(max_col_color, c);
      colcol[size_t(pair_rank(i, i2))] = std::move(*pc);
    }
  ensure_table_size(*table, max_col_color + 1);

  GridColoring g(m, n, table);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2)
        g.set_row_color(i, j, j2, rows[size_t(i)].edge_color(j, j2));
  for (int i = 0; i < m; ++i)
    for (int i2 = i + 1; i2 < m; ++i2)
      for (int j = 0; j < n; ++j)
        g.set_col_color(i, i2, j, colcol[size_t(pair_rank(i, i2))][size_t(j)]);
  return g;
}

std::vector<GraphColoring> rows_from_grid(const GridColoring& grid) {
  std::vector<GraphColoring> rows;
  rows.reserve(static_cast<size_t>(grid.rows()));
  for (int i = 0; i < grid.rows(); ++i) {
    GraphColoring c(grid.cols(), 2, grid.table());
    for (int j = 0; j < grid.cols(); ++j)
      for (int j2 = j + 1; j2 < grid.cols(); ++j2)
        c.set_edge_color(j, j2, grid.row_color(i, j, j2));
    rows.push_back(std::move(c));
  }
  return rows;
}

std::optional<GridColoring> random_grid(const EdgePartition& p, int r, int m,
                                        uint64_t seed) {
  if (r < 1 || m < 1) throw std::invalid_argument("random_grid: bad r or m");
  const int t = p.class_count();
  const int total = 2 * m;
  SplitRng rng = SplitRng(seed).split(0x67726964);  // independent stream

  std::vector<std::vector<int>> vec(static_cast<size_t>(total), std::vector<int>(static_cast<size_t>(t)));
  for (int i = 0; i < total; ++i)
    for (int t2 = 0; t2 < t; ++t2)
      vec[size_t(i)][size_t(t2)] = int(rng.next_below(uint64_t(r)));

  std::vector<char> alive(static_cast<size_t>(total), 1);
  std::vector<int> agree;
  for (int i = 0; i < total; ++i) {
    if (!alive[size_t(i)]) continue;
    for (int j = i + 1; j < total; ++j) {
      if (!alive[size_t(i)]) break;
      if (!alive[size_t(j)]) continue;
      agree.clear();
      for (int t2 = 0; t2 < t; ++t2)
        if (vec[size_t(i)][size_t(t2)] == vec[size_t(j)][size_t(t2)])
          agree.push_back(t2);
      SimpleGraph gI = union_subgraph(p, agree);
      if (!proper_coloring(gI, r)) alive[size_t(i)] = 0;  // drop lower row
    }
  }

  std::vector<int> survivors;
  for (int i = 0; i < total; ++i)
    if (alive[size_t(i)]) survivors.push_back(i);
  if (int(survivors.size()) < m) return std::nullopt;

  auto table = make_table();
  for (int c = 1; c <= r; ++c) table->intern(StructuredColor::ints({c}));
  std::vector<GraphColoring> rows;
  rows.reserve(survivors.size());
  for (int i : survivors) {
    GraphColoring c(p.n(), 2, table);
    for (int u = 0; u < p.n(); ++u)
      for (int v = u + 1; v < p.n(); ++v)
        c.set_edge_color(u, v, vec[size_t(i)][size_t(p.class_of(u, v))]);
    rows.push_back(std::move(c));
  }
  return grid_from_rows(rows, r);
}

std::vector<std::vector<int>> modular_sequences(int p) {
  if (p < 2) throw std::invalid_argument("modular_sequences: p < 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("modular_sequences: p not prime");
  std::vector<std::vector<int>> seqs(static_cast<size_t>(p) * size_t(p),
                                     std::vector<int>(static_cast<size_t>(p)));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int i = 0; i < p; ++i)
        seqs[size_t(a) * size_t(p) + size_t(b)][size_t(i)] =
            int((int64_t(a) + int64_t(i) * b) % p);
  return seqs;
}

GridColoring asymmetric_grid(int r) {
  if (r < 4) throw std::invalid_argument("asymmetric_grid: r < 4");
  const int m = (r * r) / 4;
  int prime = -1;
  for (int q = (r + 1) / 2; q <= r; ++q) {
    bool is_prime = q >= 2;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) is_prime = false;
    if (!is_prime) continue;
    if (q >= 60 || (int64_t(1) << q) >= m) {
      prime = q;
      break;
    }
  }
  if (prime == -1)
    throw std::invalid_argument("asymmetric_grid: no admissible prime");
  if (prime > 13)
    throw std::invalid_argument("asymmetric_grid: 2^p columns too large");
  const int n = 1 << prime;

  auto seqs = modular_sequences(prime);  // take the first m, all distinct
  auto table = make_table();
  for (int v = 1; v <= prime; ++v) table->intern(StructuredColor::ints({v}));
  const int side0 = table->intern(StructuredColor::ints({r + 1}));
  const int side1 = table->intern(StructuredColor::ints({r + 2}));

  GridColoring g(m, n, table);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2) {
        int bit = __builtin_ctz(unsigned(j ^ j2));
        g.set_row_color(i, j, j2, seqs[size_t(i)][size_t(bit)]);
      }

  for (int i = 0; i < m; ++i)
    for (int i2 = i + 1; i2 < m; ++i2) {
      // Sequences agree in at most one coordinate; only edges whose first
      // differing bit is that coordinate conflict, and they span a
      // bipartite graph.
      int k = -1;
      for (int c = 0; c < prime; ++c)
        if (seqs[size_t(i)][size_t(c)] == seqs[size_t(i2)][size_t(c)]) {
          k = c;
          break;
        }
      SimpleGraph h(n);
      if (k != -1)
        for (int j = 0; j < n; ++j)
          for (int j2 = j + 1; j2 < n; ++j2)
            if (__builtin_ctz(unsigned(j ^ j2)) == k) h.add_edge(j, j2);
      BipartiteResult bp = is_bipartite(h);
      if (!bp.bipartite())
        throw std::logic_error("asymmetric_grid: conflict graph not bipartite");
      for (int j = 0; j < n; ++j)
        g.set_col_color(i, i2, j,
                        (*bp.two_coloring)[size_t(j)] == 0 ? side0 : side1);
    }
  return g;
}

GraphColoring grid_to_partite3(const GridColoring& grid) {
  if (grid.rows() != grid.cols())
    throw std::invalid_argument("grid_to_partite3: grid not square");
  const int n = grid.rows();
  auto table = make_table();
  GraphColoring h(2 * n, 3, table);
  // Side tag (1 = row, 2 = column) followed by the original color's parts,
  // so the inverse can recover the grid colors exactly.
  auto tagged = [&](int side, int id) {
    const StructuredColor& orig = grid.table()->at(id);
    StructuredColor c;
    c.push_int(side);
    for (int idx = 0; idx < orig.arity(); ++idx) {
      if (orig.is_set(idx))
        c.push_set(orig.set_lo(idx), orig.set_hi(idx));
      else
        c.push_int(orig.int_at(idx));
    }
    return table->intern(c);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2) {
        std::array<int, 3> e{i, n + j, n + j2};
        h.set_color(e, tagged(1, grid.row_color(i, j, j2)));
      }
  for (int i = 0; i < n; ++i)
    for (int i2 = i + 1; i2 < n; ++i2)
      for (int j = 0; j < n; ++j) {
        std::array<int, 3> e{i, i2, n + j};
        h.set_color(e, tagged(2, grid.col_color(i, i2, j)));
      }
  return h;
}

GridColoring partite3_to_grid(const GraphColoring& h) {
  if (h.k() != 3) throw std::invalid_argument("partite3_to_grid: k != 3");
  if (h.n() % 2 != 0 || h.n() < 2)
    throw std::invalid_argument("partite3_to_grid: odd vertex count");
  const int n = h.n() / 2;
  auto in_a = [&](int v) { return v < n; };
  std::vector<int> verts = first_subset(3);
  if (h.n() >= 3) do {
    int a = int(in_a(verts[0])) + int(in_a(verts[1])) + int(in_a(verts[2]));
    bool colored = h.has_color(verts);
    if ((a == 0 || a == 3) && colored)
      throw std::runtime_error("partite3_to_grid: one-sided triple colored");
    if ((a == 1 || a == 2) && !colored)
      throw std::runtime_error("partite3_to_grid: two-sided triple absent");
  } while (next_subset_lex(verts, 2 * n));

  auto table = make_table();
  GridColoring g(n, n, table);
  // Expect a side tag (1 = row, 2 = col) matching the triple's shape; strip
  // it and intern the remaining parts in scan order.
  auto untagged = [&](std::span<const int> e, int side) {
    const StructuredColor& c = h.table()->at(h.color_of(e));
    if (c.arity() < 2 || c.is_set(0) || c.int_at(0) != side)
      throw std::runtime_error("partite3_to_grid: side tag mismatch");
    StructuredColor orig;
    for (int idx = 1; idx < c.arity(); ++idx) {
      if (c.is_set(idx))
        orig.push_set(c.set_lo(idx), c.set_hi(idx));
      else
        orig.push_int(c.int_at(idx));
    }
    return table->intern(orig);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2) {
        std::array<int, 3> e{i, n + j, n + j2};
        g.set_row_color(i, j, j2, untagged(e, 1));
      }
  for (int i = 0; i < n; ++i)
    for (int i2 = i + 1; i2 < n; ++i2)
      for (int j = 0; j < n; ++j) {
        std::array<int, 3> e{i, i2, n + j};
        g.set_col_color(i, i2, j, untagged(e, 2));
      }
  return g;
}

GridProvider default_grid_provider(uint64_t seed) {
  return [seed](int m) -> GridColoring {
    if (m < 1) throw std::invalid_argument("grid provider: m < 1");
    if (m == 1) return GridColoring(1, 1, make_table());
    EdgePartition p = partition_from_coloring(binary_coloring(m));
    for (int r = 2; r <= p.class_count() + 40; ++r)
      for (int attempt = 0; attempt < 16; ++attempt) {
        uint64_t sub = SplitRng(seed)
                           .split(uint64_t(m) * 1000003u +
                                  uint64_t(r) * 1009u + uint64_t(attempt))
                           .next();
        if (auto g = random_grid(p, r, m, sub)) return g->restrict_rows(m);
      }
    throw std::runtime_error("grid provider: escalation exhausted");
  };
}

namespace {

// Shared-palette recursive build for f3_43_coloring.
GraphColoring f3_43_build(int n, const GridProvider& provider,
                          const ColorTablePtr& table) {
  if (n <= 4) {
    GraphColoring c(n, 3, table);
    std::vector<int> verts = first_subset(3);
    if (n >= 3) do {
        c.set_color(verts, table->intern(StructuredColor::ints(
                               {0, int(subset_rank_colex(verts)) + 1})));
      } while (next_subset_lex(verts, n));
    return c;
  }
  const int m = n / 2;
  GraphColoring sub = f3_43_build(m, provider, table);
  GridColoring grid = provider(m);
  if (grid.rows() != m || grid.cols() != m)
    throw std::invalid_argument("f3_43_coloring: provider grid has wrong size");
  if (auto rect = find_alternating_rectangle(grid))
    throw std::invalid_argument(
        "f3_43_coloring: provider grid has an alternating rectangle at rows " +
        std::to_string(rect->i + 1) + "," + std::to_string(rect->i2 + 1) +
        " cols " + std::to_string(rect->j + 1) + "," +
        std::to_string(rect->j2 + 1));
  GraphColoring cb = binary_coloring(m);

  GraphColoring c(n, 3, table);
  std::vector<int> verts = first_subset(3);
  do {
    const int a = verts[0], b = verts[1], d = verts[2];
    int in_a = int(a < m) + int(b < m) + int(d < m);
    int id;
    if (in_a == 3) {
      std::array<int, 3> e{a, b, d};
      id = sub.color_of(e);
    } else if (in_a == 0) {
      std::array<int, 3> e{a - m, b - m, d - m};
      id = sub.color_of(e);
    } else if (in_a == 1) {
      // one row vertex, two columns: row edge of the grid
      int g = grid.row_color(a, b - m, d - m);
      int cbid = cb.edge_color(b - m, d - m);
      id = table->intern(StructuredColor::ints({n, 1, g + 1, cbid + 1}));
    } else {
      // two row vertices, one column: column edge of the grid
      int g = grid.col_color(a, b, d - m);
      int cbid = cb.edge_color(a, b);
      id = table->intern(StructuredColor::ints({n, 2, g + 1, cbid + 1}));
    }
    std::array<int, 3> e{a, b, d};
    c.set_color(e, id);
  } while (next_subset_lex(verts, n));
  return c;
}

}  // namespace

GraphColoring f3_43_coloring(int n, const GridProvider& provider) {
  if (!is_power_of_two(n) || n < 2)
    throw std::invalid_argument("f3_43_coloring: n must be a power of two");
  return f3_43_build(n, provider, make_table());
}

GraphColoring f3_56_coloring(int n, const GridProvider& provider) {
  if (!is_power_of_two(n) || n < 4)
    throw std::invalid_argument("f3_56_coloring: n must be a power of two, >= 4");
  const int d = ceil_log2(n);
  GraphColoring c1 = f3_43_coloring(n, provider);
  GraphColoring c4m = mubayi_coloring(n);
  auto table = make_table();
  GraphColoring c(n, 3, table);
  std::vector<int> verts = first_subset(3);
  do {
    const int u = verts[0], v = verts[1], w = verts[2];
    int c2 = 0;
    for (int i = 1; i <= d; ++i) {
      int bu = (u >> (i - 1)) & 1, bv = (v >> (i - 1)) & 1,
          bw = (w >> (i - 1)) & 1;
      if (bu != bv || bv != bw) {
        c2 = i;
        break;
      }
    }
    int bu = (u >> (c2 - 1)) & 1, bv = (v >> (c2 - 1)) & 1,
        bw = (w >> (c2 - 1)) & 1;
    int minority_bit = (bu + bv + bw >= 2) ? 0 : 1;
    int p1, p2;  // majority pair
    if (bu == minority_bit) {
      p1 = v;
      p2 = w;
    } else if (bv == minority_bit) {
      p1 = u;
      p2 = w;
    } else {
      p1 = u;
      p2 = v;
    }
    std::array<int, 3> e{u, v, w};
    StructuredColor sc = StructuredColor::ints(
        {c1.color_of(e) + 1, c2, minority_bit, c4m.edge_color(p1, p2) + 1});
    c.set_color(e, table->intern(sc));
  } while (next_subset_lex(verts, n));
  return c;
}

SimpleGraph auxiliary_color_graph(const GraphColoring& c,
                                  std::span<const int> X) {
  const ColorTable& table = *c.table();
  const int sz = int(X.size());
  int arity = -1;
  std::vector<int> iota(static_cast<size_t>(sz));
  std::vector<std::vector<int>> a(static_cast<size_t>(sz));
  for (int idx = 0; idx < sz; ++idx) {
    int id = X[size_t(idx)];
    if (id < 0 || id >= table.size())
      throw std::invalid_argument("auxiliary_color_graph: bad color id");
    for (int prev = 0; prev < idx; ++prev)
      if (X[size_t(prev)] == id)
        throw std::invalid_argument("auxiliary_color_graph: duplicate color");
    const StructuredColor& sc = table.at(id);
    if (sc.arity() < 2 || !sc.is_set(0) || sc.set_lo(0) >= sc.set_hi(0))
      throw std::invalid_argument(
          "auxiliary_color_graph: color lacks the digit-pair component");
    if (arity == -1) arity = sc.arity();
    if (sc.arity() != arity)
      throw std::invalid_argument("auxiliary_color_graph: mixed arities");
    iota[size_t(idx)] = -1;
    for (int j = 1; j < arity; ++j) {
      if (sc.is_set(j) || (sc.int_at(j) != 0 && sc.int_at(j) != 1))
        throw std::invalid_argument(
            "auxiliary_color_graph: indicator component not 0/1");
      a[size_t(idx)].push_back(sc.int_at(j));
      if (sc.int_at(j) == 1 && iota[size_t(idx)] == -1)
        iota[size_t(idx)] = j;  // 1-based among indicators
    }
    if (iota[size_t(idx)] == -1)
      throw std::invalid_argument(
          "auxiliary_color_graph: all-zero indicator vector");
  }
  SimpleGraph g(sz);
  for (int x = 0; x < sz; ++x)
    for (int y = x + 1; y < sz; ++y) {
      int lo = x, hi = y;
      if (iota[size_t(lo)] > iota[size_t(hi)]) std::swap(lo, hi);
      if (a[size_t(lo)][size_t(iota[size_t(hi)] - 1)] == 1) g.add_edge(x, y);
    }
  return g;
}

GraphColoring random_coloring(int n, int k, int r, uint64_t seed) {
  if (r < 1) throw std::invalid_argument("random_coloring: r < 1");
  auto table = make_table();
  for (int c = 1; c <= r; ++c) table->intern(StructuredColor::ints({c}));
  GraphColoring col(n, k, table);
  SplitRng rng = SplitRng(seed).split(0x636f6c);
  for (int64_t rank = 0; rank < col.entry_count(); ++rank)
    col.set_raw(rank, int(rng.next_below(uint64_t(r))));
  return col;
}

GridColoring random_grid_coloring(int m, int n, int r, uint64_t seed) {
  if (r < 1) throw std::invalid_argument("random_grid_coloring: r < 1");
  auto table = make_table();
  for (int c = 1; c <= r; ++c) table->intern(StructuredColor::ints({c}));
  GridColoring g(m, n, table);
  SplitRng rng = SplitRng(seed).split(0x6772636f);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = j + 1; j2 < n; ++j2)
        g.set_row_color(i, j, j2, int(rng.next_below(uint64_t(r))));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int i2 = i + 1; i2 < m; ++i2)
        g.set_col_color(i, i2, j, int(rng.next_below(uint64_t(r))));
  return g;
}

}  // namespace gridramsey
