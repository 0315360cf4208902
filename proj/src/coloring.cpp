#include "gridramsey/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gridramsey {

// ---- combinatorics helpers ----

namespace {
constexpr int kBinomMaxN = 1100;
constexpr int kBinomMaxK = 9;

const int64_t* binom_table() {
  static const std::vector<int64_t> table = [] {
    std::vector<int64_t> t(static_cast<size_t>(kBinomMaxN) * kBinomMaxK, 0);
    for (int n = 0; n < kBinomMaxN; ++n) {
      t[size_t(n) * kBinomMaxK] = 1;
      for (int k = 1; k < kBinomMaxK; ++k) {
        int64_t v = 0;
        if (n > 0) {
          v = t[size_t(n - 1) * kBinomMaxK + k] +
              t[size_t(n - 1) * kBinomMaxK + (k - 1)];
        }
        t[size_t(n) * kBinomMaxK + k] = v;
      }
    }
    return t;
  }();
  return table.data();
}
}  // namespace

int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n < kBinomMaxN && k < kBinomMaxK)
    return binom_table()[size_t(n) * kBinomMaxK + k];
  // Fallback for large arguments (bounds only; saturating).
  long double acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  const long double cap = 9.0e18L;
  return acc > cap ? int64_t(9e18) : int64_t(acc + 0.5L);
}

int64_t subset_rank_colex(std::span<const int> verts) {
  int64_t r = 0;
  for (size_t i = 0; i < verts.size(); ++i) r += binom(verts[i], int(i) + 1);
  return r;
}

std::vector<int> subset_unrank_colex(int64_t rank, int k) {
  std::vector<int> out(static_cast<size_t>(k));
  for (int i = k; i >= 1; --i) {
    // Largest v with C(v, i) <= rank.
    int v = i - 1;
    while (binom(v + 1, i) <= rank) ++v;
    out[size_t(i - 1)] = v;
    rank -= binom(v, i);
  }
  return out;
}

bool next_subset_lex(std::vector<int>& v, int n) {
  const int k = int(v.size());
  for (int i = k - 1; i >= 0; --i) {
    if (v[size_t(i)] < n - (k - i)) {
      ++v[size_t(i)];
      for (int j = i + 1; j < k; ++j) v[size_t(j)] = v[size_t(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_subset(int k) {
  std::vector<int> v(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) v[size_t(i)] = i;
  return v;
}

// ---- GraphColoring ----

GraphColoring::GraphColoring(int n, int k, ColorTablePtr table)
    : n_(n), k_(k), table_(std::move(table)) {
  if (n < 0 || k < 1 || k > 8)
    throw std::invalid_argument("GraphColoring: bad n or k");
  if (!table_) throw std::invalid_argument("GraphColoring: null table");
  color_.assign(size_t(binom(n, k)), kNoColor);
}

namespace {
void check_subset(std::span<const int> verts, int n, int k) {
  if (int(verts.size()) != k)
    throw std::invalid_argument("coloring: wrong subset size");
  for (size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= n)
      throw std::invalid_argument("coloring: vertex out of range");
    if (i && verts[i] <= verts[i - 1])
      throw std::invalid_argument("coloring: subset not strictly sorted");
  }
}
}  // namespace

int GraphColoring::color_of(std::span<const int> verts) const {
  check_subset(verts, n_, k_);
  return color_[size_t(subset_rank_colex(verts))];
}

bool GraphColoring::has_color(std::span<const int> verts) const {
  return color_of(verts) != kNoColor;
}

void GraphColoring::set_color(std::span<const int> verts, int color_id) {
  check_subset(verts, n_, k_);
  if (color_id != kNoColor && (color_id < 0 || color_id >= table_->size()))
    throw std::invalid_argument("coloring: color id not in table");
  color_[size_t(subset_rank_colex(verts))] = color_id;
}

int GraphColoring::edge_color(int u, int v) const {
  if (u > v) std::swap(u, v);
  std::array<int, 2> e{u, v};
  return color_of(e);
}

void GraphColoring::set_edge_color(int u, int v, int color_id) {
  if (u > v) std::swap(u, v);
  std::array<int, 2> e{u, v};
  set_color(e, color_id);
}

bool GraphColoring::total() const {
  for (int32_t c : color_)
    if (c == kNoColor) return false;
  return true;
}

std::vector<int> GraphColoring::used_colors() const {
  std::vector<char> seen(static_cast<size_t>(table_->size()), 0);
  for (int32_t c : color_)
    if (c != kNoColor) seen[size_t(c)] = 1;
  std::vector<int> out;
  for (int id = 0; id < int(seen.size()); ++id)
    if (seen[size_t(id)]) out.push_back(id);
  return out;
}

// ---- GridColoring ----

GridColoring::GridColoring(int rows, int cols, ColorTablePtr table)
    : m_(rows), n_(cols), table_(std::move(table)) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("GridColoring: empty grid");
  if (!table_) throw std::invalid_argument("GridColoring: null table");
  row_color_.assign(static_cast<size_t>(m_) * size_t(binom(n_, 2)), kNoColor);
  col_color_.assign(size_t(binom(m_, 2)) * size_t(n_), kNoColor);
}

namespace {
void check_pair(int a, int b, int bound, const char* what) {
  if (a < 0 || b <= a || b >= bound)
    throw std::invalid_argument(std::string("GridColoring: bad ") + what);
}
}  // namespace

int GridColoring::row_color(int i, int j, int j2) const {
  if (j > j2) std::swap(j, j2);
  check_pair(j, j2, n_, "column pair");
  if (i < 0 || i >= m_) throw std::invalid_argument("GridColoring: bad row");
  return row_color_[size_t(i) * size_t(binom(n_, 2)) +
                    size_t(pair_rank(j, j2))];
}

void GridColoring::set_row_color(int i, int j, int j2, int color_id) {
  if (j > j2) std::swap(j, j2);
  check_pair(j, j2, n_, "column pair");
  if (i < 0 || i >= m_) throw std::invalid_argument("GridColoring: bad row");
  row_color_[size_t(i) * size_t(binom(n_, 2)) + size_t(pair_rank(j, j2))] =
      color_id;
}

int GridColoring::col_color(int i, int i2, int j) const {
  if (i > i2) std::swap(i, i2);
  check_pair(i, i2, m_, "row pair");
  if (j < 0 || j >= n_) throw std::invalid_argument("GridColoring: bad col");
  return col_color_[size_t(pair_rank(i, i2)) * size_t(n_) + size_t(j)];
}

void GridColoring::set_col_color(int i, int i2, int j, int color_id) {
  if (i > i2) std::swap(i, i2);
  check_pair(i, i2, m_, "row pair");
  if (j < 0 || j >= n_) throw std::invalid_argument("GridColoring: bad col");
  col_color_[size_t(pair_rank(i, i2)) * size_t(n_) + size_t(j)] = color_id;
}

namespace {
std::vector<int> collect_used(const std::vector<int32_t>& v, int table_size) {
  std::vector<char> seen(static_cast<size_t>(table_size), 0);
  for (int32_t c : v)
    if (c != kNoColor) seen[size_t(c)] = 1;
  std::vector<int> out;
  for (int id = 0; id < table_size; ++id)
    if (seen[size_t(id)]) out.push_back(id);
  return out;
}
}  // namespace

std::vector<int> GridColoring::used_row_colors() const {
  return collect_used(row_color_, table_->size());
}

std::vector<int> GridColoring::used_col_colors() const {
  return collect_used(col_color_, table_->size());
}

std::vector<int> GridColoring::used_colors() const {
  auto all = row_color_;
  all.insert(all.end(), col_color_.begin(), col_color_.end());
  return collect_used(all, table_->size());
}

GridColoring GridColoring::restrict_rows(int rows) const {
  if (rows < 1 || rows > m_)
    throw std::invalid_argument("restrict_rows: bad row count");
  GridColoring out(rows, n_, table_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < n_; ++j)
      for (int j2 = j + 1; j2 < n_; ++j2)
        out.set_row_color(i, j, j2, row_color(i, j, j2));
  for (int i = 0; i < rows; ++i)
    for (int i2 = i + 1; i2 < rows; ++i2)
      for (int j = 0; j < n_; ++j)
        out.set_col_color(i, i2, j, col_color(i, i2, j));
  return out;
}

// ---- EdgePartition ----

EdgePartition::EdgePartition(int n, int t) : n_(n), t_(t) {
  if (n < 1 || t < 0) throw std::invalid_argument("EdgePartition: bad size");
  cls_.assign(size_t(binom(n, 2)), -1);
}

int EdgePartition::class_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  check_pair(u, v, n_, "pair");
  return cls_[size_t(pair_rank(u, v))];
}

void EdgePartition::set_class(int u, int v, int cls) {
  if (u > v) std::swap(u, v);
  check_pair(u, v, n_, "pair");
  if (cls < 0 || cls >= t_)
    throw std::invalid_argument("EdgePartition: class out of range");
  cls_[size_t(pair_rank(u, v))] = cls;
}

// ---- core operations ----

SimpleGraph union_subgraph(const EdgePartition& p, std::span<const int> I) {
  std::vector<char> pick(static_cast<size_t>(p.class_count()), 0);
  for (int cls : I) {
    if (cls < 0 || cls >= p.class_count())
      throw std::invalid_argument("union_subgraph: class out of range");
    pick[size_t(cls)] = 1;
  }
  SimpleGraph g(p.n());
  for (int u = 0; u < p.n(); ++u)
    for (int v = u + 1; v < p.n(); ++v) {
      int cls = p.class_of(u, v);
      if (cls >= 0 && pick[size_t(cls)]) g.add_edge(u, v);
    }
  return g;
}

SimpleGraph agreement_graph(const GraphColoring& c1, const GraphColoring& c2) {
  if (c1.k() != 2 || c2.k() != 2)
    throw std::invalid_argument("agreement_graph: k must be 2");
  if (c1.n() != c2.n())
    throw std::invalid_argument("agreement_graph: order mismatch");
  const bool shared = c1.table() == c2.table();
  SimpleGraph g(c1.n());
  for (int u = 0; u < c1.n(); ++u)
    for (int v = u + 1; v < c1.n(); ++v) {
      int a = c1.edge_color(u, v), b = c2.edge_color(u, v);
      if (a == kNoColor || b == kNoColor)
        throw std::invalid_argument("agreement_graph: partial coloring");
      bool equal = shared ? a == b : c1.table()->at(a) == c2.table()->at(b);
      if (equal) g.add_edge(u, v);
    }
  return g;
}

EdgePartition partition_from_coloring(const GraphColoring& c) {
  if (c.k() != 2)
    throw std::invalid_argument("partition_from_coloring: k must be 2");
  if (!c.total())
    throw std::invalid_argument("partition_from_coloring: partial coloring");
  EdgePartition p(c.n(), c.table()->size());
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      p.set_class(u, v, c.edge_color(u, v));
  return p;
}

}  // namespace gridramsey
