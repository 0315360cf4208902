#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gridramsey/coloring.hpp"
#include "gridramsey/colors.hpp"
#include "gridramsey/combinatorics.hpp"
#include "gridramsey/constructions.hpp"
#include "gridramsey/graph.hpp"
#include "gridramsey/rng.hpp"
#include "gridramsey/verifiers.hpp"

using namespace gridramsey;

// ---------------------------------------------------------------------------
// Oracles: plain quadratic/recursive re-derivations of the scans, used to
// cross-check both the answers and the lexicographic tie-breaking.
// ---------------------------------------------------------------------------

namespace {

std::optional<Rectangle> oracle_rectangle(const GridColoring& g) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      for (int i2 = i + 1; i2 < g.rows(); ++i2)
        for (int j2 = j + 1; j2 < g.cols(); ++j2)
          if (g.row_color(i, j, j2) == g.row_color(i2, j, j2) &&
              g.col_color(i, i2, j) == g.col_color(i, i2, j2))
            return Rectangle{i, i2, j, j2};
  return std::nullopt;
}

// Combination successor written out again, deliberately not calling
// next_subset_lex, so subset order itself is under test.
bool oracle_next(std::vector<int>& v, int n) {
  int p = int(v.size());
  for (int i = p - 1; i >= 0; --i)
    if (v[size_t(i)] < n - (p - i)) {
      ++v[size_t(i)];
      for (int j = i + 1; j < p; ++j) v[size_t(j)] = v[size_t(j - 1)] + 1;
      return true;
    }
  return false;
}

std::optional<PQViolation> oracle_pq(const GraphColoring& c, int p, int q) {
  if (p > c.n() || p < c.k()) return std::nullopt;
  std::vector<int> verts(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) verts[size_t(i)] = i;
  do {
    std::set<int> colors;
    bool complete = true;
    std::vector<int> edge(static_cast<size_t>(c.k()));
    for (int i = 0; i < c.k(); ++i) edge[size_t(i)] = i;
    std::vector<int> sub;
    do {
      sub.clear();
      for (int i : edge) sub.push_back(verts[size_t(i)]);
      if (!c.has_color(sub)) {
        complete = false;
        break;
      }
      colors.insert(c.color_of(sub));
    } while (oracle_next(edge, p));
    if (complete && int(colors.size()) < q) {
      PQViolation v;
      v.vertices = verts;
      v.colors.assign(colors.begin(), colors.end());
      return v;
    }
  } while (oracle_next(verts, c.n()));
  return std::nullopt;
}

int64_t oracle_stepdown(int k, int r, int p, int q) {
  if (binom(p, k) <= q - 1) return p;
  if (k == 1) return int64_t(r) * (p - 1) / (q - 1) + 1;
  int64_t a = oracle_stepdown(k - 1, r, p - 1, q);
  double res = std::pow(double(r), double(binom(int(a), k - 1)));
  return res > 9e15 ? std::numeric_limits<int64_t>::max() : int64_t(res);
}

bool equal_violation(const std::optional<PQViolation>& a,
                     const std::optional<PQViolation>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->vertices == b->vertices && a->colors == b->colors;
}

GraphColoring mubayi_shaped_coloring(
    int n, const std::vector<StructuredColor>& palette,
    const std::vector<std::tuple<int, int, int>>& edges) {
  auto table = make_table();
  std::vector<int> ids;
  for (const auto& c : palette) ids.push_back(table->intern(c));
  GraphColoring g(n, 2, table);
  for (auto [u, v, which] : edges)
    g.set_edge_color(u, v, ids[size_t(which)]);
  return g;
}

StructuredColor mub(int lo, int hi, std::vector<int> avec) {
  StructuredColor c;
  c.push_set(lo, hi);
  for (int a : avec) c.push_int(a);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// find_alternating_rectangle.
// ---------------------------------------------------------------------------

TEST_CASE("find_alternating_rectangle agrees with the brute-force scan") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int m = 2 + int(seed % 4);
    int n = 2 + int((seed / 4) % 4);
    int r = 1 + int(seed % 3);
    GridColoring g = random_grid_coloring(m, n, r, seed);
    auto got = find_alternating_rectangle(g);
    auto want = oracle_rectangle(g);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->i == want->i);
      CHECK(got->i2 == want->i2);
      CHECK(got->j == want->j);
      CHECK(got->j2 == want->j2);
    }
  }
}

TEST_CASE("find_alternating_rectangle returns the lexicographically first") {
  auto table = make_table();
  int one = table->intern(StructuredColor::ints({1}));
  GridColoring g(3, 3, table);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int j2 = j + 1; j2 < 3; ++j2) g.set_row_color(i, j, j2, one);
  for (int i = 0; i < 3; ++i)
    for (int i2 = i + 1; i2 < 3; ++i2)
      for (int j = 0; j < 3; ++j) g.set_col_color(i, i2, j, one);
  auto rect = find_alternating_rectangle(g);
  REQUIRE(rect.has_value());
  CHECK(rect->i == 0);
  CHECK(rect->i2 == 1);
  CHECK(rect->j == 0);
  CHECK(rect->j2 == 1);
}

// ---------------------------------------------------------------------------
// verify_pq.
// ---------------------------------------------------------------------------

TEST_CASE("verify_pq agrees with the brute-force oracle on total colorings") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    GraphColoring c = random_coloring(8, 2, 2 + int(seed % 3), seed);
    for (int p = 2; p <= 5; ++p)
      for (int q = 2; q <= 4; ++q)
        CHECK(equal_violation(verify_pq(c, p, q), oracle_pq(c, p, q)));
  }
  for (uint64_t seed = 0; seed < 6; ++seed) {
    GraphColoring c = random_coloring(7, 3, 3, seed);
    for (int p = 3; p <= 5; ++p)
      for (int q = 2; q <= 4; ++q)
        CHECK(equal_violation(verify_pq(c, p, q), oracle_pq(c, p, q)));
  }
}

TEST_CASE("verify_pq skips subsets with absent edges") {
  // partite triple colorings are partial: only balanced 4-sets count
  for (uint64_t seed = 0; seed < 6; ++seed) {
    GraphColoring h = grid_to_partite3(random_grid_coloring(3, 3, 2, seed));
    for (int q = 2; q <= 4; ++q)
      CHECK(equal_violation(verify_pq(h, 4, q), oracle_pq(h, 4, q)));
  }
  // a hand-made partial pair coloring: the only complete 3-subset wins
  auto table = make_table();
  int one = table->intern(StructuredColor::ints({1}));
  GraphColoring c(5, 2, table);
  c.set_edge_color(0, 1, one);
  c.set_edge_color(0, 2, one);
  c.set_edge_color(1, 2, one);
  c.set_edge_color(3, 4, one);
  auto v = verify_pq(c, 3, 2);
  REQUIRE(v.has_value());
  CHECK(v->vertices == std::vector<int>{0, 1, 2});
  CHECK(v->colors == std::vector<int>{one});
  CHECK(!verify_pq(c, 4, 2).has_value());  // no complete 4-subset at all
}

TEST_CASE("verify_pq trivial ranges hold") {
  GraphColoring c = random_coloring(6, 2, 2, 3);
  CHECK(!verify_pq(c, 7, 2).has_value());  // p > n: nothing to scan
  CHECK(!verify_pq(c, 3, 1).has_value());  // q = 1: a colored edge suffices
}

TEST_CASE("verify_pq is thread-count invariant") {
  GraphColoring c = random_coloring(10, 2, 3, 21);
  GraphColoring h = random_coloring(8, 3, 3, 22);
  for (int threads : {2, 3, 7}) {
    CHECK(equal_violation(verify_pq(c, 4, 3, threads), verify_pq(c, 4, 3)));
    CHECK(equal_violation(verify_pq(c, 3, 2, threads), verify_pq(c, 3, 2)));
    CHECK(equal_violation(verify_pq(h, 5, 4, threads), verify_pq(h, 5, 4)));
  }
}

// ---------------------------------------------------------------------------
// verify_chromatic_pq.
// ---------------------------------------------------------------------------

TEST_CASE("verify_chromatic_pq pinned cases") {
  // binary classes are bipartite: chi(G_X) <= 2 for every single color
  CHECK(!verify_chromatic_pq(binary_coloring(16), 3, 2).has_value());

  // all-one K_4 against (4,2): X = the only color, chi proven exactly 4
  auto table = make_table();
  int one = table->intern(StructuredColor::ints({1}));
  GraphColoring k4(4, 2, table);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.set_edge_color(u, v, one);
  auto viol = verify_chromatic_pq(k4, 4, 2);
  REQUIRE(viol.has_value());
  CHECK(viol->colors == std::vector<int>{one});
  CHECK(viol->proof.exact);
  CHECK(viol->proof.chi == 4);

  // all-one K_3 against (3,2): chi = 3 > p-1 = 2
  GraphColoring k3(3, 2, table);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) k3.set_edge_color(u, v, one);
  auto viol3 = verify_chromatic_pq(k3, 3, 2);
  REQUIRE(viol3.has_value());
  CHECK(viol3->proof.chi == 3);

  // mubayi at n=16 satisfies the chromatic (4,3) condition
  CHECK(!verify_chromatic_pq(mubayi_coloring(16), 4, 3).has_value());
}

TEST_CASE("verify_chromatic_pq sampled mode and threads") {
  auto table = make_table();
  int one = table->intern(StructuredColor::ints({1}));
  GraphColoring k4(4, 2, table);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.set_edge_color(u, v, one);
  // a sample must hit the unique (q-1)-subset
  auto viol = verify_chromatic_pq(k4, 4, 2, SampleMode{5, 99});
  REQUIRE(viol.has_value());
  CHECK(viol->proof.chi == 4);

  // sampling a holds-case stays clean
  CHECK(!verify_chromatic_pq(binary_coloring(16), 3, 2, SampleMode{100, 7})
             .has_value());

  // exhaustive multithreaded equals single-threaded
  for (int threads : {2, 5}) {
    auto a = verify_chromatic_pq(k4, 4, 2, std::nullopt, threads);
    REQUIRE(a.has_value());
    CHECK(a->colors == viol->colors);
    CHECK(!verify_chromatic_pq(mubayi_coloring(16), 4, 3, std::nullopt, threads)
               .has_value());
  }
}

// ---------------------------------------------------------------------------
// chi_slow_grow.
// ---------------------------------------------------------------------------

TEST_CASE("chi_slow_grow_bound matches the closed-form formula") {
  CHECK(chi_slow_grow_bound(1) == 1);  // 2^0
  for (int x = 1; x <= 50; ++x) {
    double v = 3.0 * std::sqrt(double(x) * std::log2(double(x)));
    CHECK(chi_slow_grow_bound(x) == int64_t(std::floor(std::pow(2.0, v) + 1e-9)));
  }
  CHECK(chi_slow_grow_bound(2) == 18);
  CHECK_THROWS_AS(chi_slow_grow_bound(0), std::invalid_argument);
}

TEST_CASE("verify_chi_slow_grow holds on mubayi colorings") {
  GraphColoring c = mubayi_coloring(16);
  const int P = int(c.used_colors().size());
  ChiSlowGrowReport rep = verify_chi_slow_grow(c, 2, 40, 4, 123);
  CHECK(!rep.violation.has_value());
  CHECK(rep.exhaustive_checked == binom(P, 2));
  CHECK(rep.sampled_checked == 40);

  // samples = 0: exhaustive only
  ChiSlowGrowReport rep2 = verify_chi_slow_grow(c, 3, 0, 4, 0);
  CHECK(!rep2.violation.has_value());
  CHECK(rep2.exhaustive_checked == binom(P, 2) + binom(P, 3));
  CHECK(rep2.sampled_checked == 0);

  // thread invariance of the counts
  ChiSlowGrowReport rep3 = verify_chi_slow_grow(c, 2, 40, 4, 123, 3);
  CHECK(rep3.exhaustive_checked == rep.exhaustive_checked);
  CHECK(rep3.sampled_checked == rep.sampled_checked);
  CHECK(!rep3.violation.has_value());
}

TEST_CASE("verify_chi_slow_grow detects a chromatic bound violation") {
  // K_20 with one off-color edge: X = both colors unions to K_20,
  // chi = 20 > bound(2) = 18
  std::vector<std::tuple<int, int, int>> edges;
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 20; ++v)
      edges.emplace_back(u, v, (u == 0 && v == 1) ? 1 : 0);
  GraphColoring c = mubayi_shaped_coloring(
      20, {mub(0, 1, {1, 0}), mub(0, 2, {1, 0})}, edges);
  ChiSlowGrowReport rep = verify_chi_slow_grow(c, 2, 0, 2, 0);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->kind == ChiSlowGrowViolation::Kind::ChiBound);
  CHECK(rep.violation->colors.size() == 2);
  CHECK(rep.violation->chi == 20);
  CHECK(rep.violation->bound == 18);
}

TEST_CASE("verify_chi_slow_grow detects a non-bipartite independent union") {
  // two aux-independent colors whose union is a triangle
  GraphColoring c = mubayi_shaped_coloring(
      3, {mub(0, 1, {1, 0}), mub(0, 1, {0, 1})},
      {{0, 1, 0}, {1, 2, 0}, {0, 2, 1}});
  ChiSlowGrowReport rep = verify_chi_slow_grow(c, 2, 0, 2, 0);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->kind == ChiSlowGrowViolation::Kind::IndepNotBipartite);
  CHECK(rep.violation->colors.size() == 2);
  CHECK(rep.violation->indep_set.size() == 2);

  // sanity: the pair really is aux-independent
  std::vector<int> ids = c.used_colors();
  CHECK(!auxiliary_color_graph(c, ids).has_edge(0, 1));
}

// ---------------------------------------------------------------------------
// shelah_witness.
// ---------------------------------------------------------------------------

TEST_CASE("shelah_witness pinned 2x2 single-color case") {
  auto table = make_table();
  int one = table->intern(StructuredColor::ints({1}));
  GridColoring g(2, 2, table);
  for (int i = 0; i < 2; ++i) g.set_row_color(i, 0, 1, one);
  for (int j = 0; j < 2; ++j) g.set_col_color(0, 1, j, one);
  Rectangle rect = shelah_witness(g, 1);
  CHECK(rect.i == 0);
  CHECK(rect.i2 == 1);
  CHECK(rect.j == 0);
  CHECK(rect.j2 == 1);
}

TEST_CASE("shelah_witness is total on minimum-size grids for r = 1, 2, 3") {
  // At m = r+1 rows and n = r^C(r+1,2)+1 columns a rectangle always exists;
  // the finder must return a valid one on every random instance.
  auto run = [](int r, int m, int n, uint64_t seed) {
    GridColoring g = random_grid_coloring(m, n, r, seed);
    Rectangle rect = shelah_witness(g, r);
    CHECK(rect.i < rect.i2);
    CHECK(rect.j < rect.j2);
    CHECK(g.row_color(rect.i, rect.j, rect.j2) ==
          g.row_color(rect.i2, rect.j, rect.j2));
    CHECK(g.col_color(rect.i, rect.i2, rect.j) ==
          g.col_color(rect.i, rect.i2, rect.j2));
    return rect;
  };
  for (uint64_t seed = 0; seed < 500; ++seed) run(1, 2, 2, seed);
  for (uint64_t seed = 0; seed < 500; ++seed) {
    Rectangle rect = run(2, 3, 9, seed);
    if (seed < 30) {  // deterministic re-run
      GridColoring g = random_grid_coloring(3, 9, 2, seed);
      CHECK(shelah_witness(g, 2) == rect);
    }
  }
  // r=3 needs 3^6+1 = 730 columns
  for (uint64_t seed = 0; seed < 500; ++seed) run(3, 4, 730, seed);
}

TEST_CASE("shelah_witness rejects undersized grids and oversized palettes") {
  CHECK_THROWS_AS(shelah_witness(random_grid_coloring(2, 8, 2, 1), 2),
                  std::invalid_argument);  // too few rows
  CHECK_THROWS_AS(shelah_witness(random_grid_coloring(3, 8, 2, 1), 2),
                  std::invalid_argument);  // 8 < 2^3+1 columns
  CHECK_THROWS_AS(shelah_witness(random_grid_coloring(3, 9, 3, 1), 2),
                  std::invalid_argument);  // 3 colors with r=2
}

// ---------------------------------------------------------------------------
// stepdown.
// ---------------------------------------------------------------------------

TEST_CASE("stepdown_bound pinned values and recursive oracle") {
  CHECK(stepdown_bound(2, 2, 3, 2) == 8);
  CHECK(stepdown_bound(3, 2, 4, 3) == 64);
  CHECK(stepdown_bound(1, 2, 3, 2) == 5);
  for (int k = 1; k <= 3; ++k)
    for (int r = 1; r <= 3; ++r)
      for (int p = k; p <= 5; ++p)
        for (int q = 2; q <= 4; ++q) {
          int64_t want = oracle_stepdown(k, r, p, q);
          if (want < 1000000) CHECK(stepdown_bound(k, r, p, q) == want);
        }
  CHECK_THROWS_AS(stepdown_bound(0, 2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(stepdown_bound(2, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("stepdown_witness vertex pigeonhole (k=1)") {
  auto table = make_table();
  std::vector<int> ids{table->intern(StructuredColor::ints({1})),
                       table->intern(StructuredColor::ints({2}))};
  for (uint64_t seed = 0; seed < 10; ++seed) {
    SplitRng rng(seed);
    GraphColoring c(5, 1, table);  // N(1,2,3,2) = 5
    for (int v = 0; v < 5; ++v) {
      std::vector<int> vert{v};
      c.set_color(vert, ids[size_t(rng.next_below(2))]);
    }
    StepdownWitness w = stepdown_witness(c, 2, 3, 2);
    CHECK(w.violation.vertices.size() == 3);
    CHECK(w.violation.colors.size() <= 1);
    for (int v : w.violation.vertices) {
      std::vector<int> vert{v};
      CHECK(c.color_of(vert) == w.violation.colors[0]);
    }
  }
}

TEST_CASE("stepdown_witness on pair colorings (k=2)") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    GraphColoring c = random_coloring(8, 2, 2, seed);
    StepdownWitness w = stepdown_witness(c, 2, 3, 2);
    REQUIRE(w.violation.vertices.size() == 3);
    CHECK(std::is_sorted(w.violation.vertices.begin(),
                         w.violation.vertices.end()));
    auto colors = distinct_colors_on(c, w.violation.vertices);
    CHECK(colors.size() == 1);
    CHECK(colors == w.violation.colors);
  }
}

TEST_CASE("stepdown_witness on triple colorings (k=3)") {
  for (uint64_t seed = 0; seed < 2; ++seed) {
    GraphColoring c = random_coloring(64, 3, 2, seed);
    StepdownWitness w = stepdown_witness(c, 2, 4, 3);
    CHECK(w.violation.vertices.size() == 4);
    CHECK(int(w.violation.colors.size()) <= 2);
    auto colors = distinct_colors_on(c, w.violation.vertices);
    CHECK(colors == w.violation.colors);
  }
}

TEST_CASE("stepdown_witness degenerate tail and guards") {
  // k=2, p=3, q=3: q-1 = 2 >= C(2,1), the tail is any (p-1)-set
  GraphColoring c = random_coloring(4, 2, 2, 9);
  StepdownWitness w = stepdown_witness(c, 2, 3, 3);
  CHECK(w.degenerate_tail);
  CHECK(w.violation.vertices.size() == 3);
  CHECK(int(w.violation.colors.size()) <= 2);

  GraphColoring small = random_coloring(7, 2, 2, 9);
  CHECK_THROWS_AS(stepdown_witness(small, 2, 3, 2), std::invalid_argument);
  GraphColoring wide = random_coloring(8, 2, 3, 9);
  CHECK_THROWS_AS(stepdown_witness(wide, 2, 3, 2), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// distinct_colors_on.
// ---------------------------------------------------------------------------

TEST_CASE("distinct_colors_on matches a set-based recount") {
  GraphColoring c = binary_coloring(8);
  std::vector<int> verts{0, 1, 2};
  std::set<int> want;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      want.insert(c.edge_color(verts[size_t(a)], verts[size_t(b)]));
  auto got = distinct_colors_on(c, verts);
  CHECK(got == std::vector<int>(want.begin(), want.end()));

  // absent edges are skipped
  GraphColoring h = grid_to_partite3(random_grid_coloring(2, 2, 2, 4));
  std::vector<int> mixed{0, 1, 2};  // two A-vertices, one B: only col triples
  auto cols = distinct_colors_on(h, mixed);
  CHECK(cols.size() <= 1);
}
