#include "gridramsey/verifiers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "gridramsey/constructions.hpp"
#include "gridramsey/rng.hpp"

namespace gridramsey {

namespace {

// rank-th p-subset of [0,n) in lexicographic order.
std::vector<int> subset_unrank_lex(int64_t rank, int p, int n) {
  std::vector<int> s(static_cast<size_t>(p));
  int v = 0;
  for (int pos = 0; pos < p; ++pos) {
    while (true) {
      int64_t cnt = binom(n - 1 - v, p - 1 - pos);
      if (rank < cnt) {
        s[size_t(pos)] = v++;
        break;
      }
      rank -= cnt;
      ++v;
    }
  }
  return s;
}

// Scans [0,total) in `threads` contiguous chunks; each chunk reports its
// first finding and the lowest chunk wins, so the result (the global
// lexicographic first) does not depend on the thread count.
template <class V, class Chunk>
std::optional<V> scan_chunks(int64_t total, int threads, const Chunk& chunk) {
  if (total <= 0) return std::nullopt;
  int T = std::max(1, threads);
  T = int(std::min<int64_t>(T, total));
  if (T == 1) return chunk(0, total);
  std::vector<std::optional<V>> found(static_cast<size_t>(T));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t) {
    int64_t b = total * t / T, e = total * (t + 1) / T;
    workers.emplace_back(
        [&found, &chunk, t, b, e] { found[size_t(t)] = chunk(b, e); });
  }
  for (auto& w : workers) w.join();
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace

std::optional<Rectangle> find_alternating_rectangle(const GridColoring& g) {
  const int m = g.rows(), n = g.cols();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int i2 = i + 1; i2 < m; ++i2) {
        int ca = g.col_color(i, i2, j);
        if (ca == kNoColor) continue;
        for (int j2 = j + 1; j2 < n; ++j2) {
          if (g.col_color(i, i2, j2) != ca) continue;
          int ra = g.row_color(i, j, j2);
          if (ra == kNoColor || ra != g.row_color(i2, j, j2)) continue;
          return Rectangle{i, i2, j, j2};
        }
      }
  return std::nullopt;
}

std::optional<PQViolation> verify_pq(const GraphColoring& c, int p, int q,
                                     int threads) {
  const int n = c.n(), k = c.k();
  if (p < k) throw std::invalid_argument("verify_pq: p < k");
  if (q < 1) throw std::invalid_argument("verify_pq: q < 1");
  if (p > n) return std::nullopt;

  std::vector<std::vector<int>> combs;  // k-index patterns within a p-set
  {
    std::vector<int> idx = first_subset(k);
    do combs.push_back(idx);
    while (next_subset_lex(idx, p));
  }

  auto chunk = [&](int64_t b, int64_t e) -> std::optional<PQViolation> {
    std::vector<int> verts = subset_unrank_lex(b, p, n);
    std::vector<int> edge(static_cast<size_t>(k)), colors;
    for (int64_t r = b; r < e; ++r) {
      colors.clear();
      bool complete = true;
      for (const auto& comb : combs) {
        for (int i = 0; i < k; ++i) edge[size_t(i)] = verts[size_t(comb[size_t(i)])];
        int id = c.color_of(edge);
        if (id == kNoColor) {
          complete = false;
          break;
        }
        colors.push_back(id);
      }
      if (complete) {
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (int(colors.size()) < q) return PQViolation{verts, colors};
      }
      if (r + 1 < e) next_subset_lex(verts, n);
    }
    return std::nullopt;
  };
  return scan_chunks<PQViolation>(binom(n, p), threads, chunk);
}

std::optional<ChromaticPQViolation> verify_chromatic_pq(
    const GraphColoring& c, int p, int q, std::optional<SampleMode> sample,
    int threads) {
  if (c.k() != 2) throw std::invalid_argument("verify_chromatic_pq: k != 2");
  if (!c.total())
    throw std::invalid_argument("verify_chromatic_pq: partial coloring");
  if (p < 2 || q < 2)
    throw std::invalid_argument("verify_chromatic_pq: need p, q >= 2");
  const int n = c.n();
  const int s = q - 1;
  const std::vector<int> palette = c.used_colors();
  const int P = int(palette.size());
  if (s > P) return std::nullopt;

  std::vector<std::vector<std::pair<int, int>>> cls(static_cast<size_t>(P));
  {
    std::vector<int> pos(static_cast<size_t>(c.table()->size()), -1);
    for (int i = 0; i < P; ++i) pos[size_t(palette[size_t(i)])] = i;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        cls[size_t(pos[size_t(c.edge_color(u, v))])].emplace_back(u, v);
  }

  auto test = [&](const std::vector<int>& xpos)
      -> std::optional<ChromaticPQViolation> {
    SimpleGraph g(n);
    for (int xp : xpos)
      for (auto [u, v] : cls[size_t(xp)]) g.add_edge(u, v);
    ChromaticResult res = chromatic_number(g, p - 1);
    if (res.exact) return std::nullopt;
    // Violation report carries the exact chromatic number (limit n is
    // always attainable, so this is exact).
    res = chromatic_number(g, n);
    std::vector<int> ids;
    ids.reserve(xpos.size());
    for (int xp : xpos) ids.push_back(palette[size_t(xp)]);
    return ChromaticPQViolation{std::move(ids), std::move(res)};
  };

  if (sample) {
    SplitRng rng = SplitRng(sample->seed).split(0x71636872);
    std::vector<int> xpos(static_cast<size_t>(s));
    for (int64_t it = 0; it < sample->count; ++it) {
      for (int i = 0; i < s; ++i) {
        int draw;
        bool dup;
        do {
          draw = int(rng.next_below(uint64_t(P)));
          dup = false;
          for (int j = 0; j < i; ++j)
            if (xpos[size_t(j)] == draw) dup = true;
        } while (dup);
        xpos[size_t(i)] = draw;
      }
      std::sort(xpos.begin(), xpos.end());
      if (auto v = test(xpos)) return v;
    }
    return std::nullopt;
  }

  auto chunk = [&](int64_t b, int64_t e) -> std::optional<ChromaticPQViolation> {
    std::vector<int> xpos = subset_unrank_lex(b, s, P);
    for (int64_t r = b; r < e; ++r) {
      if (auto v = test(xpos)) return v;
      if (r + 1 < e) next_subset_lex(xpos, P);
    }
    return std::nullopt;
  };
  return scan_chunks<ChromaticPQViolation>(binom(P, s), threads, chunk);
}

Rectangle shelah_witness(const GridColoring& grid, int r) {
  if (r < 1) throw std::invalid_argument("shelah_witness: r < 1");
  const int m = grid.rows(), n = grid.cols();
  if (int(grid.used_colors().size()) > r)
    throw std::invalid_argument("shelah_witness: palette exceeds r colors");
  if (m < r + 1)
    throw std::invalid_argument("shelah_witness: needs at least r+1 rows");
  const int64_t pairs = binom(r + 1, 2);
  int64_t need = 1;
  bool huge = false;
  for (int64_t i = 0; i < pairs; ++i) {
    need *= r;
    if (need > (int64_t(1) << 31)) {
      huge = true;
      break;
    }
  }
  if (huge || int64_t(n) < need + 1)
    throw std::invalid_argument(
        "shelah_witness: needs more than r^C(r+1,2) columns");

  // Column pigeonhole: the first repeated column signature over rows 0..r.
  int j = -1, j2 = -1;
  {
    std::map<std::vector<int>, int> seen;
    std::vector<int> sig;
    for (int col = 0; col < n && j == -1; ++col) {
      sig.clear();
      for (int i = 0; i <= r; ++i)
        for (int i2 = i + 1; i2 <= r; ++i2) {
          int cc = grid.col_color(i, i2, col);
          if (cc == kNoColor)
            throw std::invalid_argument("shelah_witness: partial grid");
          sig.push_back(cc);
        }
      auto [it, fresh] = seen.emplace(sig, col);
      if (!fresh) {
        j = it->second;
        j2 = col;
      }
    }
  }
  if (j == -1) throw std::logic_error("shelah_witness: column pigeonhole failed");

  // Row pigeonhole: two of the r+1 row edges {j,j2} share a color.
  int i = -1, i2 = -1;
  {
    std::map<int, int> first;
    for (int row = 0; row <= r && i == -1; ++row) {
      int rc = grid.row_color(row, j, j2);
      if (rc == kNoColor)
        throw std::invalid_argument("shelah_witness: partial grid");
      auto [it, fresh] = first.emplace(rc, row);
      if (!fresh) {
        i = it->second;
        i2 = row;
      }
    }
  }
  if (i == -1) throw std::logic_error("shelah_witness: row pigeonhole failed");

  Rectangle rect{i, i2, j, j2};
  if (grid.row_color(i, j, j2) != grid.row_color(i2, j, j2) ||
      grid.col_color(i, i2, j) != grid.col_color(i, i2, j2))
    throw std::logic_error("shelah_witness: verification failed");
  return rect;
}

int64_t stepdown_bound(int k, int r, int p, int q) {
  if (k < 1 || r < 1 || q < 2 || p < k)
    throw std::invalid_argument("stepdown_bound: need k>=1, r>=1, q>=2, p>=k");
  if (binom(p, k) <= q - 1) return p;  // any p vertices span few enough colors
  if (k == 1) return int64_t(r) * (p - 1) / (q - 1) + 1;
  const int64_t kSat = std::numeric_limits<int64_t>::max();
  int64_t a = stepdown_bound(k - 1, r, p - 1, q);
  if (a > (int64_t(1) << 26)) return kSat;
  int64_t expo = binom(int(a), k - 1);
  int64_t res = 1;
  for (int64_t i = 0; i < expo; ++i) {
    if (res > kSat / 2 / r) return kSat;
    res *= r;
  }
  return res;
}

namespace {

// Finds p vertices of `col` spanning at most q-1 colors (indices local to
// col). `degen` is set when some level needed no pigeonhole at all.
std::vector<int> stepdown_find(const GraphColoring& col, int r, int p, int q,
                               bool& degen) {
  const int k = col.k(), n = col.n();
  if (binom(p, k) <= q - 1) {
    degen = true;
    std::vector<int> v(static_cast<size_t>(p));
    std::iota(v.begin(), v.end(), 0);
    return v;
  }
  if (k == 1) {
    // Vertex pigeonhole: most popular color classes until p vertices.
    std::map<int, std::vector<int>> byclass;
    for (int v = 0; v < n; ++v) {
      std::array<int, 1> e{v};
      byclass[col.color_of(e)].push_back(v);
    }
    std::vector<const std::vector<int>*> order;
    for (const auto& [id, verts] : byclass) order.push_back(&verts);
    std::stable_sort(order.begin(), order.end(),
                     [](const std::vector<int>* a, const std::vector<int>* b) {
                       if (a->size() != b->size())
                         return a->size() > b->size();
                       return a->front() < b->front();
                     });
    std::vector<int> out;
    int classes = 0;
    for (const std::vector<int>* cl : order) {
      if (int(out.size()) >= p) break;
      out.insert(out.end(), cl->begin(), cl->end());
      ++classes;
    }
    if (int(out.size()) < p || classes > q - 1)
      throw std::logic_error("stepdown: vertex pigeonhole failed");
    std::sort(out.begin(), out.end());
    out.resize(static_cast<size_t>(p));
    return out;
  }

  const int a = int(stepdown_bound(k - 1, r, p - 1, q));
  std::vector<int> X, Y(static_cast<size_t>(n));
  std::iota(Y.begin(), Y.end(), 0);
  for (int t = 1; t <= a; ++t) {
    if (Y.empty()) throw std::logic_error("stepdown: candidates exhausted");
    const int x = Y.front();
    X.push_back(x);
    Y.erase(Y.begin());

    // Key the survivors by the colors of S + {x} + {y} for all
    // (k-2)-subsets S of the earlier picks, in lexicographic order.
    std::vector<std::vector<int>> stems;
    if (k == 2) {
      stems.push_back({x});
    } else if (int(X.size()) - 1 >= k - 2) {
      std::vector<int> idx = first_subset(k - 2);
      do {
        std::vector<int> S;
        for (int i : idx) S.push_back(X[size_t(i)]);
        S.push_back(x);
        stems.push_back(std::move(S));
      } while (next_subset_lex(idx, int(X.size()) - 1));
    }
    if (stems.empty()) continue;

    std::map<std::vector<int>, std::vector<int>> buckets;
    std::vector<int> key, edge;
    for (int y : Y) {
      key.clear();
      for (const auto& S : stems) {
        edge = S;
        edge.push_back(y);
        int id = col.color_of(edge);
        if (id == kNoColor)
          throw std::invalid_argument("stepdown: partial coloring");
        key.push_back(id);
      }
      buckets[key].push_back(y);
    }
    const std::vector<int>* best = nullptr;
    for (const auto& [bk, bv] : buckets)
      if (!best || bv.size() > best->size() ||
          (bv.size() == best->size() && bv.front() < best->front()))
        best = &bv;
    Y = *best;
  }
  if (Y.empty()) throw std::logic_error("stepdown: no extension vertex left");
  const int y0 = Y.front();

  // Colors of all k-subsets of X + {y0} are realized on (k-1)-subsets of X
  // joined with y0, so the auxiliary coloring controls the whole witness.
  GraphColoring aux(a, k - 1, col.table());
  std::vector<int> idx = first_subset(k - 1);
  do {
    std::vector<int> S;
    for (int i : idx) S.push_back(X[size_t(i)]);
    S.push_back(y0);
    aux.set_color(idx, col.color_of(S));
  } while (next_subset_lex(idx, a));

  std::vector<int> sub = stepdown_find(aux, r, p - 1, q, degen);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p));
  for (int i : sub) out.push_back(X[size_t(i)]);
  out.push_back(y0);
  return out;
}

}  // namespace

StepdownWitness stepdown_witness(const GraphColoring& c, int r, int p, int q) {
  if (!c.total()) throw std::invalid_argument("stepdown_witness: partial coloring");
  if (int(c.used_colors().size()) > r)
    throw std::invalid_argument("stepdown_witness: more than r colors used");
  int64_t need = stepdown_bound(c.k(), r, p, q);
  if (int64_t(c.n()) < need)
    throw std::invalid_argument("stepdown_witness: n below the pigeonhole bound");
  bool degen = false;
  std::vector<int> verts = stepdown_find(c, r, p, q, degen);
  std::vector<int> colors = distinct_colors_on(c, verts);
  if (int(verts.size()) != p || int(colors.size()) > q - 1)
    throw std::logic_error("stepdown_witness: verification failed");
  return StepdownWitness{PQViolation{std::move(verts), std::move(colors)},
                         degen};
}

int64_t chi_slow_grow_bound(int x) {
  if (x < 1) throw std::invalid_argument("chi_slow_grow_bound: x < 1");
  double v = 3.0 * std::sqrt(double(x) * std::log2(double(x)));
  return int64_t(std::floor(std::pow(2.0, v) + 1e-9));
}

ChiSlowGrowReport verify_chi_slow_grow(const GraphColoring& c,
                                       int exhaustive_max, int64_t samples,
                                       int sample_max, uint64_t seed,
                                       int threads) {
  if (c.k() != 2) throw std::invalid_argument("verify_chi_slow_grow: k != 2");
  if (!c.total())
    throw std::invalid_argument("verify_chi_slow_grow: partial coloring");
  const int n = c.n();
  const std::vector<int> palette = c.used_colors();
  const int P = int(palette.size());

  std::vector<std::vector<std::pair<int, int>>> cls(static_cast<size_t>(P));
  {
    std::vector<int> pos(static_cast<size_t>(c.table()->size()), -1);
    for (int i = 0; i < P; ++i) pos[size_t(palette[size_t(i)])] = i;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        cls[size_t(pos[size_t(c.edge_color(u, v))])].emplace_back(u, v);
  }

  auto build_union = [&](const std::vector<int>& xpos) {
    SimpleGraph g(n);
    for (int xp : xpos)
      for (auto [u, v] : cls[size_t(xp)]) g.add_edge(u, v);
    return g;
  };
  auto ids_of = [&](const std::vector<int>& xpos) {
    std::vector<int> ids;
    ids.reserve(xpos.size());
    for (int xp : xpos) ids.push_back(palette[size_t(xp)]);
    return ids;
  };

  auto check = [&](const std::vector<int>& xpos)
      -> std::optional<ChiSlowGrowViolation> {
    const std::vector<int> ids = ids_of(xpos);
    const int s = int(xpos.size());
    const int64_t bound = chi_slow_grow_bound(s);
    SimpleGraph g = build_union(xpos);
    if (int64_t(n) > bound) {
      // chi <= maxdeg+1 <= dsatur colors settle almost every subset; only
      // then pay for the exact decision.
      int maxdeg = 0;
      for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
      if (int64_t(maxdeg) + 1 > bound) {
        auto [dcol, used] = dsatur_coloring(g);
        (void)dcol;
        if (int64_t(used) > bound) {
          ChromaticResult res = chromatic_number(g, int(bound));
          if (!res.exact) {
            ChromaticResult full = chromatic_number(g, n);  // always exact
            return ChiSlowGrowViolation{ChiSlowGrowViolation::Kind::ChiBound,
                                        ids, {}, full.chi, bound};
          }
        }
      }
    }
    // Every independent set I of the auxiliary color graph must union to a
    // bipartite graph; subsets enumerated in ascending bitmask order.
    SimpleGraph aux = auxiliary_color_graph(c, ids);
    std::vector<uint32_t> adj(static_cast<size_t>(s), 0);
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v)
        if (aux.has_edge(u, v)) {
          adj[size_t(u)] |= uint32_t(1) << v;
          adj[size_t(v)] |= uint32_t(1) << u;
        }
    for (uint32_t set = 1; set < (uint32_t(1) << s); ++set) {
      bool indep = true;
      for (int v = 0; v < s && indep; ++v)
        if ((set >> v) & 1)
          if (adj[size_t(v)] & set) indep = false;
      if (!indep) continue;
      std::vector<int> sub;
      for (int v = 0; v < s; ++v)
        if ((set >> v) & 1) sub.push_back(xpos[size_t(v)]);
      SimpleGraph gi = build_union(sub);
      if (!is_bipartite(gi).bipartite())
        return ChiSlowGrowViolation{
            ChiSlowGrowViolation::Kind::IndepNotBipartite, ids, ids_of(sub),
            0, bound};
    }
    return std::nullopt;
  };

  ChiSlowGrowReport report;
  for (int s = 2; s <= std::min(exhaustive_max, P); ++s) {
    auto chunk = [&](int64_t b, int64_t e) -> std::optional<ChiSlowGrowViolation> {
      std::vector<int> xpos = subset_unrank_lex(b, s, P);
      for (int64_t r = b; r < e; ++r) {
        if (auto v = check(xpos)) return v;
        if (r + 1 < e) next_subset_lex(xpos, P);
      }
      return std::nullopt;
    };
    auto v = scan_chunks<ChiSlowGrowViolation>(binom(P, s), threads, chunk);
    if (v) {
      report.violation = std::move(v);
      return report;
    }
    report.exhaustive_checked += binom(P, s);
  }

  if (sample_max >= 2 && P >= 2) {
    SplitRng rng = SplitRng(seed).split(0x63686930);
    for (int64_t it = 0; it < samples; ++it) {
      int s = 2 + int(rng.next_below(uint64_t(std::min(sample_max, P) - 1)));
      std::vector<int> xpos(static_cast<size_t>(s));
      for (int i = 0; i < s; ++i) {
        int draw;
        bool dup;
        do {
          draw = int(rng.next_below(uint64_t(P)));
          dup = false;
          for (int j = 0; j < i; ++j)
            if (xpos[size_t(j)] == draw) dup = true;
        } while (dup);
        xpos[size_t(i)] = draw;
      }
      std::sort(xpos.begin(), xpos.end());
      ++report.sampled_checked;
      if (auto v = check(xpos)) {
        report.violation = std::move(v);
        return report;
      }
    }
  }
  return report;
}

std::vector<int> distinct_colors_on(const GraphColoring& c,
                                    std::span<const int> verts) {
  const int k = c.k(), p = int(verts.size());
  std::vector<int> colors;
  if (p < k) return colors;
  std::vector<int> idx = first_subset(k), edge(static_cast<size_t>(k));
  do {
    for (int i = 0; i < k; ++i) edge[size_t(i)] = verts[size_t(idx[size_t(i)])];
    int id = c.color_of(edge);
    if (id != kNoColor) colors.push_back(id);
  } while (next_subset_lex(idx, p));
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

}  // namespace gridramsey
