#include "gridramsey/chromatic.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridramsey {

std::pair<std::vector<int>, int> dsatur_coloring(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  if (n == 0) return {color, 0};
  std::vector<DynBitset> satset(static_cast<size_t>(n), DynBitset(n));
  std::vector<int> satdeg(static_cast<size_t>(n), 0), degree(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) degree[size_t(v)] = g.degree(v);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[size_t(v)] != -1) continue;
      if (best == -1 || satdeg[size_t(v)] > satdeg[size_t(best)] ||
          (satdeg[size_t(v)] == satdeg[size_t(best)] &&
           degree[size_t(v)] > degree[size_t(best)]))
        best = v;
    }
    int c = 0;
    while (satset[size_t(best)].test(c)) ++c;
    color[size_t(best)] = c;
    used = std::max(used, c + 1);
    g.row(best).for_each_bit([&](int u) {
      if (color[size_t(u)] == -1 && !satset[size_t(u)].test(c)) {
        satset[size_t(u)].set(c);
        ++satdeg[size_t(u)];
      }
    });
  }
  return {color, used};
}

namespace {

// Tomita-style maximum clique search: candidates greedily colored, reverse
// order processing with the color-class bound.
struct CliqueSearch {
  const SimpleGraph& g;
  int64_t cap;
  int64_t nodes = 0;
  bool capped = false;
  std::vector<int> best, cur;

  CliqueSearch(const SimpleGraph& gg, int64_t cap_) : g(gg), cap(cap_) {}

  void expand(DynBitset P) {
    if (++nodes > cap) {
      capped = true;
      return;
    }
    std::vector<int> order, bound;
    DynBitset uncolored = P;
    int color_class = 0;
    while (uncolored.any()) {
      ++color_class;
      DynBitset avail = uncolored;
      int v;
      while ((v = avail.next_bit()) != -1) {
        avail.reset(v);
        uncolored.reset(v);
        avail.and_not(g.row(v));
        order.push_back(v);
        bound.push_back(color_class);
      }
    }
    for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
      if (capped) return;
      int v = order[size_t(idx)];
      if (int(cur.size()) + bound[size_t(idx)] <= int(best.size())) return;
      cur.push_back(v);
      DynBitset P2 = P;
      P2 &= g.row(v);
      if (!P2.any()) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(P2);
      }
      cur.pop_back();
      P.reset(v);
    }
  }
};

// Exact k-colorability decision with DSATUR branching and first-use color
// canonicalization; `preclique` vertices are preassigned colors 0..q-1
// (sound: color classes are interchangeable).
struct DecideColorable {
  const SimpleGraph& g;
  int n, k;
  int64_t cap;
  int64_t nodes = 0;
  bool capped = false;
  std::vector<int> color, satdeg, degree;
  std::vector<std::vector<int>> cnt;

  DecideColorable(const SimpleGraph& gg, int kk, int64_t cap_)
      : g(gg),
        n(gg.vertex_count()),
        k(kk),
        cap(cap_),
        color(static_cast<size_t>(gg.vertex_count()), -1),
        satdeg(static_cast<size_t>(gg.vertex_count()), 0),
        degree(static_cast<size_t>(gg.vertex_count())),
        cnt(static_cast<size_t>(gg.vertex_count()), std::vector<int>(static_cast<size_t>(kk), 0)) {
    for (int v = 0; v < n; ++v) degree[size_t(v)] = g.degree(v);
  }

  void assign(int v, int c) {
    color[size_t(v)] = c;
    g.row(v).for_each_bit([&](int u) {
      if (cnt[size_t(u)][size_t(c)]++ == 0) ++satdeg[size_t(u)];
    });
  }

  void unassign(int v, int c) {
    color[size_t(v)] = -1;
    g.row(v).for_each_bit([&](int u) {
      if (--cnt[size_t(u)][size_t(c)] == 0) --satdeg[size_t(u)];
    });
  }

  bool solve(int uncolored, int max_used) {
    if (++nodes > cap) {
      capped = true;
      return false;
    }
    if (uncolored == 0) return true;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[size_t(v)] != -1) continue;
      if (best == -1 || satdeg[size_t(v)] > satdeg[size_t(best)] ||
          (satdeg[size_t(v)] == satdeg[size_t(best)] &&
           degree[size_t(v)] > degree[size_t(best)]))
        best = v;
    }
    if (satdeg[size_t(best)] >= k) return false;
    int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (cnt[size_t(best)][size_t(c)]) continue;
      assign(best, c);
      if (solve(uncolored - 1, std::max(max_used, c))) return true;
      unassign(best, c);
      if (capped) return false;
    }
    return false;
  }
};

// True/false decision; `clique` preassigned. On cap trip, throws.
bool decide_colorable(const SimpleGraph& g, int k,
                      const std::vector<int>& clique, int64_t cap,
                      std::vector<int>* out) {
  const int n = g.vertex_count();
  if (k >= n) {
    if (out) {
      out->resize(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) (*out)[size_t(v)] = v;
    }
    return true;
  }
  if (int(clique.size()) > k) return false;
  DecideColorable d(g, k, cap);
  int max_used = -1;
  for (size_t i = 0; i < clique.size(); ++i) {
    d.assign(clique[i], int(i));
    max_used = int(i);
  }
  bool ok = d.solve(n - int(clique.size()), max_used);
  if (d.capped)
    throw std::runtime_error("coloring search: node cap exceeded");
  if (ok && out) *out = d.color;
  return ok;
}

}  // namespace

std::vector<int> max_clique(const SimpleGraph& g, int64_t node_cap) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  CliqueSearch cs(g, node_cap);
  DynBitset all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  cs.cur.clear();
  cs.expand(all);
  if (cs.best.empty()) cs.best.push_back(0);  // edgeless graph: any vertex
  std::sort(cs.best.begin(), cs.best.end());
  return cs.best;
}

ChromaticResult chromatic_number(const SimpleGraph& g, int limit,
                                 int64_t node_cap) {
  const int n = g.vertex_count();
  ChromaticResult res;
  res.limit = limit;
  if (n == 0) {
    res.exact = true;
    res.chi = 0;
    return res;
  }
  if (g.edge_count() == 0) {
    if (limit < 1) return res;
    res.exact = true;
    res.chi = 1;
    res.coloring.assign(static_cast<size_t>(n), 0);
    return res;
  }

  std::vector<int> clique = max_clique(g);
  const int lb = int(clique.size());
  auto [ubcol, ub] = dsatur_coloring(g);
  if (limit < lb) return res;  // chi >= clique size > limit

  int best = ub;
  std::vector<int> bestcol = ubcol;
  int k = std::min(ub - 1, limit);
  while (k >= lb) {
    std::vector<int> col;
    if (decide_colorable(g, k, clique, node_cap, &col)) {
      best = k;
      bestcol = std::move(col);
      --k;
    } else {
      break;
    }
  }
  // Here chi = max(best, lb) is exact: either the decision at best-1 failed
  // or best reached the clique lower bound.
  if (best > limit) return res;  // only possible when ub > limit and the
                                 // decision at `limit` failed
  res.exact = true;
  res.chi = best;
  res.coloring = std::move(bestcol);
  return res;
}

std::optional<std::vector<int>> proper_coloring(const SimpleGraph& g, int r) {
  const int n = g.vertex_count();
  if (r < 0) throw std::invalid_argument("proper_coloring: negative r");
  if (n == 0) return std::vector<int>{};
  if (r == 0) return std::nullopt;
  auto [col, used] = dsatur_coloring(g);
  if (used <= r) return col;
  std::vector<int> clique = max_clique(g);
  if (int(clique.size()) > r) return std::nullopt;
  std::vector<int> out;
  if (decide_colorable(g, r, clique, int64_t(4) << 40, &out)) return out;
  return std::nullopt;
}

}  // namespace gridramsey
