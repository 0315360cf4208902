#include "gridramsey/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gridramsey/chromatic.hpp"
#include "gridramsey/verifiers.hpp"

namespace gridramsey {

namespace {

enum class RunStatus { Sat, Unsat, Budget };

// Depth-first frontier over a fixed variable order: val[d] for d < depth is
// the current assignment, `next` the next candidate color at `depth`.
// Candidates at earlier depths resume at val[d]+1, so (depth, next, assign)
// captures the whole search state.
struct DfsFrontier {
  int depth = 0;
  int next = 0;
  std::vector<int> val;   // size V, -1 = unassigned
  std::vector<int> maxu;  // size V+1, max color used before depth d

  void reset(int vars) {
    depth = 0;
    next = 0;
    val.assign(static_cast<size_t>(vars), -1);
    maxu.assign(static_cast<size_t>(vars) + 1, -1);
  }
  void recompute_maxu() {
    maxu.assign(val.size() + 1, -1);
    for (int d = 0; d < depth; ++d)
      maxu[size_t(d) + 1] = std::max(maxu[size_t(d)], val[size_t(d)]);
  }
};

// Iterative DFS with first-use color canonicalization: at each depth only
// colors 0..min(r-1, maxused+1) are tried, which preserves satisfiability
// (colorings are closed under palette permutation).
template <class Problem>
RunStatus run_dfs(const Problem& prob, DfsFrontier& f, int64_t budget,
                  int64_t& nodes_new) {
  const int V = prob.V;
  while (true) {
    if (f.depth == V) return RunStatus::Sat;
    const int limit = std::min(prob.r - 1, f.maxu[size_t(f.depth)] + 1);
    int c = f.next;
    bool advanced = false;
    for (; c <= limit; ++c) {
      if (nodes_new >= budget) {
        f.next = c;
        return RunStatus::Budget;
      }
      if (prob.allowed(f.depth, c, f.val)) {
        f.val[size_t(f.depth)] = c;
        f.maxu[size_t(f.depth) + 1] = std::max(f.maxu[size_t(f.depth)], c);
        ++f.depth;
        f.next = 0;
        ++nodes_new;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (f.depth == 0) return RunStatus::Unsat;
    --f.depth;
    f.next = f.val[size_t(f.depth)] + 1;
    f.val[size_t(f.depth)] = -1;
  }
}

// ---------------------------------------------------------------- grid ----

// Variables: row edges (i, {j,j'}) row-major, then column edges ({i,i'}, j)
// column-major (pairs in ascending pair_rank order within a block). A column
// edge may not take the color that completes an alternating rectangle, and a
// row edge that completes row i must keep every pairwise agreement graph
// r-colorable.
struct GridProblem {
  int m, n, r, V, row_vars;
  int cn2, cm2;
  std::vector<std::pair<int, int>> pair_n, pair_m;

  GridProblem(int m_, int n_, int r_) : m(m_), n(n_), r(r_) {
    cn2 = int(binom(n, 2));
    cm2 = int(binom(m, 2));
    row_vars = m * cn2;
    V = row_vars + cm2 * n;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u) pair_n.emplace_back(u, v);
    for (int v = 0; v < m; ++v)
      for (int u = 0; u < v; ++u) pair_m.emplace_back(u, v);
  }

  int row_var(int i, int j, int j2) const {
    return i * cn2 + int(pair_rank(j, j2));
  }
  int col_var(int j, int i, int i2) const {
    return row_vars + j * cm2 + int(pair_rank(i, i2));
  }

  bool allowed(int depth, int c, const std::vector<int>& val) const {
    if (depth < row_vars) {
      const int i = depth / cn2;
      if (depth % cn2 != cn2 - 1 || i == 0) return true;
      // Row i is complete with this candidate: every agreement graph with
      // an earlier row must stay r-colorable, or no column assignment for
      // that pair can avoid an alternating rectangle.
      for (int prev = 0; prev < i; ++prev) {
        SimpleGraph h(n);
        for (int pr = 0; pr < cn2; ++pr) {
          int a = val[size_t(prev * cn2 + pr)];
          int b = (pr == cn2 - 1) ? c : val[size_t(i * cn2 + pr)];
          if (a == b)
            h.add_edge(pair_n[size_t(pr)].first, pair_n[size_t(pr)].second);
        }
        if (!proper_coloring(h, r)) return false;
      }
      return true;
    }
    const int d = depth - row_vars;
    const int j = d / cm2;
    const auto [i, i2] = pair_m[size_t(d % cm2)];
    for (int j2 = 0; j2 < j; ++j2)
      if (val[size_t(col_var(j2, i, i2))] == c &&
          val[size_t(row_var(i, j2, j))] == val[size_t(row_var(i2, j2, j))])
        return false;
    return true;
  }

  GridColoring build(const std::vector<int>& val) const {
    auto table = make_table();
    for (int c = 1; c <= r; ++c) table->intern(StructuredColor::ints({c}));
    GridColoring g(m, n, table);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        for (int j2 = j + 1; j2 < n; ++j2)
          g.set_row_color(i, j, j2, val[size_t(row_var(i, j, j2))]);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < m; ++i)
        for (int i2 = i + 1; i2 < m; ++i2)
          g.set_col_color(i, i2, j, val[size_t(col_var(j, i, i2))]);
    return g;
  }
};

// ----------------------------------------------------------- hypergraph ----

// Variables: the k-subsets of [n] in colex order. A candidate color is
// rejected when some p-superset of the edge could no longer reach q
// distinct colors (distinct assigned + unassigned < q).
struct HyperProblem {
  int n, k, p, q, r, V;
  std::vector<std::vector<int>> supers_of;  // depth -> flat list of groups
  std::vector<std::vector<int>> groups;     // p-subset -> its edge ranks

  HyperProblem(int n_, int k_, int p_, int q_, int r_)
      : n(n_), k(k_), p(p_), q(q_), r(r_) {
    V = int(binom(n, k));
    supers_of.resize(static_cast<size_t>(V));
    if (p <= n) {
      std::vector<int> verts = first_subset(p);
      do {
        std::vector<int> ranks;
        std::vector<int> idx = first_subset(k), edge(static_cast<size_t>(k));
        do {
          for (int i = 0; i < k; ++i)
            edge[size_t(i)] = verts[size_t(idx[size_t(i)])];
          ranks.push_back(int(subset_rank_colex(edge)));
        } while (next_subset_lex(idx, p));
        int gid = int(groups.size());
        groups.push_back(std::move(ranks));
        for (int e : groups.back()) supers_of[size_t(e)].push_back(gid);
      } while (next_subset_lex(verts, n));
    }
  }

  bool allowed(int depth, int c, const std::vector<int>& val) const {
    for (int gid : supers_of[size_t(depth)]) {
      uint64_t mask = uint64_t(1) << c;
      int unassigned = 0;
      for (int e : groups[size_t(gid)]) {
        if (e == depth) continue;
        int v = val[size_t(e)];
        if (v < 0)
          ++unassigned;
        else
          mask |= uint64_t(1) << v;
      }
      if (std::popcount(mask) + unassigned < q) return false;
    }
    return true;
  }

  GraphColoring build(const std::vector<int>& val) const {
    auto table = make_table();
    for (int c = 1; c <= r; ++c) table->intern(StructuredColor::ints({c}));
    GraphColoring col(n, k, table);
    for (int rank = 0; rank < V; ++rank) col.set_raw(rank, val[size_t(rank)]);
    return col;
  }
};

// ----------------------------------------------------------- checkpoints ----

struct Checkpoint {
  std::string solver;
  std::vector<int64_t> params;
  int outer = 0;
  int64_t nodes = 0;
  DfsFrontier frontier;  // depth, next, val[0..depth-1] meaningful
};

std::string serialize_checkpoint(const Checkpoint& cp) {
  std::ostringstream out;
  out << "gridramsey-checkpoint v1\n";
  out << "solver " << cp.solver << "\n";
  out << "params";
  for (int64_t p : cp.params) out << " " << p;
  out << "\n";
  out << "outer " << cp.outer << "\n";
  out << "nodes " << cp.nodes << "\n";
  out << "depth " << cp.frontier.depth << "\n";
  out << "next " << cp.frontier.next << "\n";
  out << "assign";
  for (int d = 0; d < cp.frontier.depth; ++d)
    out << " " << cp.frontier.val[size_t(d)];
  out << "\n";
  out << "end\n";
  return out.str();
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int64_t parse_i64(const std::string& s) {
  size_t used = 0;
  int64_t v = std::stoll(s, &used);
  if (used != s.size())
    throw std::invalid_argument("checkpoint: bad integer '" + s + "'");
  return v;
}

Checkpoint parse_checkpoint(const std::string& text, const std::string& solver,
                            const std::vector<int64_t>& params) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line))
      throw std::invalid_argument(std::string("checkpoint: missing ") + what);
    return tokens_of(line);
  };
  if (next_line("header") != std::vector<std::string>{"gridramsey-checkpoint", "v1"})
    throw std::invalid_argument("checkpoint: bad header");
  auto t = next_line("solver");
  if (t.size() != 2 || t[0] != "solver")
    throw std::invalid_argument("checkpoint: bad solver line");
  if (t[1] != solver)
    throw std::invalid_argument("checkpoint: solver mismatch");
  Checkpoint cp;
  cp.solver = t[1];
  t = next_line("params");
  if (t.empty() || t[0] != "params")
    throw std::invalid_argument("checkpoint: bad params line");
  for (size_t i = 1; i < t.size(); ++i) cp.params.push_back(parse_i64(t[i]));
  if (cp.params != params)
    throw std::invalid_argument("checkpoint: parameter mismatch");
  t = next_line("outer");
  if (t.size() != 2 || t[0] != "outer")
    throw std::invalid_argument("checkpoint: bad outer line");
  cp.outer = int(parse_i64(t[1]));
  t = next_line("nodes");
  if (t.size() != 2 || t[0] != "nodes")
    throw std::invalid_argument("checkpoint: bad nodes line");
  cp.nodes = parse_i64(t[1]);
  t = next_line("depth");
  if (t.size() != 2 || t[0] != "depth")
    throw std::invalid_argument("checkpoint: bad depth line");
  cp.frontier.depth = int(parse_i64(t[1]));
  t = next_line("next");
  if (t.size() != 2 || t[0] != "next")
    throw std::invalid_argument("checkpoint: bad next line");
  cp.frontier.next = int(parse_i64(t[1]));
  t = next_line("assign");
  if (t.empty() || t[0] != "assign" ||
      int(t.size()) - 1 != cp.frontier.depth)
    throw std::invalid_argument("checkpoint: bad assign line");
  cp.frontier.val.clear();
  for (size_t i = 1; i < t.size(); ++i)
    cp.frontier.val.push_back(int(parse_i64(t[i])));
  t = next_line("end");
  if (t != std::vector<std::string>{"end"})
    throw std::invalid_argument("checkpoint: bad trailer");
  return cp;
}

std::optional<Checkpoint> load_checkpoint(const std::string& path,
                                          const std::string& solver,
                                          const std::vector<int64_t>& params) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str(), solver, params);
}

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  out << serialize_checkpoint(cp);
}

void drop_checkpoint(const std::string& path) {
  if (!path.empty()) std::remove(path.c_str());
}

// Restores a loaded frontier into a V-variable search, validating ranges.
void restore_frontier(DfsFrontier& f, const Checkpoint& cp, int V, int r) {
  if (cp.frontier.depth < 0 || cp.frontier.depth > V ||
      cp.frontier.next < 0 || cp.frontier.next > r)
    throw std::invalid_argument("checkpoint: frontier out of range");
  f.reset(V);
  f.depth = cp.frontier.depth;
  f.next = cp.frontier.next;
  for (int d = 0; d < cp.frontier.depth; ++d) {
    int v = cp.frontier.val[size_t(d)];
    if (v < 0 || v >= r)
      throw std::invalid_argument("checkpoint: assignment out of range");
    f.val[size_t(d)] = v;
  }
  f.recompute_maxu();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

SearchResult<GridColoring> exact_g(int m, int n, int r_max,
                                   const SolveOptions& opts) {
  if (m < 1 || n < 1 || r_max < 1)
    throw std::invalid_argument("exact_g: need m, n, r_max >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int64_t> params{m, n, r_max};
  SearchResult<GridColoring> res;

  int start_r = 1;
  int64_t nodes_prev = 0;
  std::optional<Checkpoint> cp = load_checkpoint(opts.checkpoint_path, "g", params);
  if (cp) {
    start_r = cp->outer;
    nodes_prev = cp->nodes;
    if (start_r < 1 || start_r > r_max)
      throw std::invalid_argument("checkpoint: outer value out of range");
  }

  int64_t nodes_new = 0;
  for (int r = start_r; r <= r_max; ++r) {
    GridProblem prob(m, n, r);
    DfsFrontier f;
    f.reset(prob.V);
    if (cp && r == start_r) restore_frontier(f, *cp, prob.V, r);
    RunStatus st = run_dfs(prob, f, opts.node_budget, nodes_new);
    if (st == RunStatus::Budget) {
      Checkpoint out{"g", params, r, nodes_prev + nodes_new, f};
      if (!opts.checkpoint_path.empty())
        write_checkpoint(opts.checkpoint_path, out);
      res.lo = r;
      res.hi = -1;
      res.stats.nodes = nodes_prev + nodes_new;
      res.stats.elapsed_ms = ms_since(t0);
      return res;
    }
    if (st == RunStatus::Sat) {
      GridColoring g = prob.build(f.val);
      if (find_alternating_rectangle(g))
        throw std::logic_error("exact_g: certificate verification failed");
      res.decided = true;
      res.value = r;
      res.lo = res.hi = r;
      res.certificate = std::move(g);
      res.exhausted = true;
      res.stats.nodes = nodes_prev + nodes_new;
      res.stats.elapsed_ms = ms_since(t0);
      drop_checkpoint(opts.checkpoint_path);
      return res;
    }
  }
  res.lo = r_max + 1;
  res.hi = -1;
  res.exhausted = true;
  res.stats.nodes = nodes_prev + nodes_new;
  res.stats.elapsed_ms = ms_since(t0);
  drop_checkpoint(opts.checkpoint_path);
  return res;
}

SearchResult<GridColoring> exact_G(int r, int n_max, const SolveOptions& opts) {
  if (r < 1 || n_max < 1)
    throw std::invalid_argument("exact_G: need r, n_max >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int64_t> params{r, n_max};
  SearchResult<GridColoring> res;

  // Pigeonhole upper bound r^C(r+1,2)+1 (open when it overflows int).
  int hi_bound = -1;
  {
    int64_t b = 1;
    bool huge = false;
    for (int64_t i = 0; i < binom(r + 1, 2); ++i) {
      b *= r;
      if (b > std::numeric_limits<int>::max() - 1) {
        huge = true;
        break;
      }
    }
    if (!huge) hi_bound = int(b + 1);
  }

  int start_n = 1;
  int64_t nodes_prev = 0;
  std::optional<Checkpoint> cp = load_checkpoint(opts.checkpoint_path, "G", params);
  if (cp) {
    start_n = cp->outer;
    nodes_prev = cp->nodes;
    if (start_n < 1 || start_n > n_max)
      throw std::invalid_argument("checkpoint: outer value out of range");
  }

  int64_t nodes_total = nodes_prev;
  std::optional<GridColoring> last_sat;
  for (int n = start_n; n <= n_max; ++n) {
    GridProblem prob(n, n, r);
    DfsFrontier f;
    f.reset(prob.V);
    if (cp && n == start_n) restore_frontier(f, *cp, prob.V, r);
    int64_t nodes_new = 0;  // budget applies per grid decision
    RunStatus st = run_dfs(prob, f, opts.node_budget, nodes_new);
    nodes_total += nodes_new;
    if (st == RunStatus::Budget) {
      Checkpoint out{"G", params, n, nodes_total, f};
      if (!opts.checkpoint_path.empty())
        write_checkpoint(opts.checkpoint_path, out);
      res.lo = n;
      res.hi = hi_bound;
      res.stats.nodes = nodes_total;
      res.stats.elapsed_ms = ms_since(t0);
      return res;
    }
    if (st == RunStatus::Unsat) {
      res.decided = true;
      res.value = n;
      res.lo = res.hi = n;
      res.exhausted = true;
      if (!last_sat && n >= 2) {
        // Resumed runs may land here without the previous certificate;
        // rebuild it with a fresh decision at n-1.
        GridProblem prev(n - 1, n - 1, r);
        DfsFrontier pf;
        pf.reset(prev.V);
        int64_t extra = 0;
        if (run_dfs(prev, pf, opts.node_budget, extra) == RunStatus::Sat)
          last_sat = prev.build(pf.val);
        nodes_total += extra;
      }
      if (last_sat) {
        if (find_alternating_rectangle(*last_sat))
          throw std::logic_error("exact_G: certificate verification failed");
        res.certificate = std::move(last_sat);
      }
      res.stats.nodes = nodes_total;
      res.stats.elapsed_ms = ms_since(t0);
      drop_checkpoint(opts.checkpoint_path);
      return res;
    }
    last_sat = prob.build(f.val);
  }
  res.lo = n_max + 1;
  res.hi = hi_bound;
  res.exhausted = true;
  res.stats.nodes = nodes_total;
  res.stats.elapsed_ms = ms_since(t0);
  drop_checkpoint(opts.checkpoint_path);
  return res;
}

SearchResult<GraphColoring> exact_f(int n, int p, int q, int k, int r_max,
                                    const SolveOptions& opts) {
  if (n < 1 || k < 1 || k > n || p < k || q < 1 || r_max < 1)
    throw std::invalid_argument(
        "exact_f: need 1 <= k <= n, p >= k, q >= 1, r_max >= 1");
  if (r_max > 63) throw std::invalid_argument("exact_f: r_max > 63");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int64_t> params{n, p, q, k, r_max};
  SearchResult<GraphColoring> res;

  if (p <= n && binom(p, k) < q) {
    // Impossible for every palette: p vertices only carry C(p,k) edges.
    res.lo = r_max + 1;
    res.hi = -1;
    res.exhausted = true;
    res.stats.elapsed_ms = ms_since(t0);
    drop_checkpoint(opts.checkpoint_path);
    return res;
  }

  int start_r = 1;
  int64_t nodes_prev = 0;
  std::optional<Checkpoint> cp = load_checkpoint(opts.checkpoint_path, "f", params);
  if (cp) {
    start_r = cp->outer;
    nodes_prev = cp->nodes;
    if (start_r < 1 || start_r > r_max)
      throw std::invalid_argument("checkpoint: outer value out of range");
  }

  int64_t nodes_new = 0;
  for (int r = start_r; r <= r_max; ++r) {
    HyperProblem prob(n, k, p, q, r);
    DfsFrontier f;
    f.reset(prob.V);
    if (cp && r == start_r) restore_frontier(f, *cp, prob.V, r);
    RunStatus st = run_dfs(prob, f, opts.node_budget, nodes_new);
    if (st == RunStatus::Budget) {
      Checkpoint out{"f", params, r, nodes_prev + nodes_new, f};
      if (!opts.checkpoint_path.empty())
        write_checkpoint(opts.checkpoint_path, out);
      res.lo = r;
      res.hi = -1;
      res.stats.nodes = nodes_prev + nodes_new;
      res.stats.elapsed_ms = ms_since(t0);
      return res;
    }
    if (st == RunStatus::Sat) {
      GraphColoring c = prob.build(f.val);
      if (verify_pq(c, p, q))
        throw std::logic_error("exact_f: certificate verification failed");
      res.decided = true;
      res.value = r;
      res.lo = res.hi = r;
      res.certificate = std::move(c);
      res.exhausted = true;
      res.stats.nodes = nodes_prev + nodes_new;
      res.stats.elapsed_ms = ms_since(t0);
      drop_checkpoint(opts.checkpoint_path);
      return res;
    }
  }
  res.lo = r_max + 1;
  res.hi = -1;
  res.exhausted = true;
  res.stats.nodes = nodes_prev + nodes_new;
  res.stats.elapsed_ms = ms_since(t0);
  drop_checkpoint(opts.checkpoint_path);
  return res;
}

}  // namespace gridramsey
