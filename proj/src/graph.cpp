#include "gridramsey/graph.hpp"

#include <stdexcept>

namespace gridramsey {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), DynBitset(n)) {
  if (n < 0) throw std::invalid_argument("SimpleGraph: negative order");
}

bool SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("SimpleGraph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("SimpleGraph::add_edge: loop");
  if (adj_[u].test(v)) return false;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
  return true;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    adj_[u].for_each_bit([&](int v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

void SimpleGraph::merge(const SimpleGraph& o) {
  if (o.n_ != n_)
    throw std::invalid_argument("SimpleGraph::merge: order mismatch");
  for (int u = 0; u < n_; ++u) adj_[u] |= o.adj_[u];
  edge_count_ = 0;
  for (int u = 0; u < n_; ++u) edge_count_ += adj_[u].count();
  edge_count_ /= 2;
}

BipartiteResult is_bipartite(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1),
      depth(static_cast<size_t>(n), 0);
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(n));

  for (int start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    queue.clear();
    queue.push_back(start);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      int conflict = -1;
      g.row(u).for_each_bit([&](int v) {
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (side[v] == side[u] && conflict == -1) {
          conflict = v;
        }
      });
      if (conflict != -1) {
        // Walk u and conflict up to their meeting point; the two paths plus
        // the u-conflict edge form an odd cycle of distinct vertices.
        int a = u, b = conflict;
        std::vector<int> pa, pb;
        while (depth[a] > depth[b]) {
          pa.push_back(a);
          a = parent[a];
        }
        while (depth[b] > depth[a]) {
          pb.push_back(b);
          b = parent[b];
        }
        while (a != b) {
          pa.push_back(a);
          pb.push_back(b);
          a = parent[a];
          b = parent[b];
        }
        pa.push_back(a);  // meeting vertex
        BipartiteResult res;
        res.odd_cycle = std::move(pa);
        for (auto it = pb.rbegin(); it != pb.rend(); ++it)
          res.odd_cycle.push_back(*it);
        return res;
      }
    }
  }
  BipartiteResult res;
  res.two_coloring = std::move(side);
  return res;
}

}  // namespace gridramsey
