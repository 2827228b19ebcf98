#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "pdpm/multigraph.hpp"

namespace pdpm {

// Dinic's algorithm on an undirected integer-capacity network. Each vertex
// pair with multiplicity m becomes a pair of twin arcs with capacity m in
// both directions, which is equivalent to m unit-capacity parallel copies.
class DinicFlow {
 public:
  explicit DinicFlow(const Multigraph& g) : n_(g.vertex_count()), head_(n_, -1) {
    for (const auto& [p, m] : g.adjacency()) add_undirected(p.first, p.second, m);
  }

  long long max_flow(Vertex s, Vertex t) {
    if (s == t) throw domain_error("max_flow: source equals sink");
    reset();
    long long total = 0;
    while (bfs(s, t)) {
      it_.assign(n_, 0);
      for (int v = 0; v < n_; ++v) it_[v] = head_[v];
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    return total;
  }

  // After max_flow: the set of vertices reachable from s in the residual
  // network, i.e. the s-side shore of a minimum cut.
  VertexSet min_cut_side(Vertex s) const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = next_[e]) {
        if (cap_[e] > flow_[e] && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          q.push(to_[e]);
        }
      }
    }
    VertexSet side;
    for (int v = 0; v < n_; ++v)
      if (seen[v]) side.push_back(v);
    return side;
  }

 private:
  void add_undirected(int u, int v, long long c) {
    add_arc(u, v, c);
    add_arc(v, u, c);
  }

  void add_arc(int u, int v, long long c) {
    to_.push_back(v);
    cap_.push_back(c);
    flow_.push_back(0);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  void reset() { std::fill(flow_.begin(), flow_.end(), 0); }

  bool bfs(int s, int t) {
    level_.assign(n_, -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = next_[e]) {
        if (cap_[e] > flow_[e] && level_[to_[e]] == -1) {
          level_[to_[e]] = level_[v] + 1;
          q.push(to_[e]);
        }
      }
    }
    return level_[t] != -1;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& e = it_[v]; e != -1; e = next_[e]) {
      int u = to_[e];
      if (cap_[e] > flow_[e] && level_[u] == level_[v] + 1) {
        long long pushed = dfs(u, t, std::min(limit, cap_[e] - flow_[e]));
        if (pushed > 0) {
          flow_[e] += pushed;
          flow_[e ^ 1] -= pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  int n_;
  std::vector<int> head_, next_, to_, level_, it_;
  std::vector<long long> cap_, flow_;
};

// Value of a minimum s-t cut, counting edge copies.
inline long long max_flow(const Multigraph& g, Vertex s, Vertex t) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    throw domain_error("max_flow: unknown vertex");
  DinicFlow f(g);
  return f.max_flow(s, t);
}

}  // namespace pdpm
